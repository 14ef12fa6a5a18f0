/// A Lyndon word together with its standard factorization `w = u v`, where
/// `v` is the longest proper Lyndon suffix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord {
    letters: Vec<usize>,
    split: usize,
}

impl LyndonWord {
    /// `None` unless `letters` is a Lyndon word.
    pub fn new(letters: Vec<usize>) -> Option<Self> {
        if !is_lyndon(&letters) {
            return None;
        }
        let split = standard_split(&letters);
        Some(Self { letters, split })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// `(u, v)`; `None` for single letters.
    pub fn factors(&self) -> Option<(&[usize], &[usize])> {
        (self.letters.len() > 1).then(|| self.letters.split_at(self.split))
    }
}

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[usize]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|k| {
        let rotated = w[k..].iter().chain(&w[..k]);
        w.iter().lt(rotated)
    })
}

/// Position where the longest proper Lyndon suffix starts.
pub(crate) fn standard_split(w: &[usize]) -> usize {
    if w.len() < 2 {
        return w.len();
    }
    (1..w.len()).find(|&k| is_lyndon(&w[k..])).expect("single letters are Lyndon")
}

/// All Lyndon words of length `r` over `0..d` in lexicographic order
/// (Duval's generation algorithm).
pub fn lyndon_words(d: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d == 0 || r == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == r {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < r {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(d - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out
}
