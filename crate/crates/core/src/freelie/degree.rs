use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Zero};

use super::lyndon::{lyndon_words, LyndonWord};
use super::tensor::{index_word, word_index, TensorPoly};
use crate::error::{Error, Result};
use crate::qlinalg::{MatrixQ, Rational, SparseVec};

pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_MAX_MONOMIALS: usize = 1_000_000;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(0);
static MAX_MONOMIALS: AtomicUsize = AtomicUsize::new(0);

/// Caps on the tensor degree and on the number of monomials `d^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_monomials: usize,
}

impl Limits {
    /// Process-wide limits: values set with [`set_limits`], else the
    /// `CURALG_MAX_MONOMIALS` environment variable, else the defaults.
    pub fn current() -> Self {
        let deg = MAX_DEGREE.load(Ordering::Relaxed);
        let mono = MAX_MONOMIALS.load(Ordering::Relaxed);
        let env_mono = || {
            std::env::var("CURALG_MAX_MONOMIALS")
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(DEFAULT_MAX_MONOMIALS)
        };
        Self {
            max_degree: if deg == 0 { DEFAULT_MAX_DEGREE } else { deg },
            max_monomials: if mono == 0 { env_mono() } else { mono },
        }
    }

    pub fn check(&self, d: usize, r: usize) -> Result<()> {
        if r > self.max_degree {
            return Err(Error::DegreeLimit { degree: r, cap: self.max_degree });
        }
        let monomials = monomial_count(d, r);
        if monomials > self.max_monomials {
            return Err(Error::SizeLimit { monomials, cap: self.max_monomials });
        }
        Ok(())
    }
}

pub fn set_limits(limits: Limits) {
    MAX_DEGREE.store(limits.max_degree, Ordering::Relaxed);
    MAX_MONOMIALS.store(limits.max_monomials, Ordering::Relaxed);
}

/// `d^r`, saturating.
pub fn monomial_count(d: usize, r: usize) -> usize {
    (0..r).fold(1usize, |acc, _| acc.saturating_mul(d))
}

/// The Lyndon basis of `F^r` on `d` letters with its expansion into `T^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeDegree {
    d: usize,
    r: usize,
    words: Vec<LyndonWord>,
    expansion: Vec<SparseVec>,
    lead: HashMap<usize, usize>,
}

/// Enumerates Lyndon words of length `r` and expands their standard
/// bracketings.
pub fn lyndon_degree(d: usize, r: usize) -> Result<FreeDegree> {
    lyndon_degree_with(d, r, &Limits::current())
}

pub fn lyndon_degree_with(d: usize, r: usize, limits: &Limits) -> Result<FreeDegree> {
    if d == 0 || r == 0 {
        return Err(Error::DimensionMismatch("free Lie degrees need d ≥ 1 and r ≥ 1".into()));
    }
    limits.check(d, r)?;
    let mut memo = HashMap::new();
    let mut words = Vec::new();
    let mut expansion = Vec::new();
    let mut lead = HashMap::new();
    for letters in lyndon_words(d, r) {
        let p = expand(&letters, d, &mut memo);
        debug_assert_eq!(p.leading().map(|(i, c)| (*i, c.is_one())), Some((word_index(&letters, d), true)));
        lead.insert(word_index(&letters, d), words.len());
        words.push(LyndonWord::new(letters).expect("generated words are Lyndon"));
        expansion.push(p);
    }
    Ok(FreeDegree { d, r, words, expansion, lead })
}

/// Monomial coordinates of the standard bracketing of a Lyndon word.
fn expand(w: &[usize], d: usize, memo: &mut HashMap<Vec<usize>, SparseVec>) -> SparseVec {
    if w.len() == 1 {
        return SparseVec::unit(w[0]);
    }
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let k = super::lyndon::standard_split(w);
    let (u, v) = w.split_at(k);
    let pu = expand(u, d, memo);
    let pv = expand(v, d, memo);
    let p = concat_commutator(&pu, u.len(), &pv, v.len(), d);
    memo.insert(w.to_vec(), p.clone());
    p
}

/// `a ⊗ b - b ⊗ a` in monomial coordinates.
pub(crate) fn concat_commutator(a: &SparseVec, ra: usize, b: &SparseVec, rb: usize, d: usize) -> SparseVec {
    let sa = monomial_count(d, ra);
    let sb = monomial_count(d, rb);
    let mut pairs = Vec::with_capacity(2 * a.nnz() * b.nnz());
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            let xy = x * y;
            pairs.push((i * sb + j, xy.clone()));
            pairs.push((j * sa + i, -xy));
        }
    }
    SparseVec::from_pairs(pairs)
}

impl FreeDegree {
    pub fn algebra_dim(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    /// `dim F^r`.
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn monomials(&self) -> usize {
        monomial_count(self.d, self.r)
    }

    pub fn words(&self) -> &[LyndonWord] {
        &self.words
    }

    /// Row `i` is the expansion of word `i` in monomial coordinates.
    pub fn expansion_rows(&self) -> &[SparseVec] {
        &self.expansion
    }

    /// Dense `dim F^r × d^r` expansion matrix.
    pub fn expansion_matrix(&self) -> MatrixQ {
        MatrixQ::from_sparse_rows(&self.expansion, self.monomials())
    }

    pub fn expansion_poly(&self, i: usize) -> TensorPoly {
        TensorPoly::from_sparse(self.d, self.r, &self.expansion[i])
    }

    /// `Σ c_i P_{w_i}` in monomial coordinates.
    pub fn expand_lyndon(&self, c: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, ci) in c.iter() {
            for (m, v) in self.expansion[*i].iter() {
                *acc.entry(*m).or_insert_with(Rational::zero) += ci * v;
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// Lyndon coordinates of a tensor in monomial coordinates. Each expansion
    /// is its own word plus larger words, so the smallest surviving monomial
    /// must be a Lyndon word at every step.
    pub fn tensor_to_lyndon_sparse(&self, p: &SparseVec) -> Result<SparseVec> {
        let mut rest: BTreeMap<usize, Rational> = p.iter().cloned().collect();
        let mut coords = Vec::new();
        while let Some((&m, c)) = rest.iter().next() {
            let c = c.clone();
            let Some(&row) = self.lead.get(&m) else {
                return Err(Error::NotInF);
            };
            for (k, v) in self.expansion[row].iter() {
                let e = rest.entry(*k).or_insert_with(Rational::zero);
                *e -= &c * v;
                if e.is_zero() {
                    rest.remove(k);
                }
            }
            coords.push((row, c));
        }
        Ok(SparseVec::from_pairs(coords))
    }

    pub fn tensor_to_lyndon(&self, p: &TensorPoly) -> Result<Vec<Rational>> {
        if p.degree() != self.r {
            return Err(Error::DimensionMismatch(format!("degree {} tensor for F^{}", p.degree(), self.r)));
        }
        if p.terms().keys().flatten().any(|&c| c >= self.d) {
            return Err(Error::DimensionMismatch("letter out of range".into()));
        }
        Ok(self.tensor_to_lyndon_sparse(&p.to_sparse(self.d))?.to_dense(self.dim()))
    }

    pub fn word_of_monomial(&self, m: usize) -> Vec<usize> {
        index_word(m, self.d, self.r)
    }
}

pub fn tensor_to_lyndon(fd: &FreeDegree, p: &TensorPoly) -> Result<Vec<Rational>> {
    fd.tensor_to_lyndon(p)
}
