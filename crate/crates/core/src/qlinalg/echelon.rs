use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Rational, SparseVec};

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are kept fully reduced at all times: every pivot column is zero in
/// every other row, and each pivot entry is 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec>>(ncols: usize, rows: I) -> Self {
        let mut e = Self::new(ncols);
        for row in rows {
            e.insert(row);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Normal form of `v` modulo the row space: entries at pivot columns are
    /// eliminated, so the result is supported on free columns only.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (col, val) in v.iter() {
            if let Some(&r) = self.pivot_row.get(col) {
                out = out.add_scaled(&-val.clone(), &self.rows[r]);
            }
        }
        out
    }

    /// Adds `v`; returns false when it was already in the row space.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((col, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = if lead.is_one() { r } else { r.scale(&lead.recip()) };
        for row in self.rows.iter_mut() {
            let c = row.get(col);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        self.pivot_row.insert(col, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Rows in canonical order (increasing pivot column) with their pivots.
    pub fn into_sorted(self) -> (Vec<SparseVec>, Vec<usize>) {
        let mut rows: Vec<(usize, SparseVec)> = self
            .rows
            .into_iter()
            .map(|r| (r.leading().expect("nonzero row").0, r))
            .collect();
        rows.sort_by_key(|(p, _)| *p);
        let pivots = rows.iter().map(|(p, _)| *p).collect();
        (rows.into_iter().map(|(_, r)| r).collect(), pivots)
    }

    pub fn sorted_rows(&self) -> (Vec<SparseVec>, Vec<usize>) {
        self.clone().into_sorted()
    }
}

/// Kernel of the linear map whose matrix has the given rows (as sparse rows
/// over `ncols` columns). The returned vectors form a basis but are not yet in
/// canonical form.
pub fn kernel_vectors(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let (rref, pivots) = Echelon::from_rows(ncols, rows).into_sorted();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    // Column f of the reduced matrix, gathered once.
    let mut columns: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
    for (row, p) in rref.iter().zip(&pivots) {
        for (c, v) in row.iter() {
            if *c != *p {
                columns.entry(*c).or_default().push((*p, -v.clone()));
            }
        }
    }
    (0..ncols)
        .filter(|c| !is_pivot[*c])
        .map(|f| {
            let mut pairs = columns.remove(&f).unwrap_or_default();
            pairs.push((f, Rational::one()));
            SparseVec::from_pairs(pairs)
        })
        .collect()
}
