use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::qlinalg::{Rational, SparseVec};

/// A homogeneous element of `T^r` as a sparse map from index words of
/// length `r` to coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    degree: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl TensorPoly {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    /// Sums repeated words and drops zeros; every word must have length `degree`.
    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, Rational)>>(degree: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(Error::DimensionMismatch(format!("word {w:?} in a degree-{degree} tensor")));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn monomial(word: Vec<usize>) -> Self {
        let mut p = Self::zero(word.len());
        p.add_term(word, Rational::from_integer(1.into()));
        p
    }

    /// Degree-1 tensor with the given coordinates.
    pub fn from_vector(x: &[Rational]) -> Self {
        let mut p = Self::zero(1);
        for (i, c) in x.iter().enumerate() {
            p.add_term(vec![i], c.clone());
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Rational) {
        debug_assert_eq!(word.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&self, c: &Rational, other: &TensorPoly) -> Self {
        let mut out = self.clone();
        for (w, v) in &other.terms {
            out.add_term(w.clone(), c * v);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), c * v);
        }
        out
    }

    /// Concatenation product in `T`.
    pub fn mul(&self, other: &TensorPoly) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// `x ⊗ y - y ⊗ x`.
    pub fn commutator(&self, other: &TensorPoly) -> Self {
        let one = Rational::from_integer(1.into());
        self.mul(other).add_scaled(&-one, &other.mul(self))
    }

    /// Coordinates in the monomial basis, word index read base `d` with the
    /// first letter most significant.
    pub fn to_sparse(&self, d: usize) -> SparseVec {
        SparseVec::from_pairs(self.terms.iter().map(|(w, c)| (word_index(w, d), c.clone())))
    }

    pub fn from_sparse(d: usize, degree: usize, v: &SparseVec) -> Self {
        let mut p = Self::zero(degree);
        for (i, c) in v.iter() {
            p.add_term(index_word(*i, d, degree), c.clone());
        }
        p
    }
}

pub fn word_index(w: &[usize], d: usize) -> usize {
    w.iter().fold(0, |acc, &c| acc * d + c)
}

pub fn index_word(mut i: usize, d: usize, r: usize) -> Vec<usize> {
    let mut w = vec![0; r];
    for k in (0..r).rev() {
        w[k] = i % d;
        i /= d;
    }
    w
}

/// Diagonal derivation `y₁⊗…⊗y_r ↦ Σ y₁⊗…⊗[x, y_i]⊗…⊗y_r`.
pub fn ad_t(l: &LieAlgebra, x: &[Rational], p: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero(p.degree());
    for (w, c) in p.terms() {
        for (pos, &letter) in w.iter().enumerate() {
            for (a, xa) in x.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (k, b) in l.bracket(a, letter).iter() {
                    let mut nw = w.clone();
                    nw[pos] = *k;
                    out.add_term(nw, c * xa * b);
                }
            }
        }
    }
    out
}

/// `ad_T` of the basis element `a` on monomial coordinates of degree `r`.
pub(crate) fn ad_t_sparse(l: &LieAlgebra, a: usize, v: &SparseVec, r: usize) -> SparseVec {
    let d = l.dim();
    let mut pairs = Vec::new();
    for (idx, c) in v.iter() {
        let w = index_word(*idx, d, r);
        let mut place = 1usize;
        for pos in (0..r).rev() {
            let letter = w[pos];
            let base = idx - letter * place;
            for (k, b) in l.bracket(a, letter).iter() {
                pairs.push((base + k * place, c * b));
            }
            place *= d;
        }
    }
    SparseVec::from_pairs(pairs)
}
