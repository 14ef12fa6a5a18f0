use num_traits::Zero;

use super::{Echelon, MatrixQ, Rational, SparseVec};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n` stored by its canonical reduced row-echelon
/// basis. Two subspaces are equal iff their bases are entrywise equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

/// Everything `subspace_ops` reports about a pair `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePair {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// `b ⊆ a`.
    pub contains: bool,
    /// `dim a - dim (a ∩ b)`, the dimension of `a` modulo `b`.
    pub quotient_dim: usize,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(SparseVec::unit))
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(ambient_dim: usize, vectors: I) -> Self {
        Self::from_echelon(Echelon::from_rows(ambient_dim, vectors))
    }

    pub fn span_dense(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        Self::span(ambient_dim, vectors.iter().map(|v| SparseVec::from_dense(v)))
    }

    pub fn from_echelon(e: Echelon) -> Self {
        let n = e.ncols();
        let (rows, pivots) = e.into_sorted();
        Self { ambient_dim: n, rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis_dense(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.to_dense(self.ambient_dim)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> MatrixQ {
        MatrixQ::from_sparse_rows(&self.rows, self.ambient_dim)
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Normal form of `v` modulo this subspace (supported on free columns).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out.get(p);
            if !c.is_zero() {
                out = out.add_scaled(&-c, row);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_dense(&self, v: &[Rational]) -> bool {
        self.contains_vector(&SparseVec::from_dense(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.rows.iter().all(|r| self.contains_vector(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = Echelon::from_rows(self.ambient_dim, self.rows.iter().cloned());
        for r in &other.rows {
            e.insert(r.clone());
        }
        Ok(Self::from_echelon(e))
    }

    /// Zassenhaus: reduce `[a | a]` stacked on `[b | 0]`; rows whose left half
    /// vanishes carry the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let doubled = self.rows.iter().map(|r| {
            SparseVec::from_pairs(
                r.iter().map(|(i, v)| (*i, v.clone())).chain(r.iter().map(|(i, v)| (i + n, v.clone()))),
            )
        });
        let e = Echelon::from_rows(2 * n, doubled.chain(other.rows.iter().cloned()));
        let (rows, pivots) = e.into_sorted();
        let right = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r.map_indices(|i| i - n));
        Ok(Self::span(n, right))
    }

    pub fn pair_ops(&self, other: &Subspace) -> Result<SubspacePair> {
        let intersection = self.intersection(other)?;
        Ok(SubspacePair {
            sum: self.sum(other)?,
            contains: self.contains(other)?,
            quotient_dim: self.dim() - intersection.dim(),
            intersection,
        })
    }
}
