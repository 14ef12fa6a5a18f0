//! Exact rational linear algebra: dense and sparse matrices, canonical
//! reduced row-echelon forms, kernels, linear solves and subspace arithmetic.
//!
//! Everything is exact; there is no floating point anywhere in the crate.
//! Elimination works on sparse rows, which keeps the systems produced by
//! intertwiner and tensor computations cheap.

mod echelon;
mod matrix;
mod rational;
mod sparse;
mod subspace;

pub use echelon::{kernel_vectors, Echelon};
pub use matrix::{MatrixQ, Rref};
pub use rational::{format_rational, one, parse_rational, q, q_frac, zero, Rational};
pub use sparse::SparseVec;
pub use subspace::{Subspace, SubspacePair};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduced row-echelon form, pivot columns and rank of `m`.
pub fn rref(m: &MatrixQ) -> Rref {
    m.rref()
}

/// `{v : m v = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel_basis(m: &MatrixQ) -> Subspace {
    kernel_of_rows(m.ncols(), m.sparse_rows())
}

/// Kernel of the map with the given sparse rows.
pub fn kernel_of_rows<I: IntoIterator<Item = SparseVec>>(ncols: usize, rows: I) -> Subspace {
    Subspace::span(ncols, kernel_vectors(ncols, rows))
}

/// Some `x` with `m x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve(m: &MatrixQ, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            m.nrows()
        )));
    }
    let n = m.ncols();
    let rows = (0..m.nrows()).map(|i| {
        let mut r = m.sparse_row(i);
        if !b[i].is_zero() {
            r = r.add_scaled(&Rational::one(), &SparseVec::from_pairs([(n, b[i].clone())]));
        }
        r
    });
    let (reduced, pivots) = Echelon::from_rows(n + 1, rows).into_sorted();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, p) in reduced.iter().zip(&pivots) {
        x[*p] = row.get(n);
    }
    Ok(Some(x))
}

/// Sum, intersection, containment (`b ⊆ a`) and `dim a - dim(a ∩ b)`.
pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspacePair> {
    a.pair_ops(b)
}
