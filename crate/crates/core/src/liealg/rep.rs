use std::sync::Arc;

use num_traits::{One, Zero};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::qlinalg::{kernel_of_rows, MatrixQ, Rational, SparseVec, Subspace};

/// A representation: one `dim × dim` matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    matrices: Vec<MatrixQ>,
}

impl Rep {
    /// Checks shapes and the bracket identity on all basis pairs.
    pub fn new(algebra: Arc<LieAlgebra>, matrices: Vec<MatrixQ>) -> Result<Self> {
        let rep = Self::from_parts(algebra, matrices)?;
        if let Some((i, j)) = rep.bracket_failure() {
            return Err(Error::C1Fails(i, j));
        }
        Ok(rep)
    }

    /// Shape checks only.
    pub fn from_parts(algebra: Arc<LieAlgebra>, matrices: Vec<MatrixQ>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        let dim = matrices.first().map_or(0, MatrixQ::nrows);
        if matrices.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch("representation matrices differ in shape".into()));
        }
        Ok(Self { algebra, dim, matrices })
    }

    /// First basis pair `(i, j)` with `ρ([x_i, x_j]) ≠ [ρ(x_i), ρ(x_j)]`.
    pub fn bracket_failure(&self) -> Option<(usize, usize)> {
        let d = self.algebra.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.matrices[i].commutator(&self.matrices[j]);
                let rhs = self.image_sparse(self.algebra.bracket(i, j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let matrices = vec![MatrixQ::zeros(dim, dim); algebra.dim()];
        Self { algebra, dim, matrices }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[MatrixQ] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &MatrixQ {
        &self.matrices[i]
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn image(&self, x: &[Rational]) -> MatrixQ {
        lin_comb(&self.matrices, x, self.dim)
    }

    pub fn image_sparse(&self, x: &SparseVec) -> MatrixQ {
        let mut out = MatrixQ::zeros(self.dim, self.dim);
        for (k, c) in x.iter() {
            out = &out + &self.matrices[*k].scale(c);
        }
        out
    }

    /// `ρ*(x) = -ρ(x)^T`.
    pub fn dual(&self) -> Self {
        let matrices = self.matrices.iter().map(|m| -&m.transpose()).collect();
        Self { algebra: self.algebra.clone(), dim: self.dim, matrices }
    }

    /// `ρ₁ ⊗ 1 + 1 ⊗ ρ₂` on `V₁ ⊗ V₂`, index `i * dim V₂ + j`.
    pub fn tensor(&self, other: &Rep) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let matrices = tensor_mats(&self.matrices, &other.matrices, self.dim, other.dim);
        Ok(Self { algebra: self.algebra.clone(), dim: self.dim * other.dim, matrices })
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| MatrixQ::block_diag(a, b))
            .collect();
        Ok(Self { algebra: self.algebra.clone(), dim: self.dim + other.dim, matrices })
    }

    /// `Hom(V₁, V₂)` with `x·φ = ρ₂(x)φ - φρ₁(x)`, vectorized row-major
    /// (`φ[r][c]` at `r * dim V₁ + c`).
    pub fn hom(v1: &Rep, v2: &Rep) -> Result<Self> {
        same_algebra(&v1.algebra, &v2.algebra)?;
        let (n1, n2) = (v1.dim, v2.dim);
        let i1 = MatrixQ::identity(n1);
        let i2 = MatrixQ::identity(n2);
        let matrices = v1
            .matrices
            .iter()
            .zip(&v2.matrices)
            .map(|(a, b)| &b.kron(&i1) - &i2.kron(&a.transpose()))
            .collect();
        Ok(Self { algebra: v1.algebra.clone(), dim: n1 * n2, matrices })
    }
}

pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Rep {
    Rep::trivial(algebra, dim)
}

/// `ad(x_i)` with columns `[x_i, x_j]`.
pub fn adjoint_rep(algebra: &Arc<LieAlgebra>) -> Rep {
    let d = algebra.dim();
    let matrices = (0..d)
        .map(|i| {
            let mut m = MatrixQ::zeros(d, d);
            for j in 0..d {
                for (k, c) in algebra.bracket(i, j).iter() {
                    m[(*k, j)] = c.clone();
                }
            }
            m
        })
        .collect();
    Rep { algebra: algebra.clone(), dim: d, matrices }
}

pub(crate) fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("representations of different algebras".into()))
    }
}

pub fn lin_comb(mats: &[MatrixQ], x: &[Rational], n: usize) -> MatrixQ {
    let mut out = MatrixQ::zeros(n, mats.first().map_or(n, MatrixQ::ncols));
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

pub(crate) fn tensor_mats(a: &[MatrixQ], b: &[MatrixQ], n1: usize, n2: usize) -> Vec<MatrixQ> {
    let i1 = MatrixQ::identity(n1);
    let i2 = MatrixQ::identity(n2);
    a.iter().zip(b).map(|(x, y)| &x.kron(&i2) + &i1.kron(y)).collect()
}

/// Linear conditions on a row-major `n2 × n1` matrix `φ` expressing
/// `φ a1[k] = a2[k] φ` for every `k`.
pub fn intertwiner_rows(a1: &[MatrixQ], a2: &[MatrixQ], n1: usize, n2: usize) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for (x1, x2) in a1.iter().zip(a2) {
        for r in 0..n2 {
            for c in 0..n1 {
                let mut pairs = Vec::new();
                for k in 0..n2 {
                    let v = &x2[(r, k)];
                    if !v.is_zero() {
                        pairs.push((k * n1 + c, v.clone()));
                    }
                }
                for k in 0..n1 {
                    let v = &x1[(k, c)];
                    if !v.is_zero() {
                        pairs.push((r * n1 + k, -v));
                    }
                }
                let row = SparseVec::from_pairs(pairs);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// `Hom_L(V₁, V₂)` inside row-major `dim V₂ × dim V₁` matrices.
pub fn hom_space(r1: &Rep, r2: &Rep) -> Result<Subspace> {
    same_algebra(&r1.algebra, &r2.algebra)?;
    let rows = intertwiner_rows(&r1.matrices, &r2.matrices, r1.dim, r2.dim);
    Ok(kernel_of_rows(r1.dim * r2.dim, rows))
}

/// Unpacks a row-major vectorized matrix.
pub fn unvec(v: &[Rational], rows: usize, cols: usize) -> MatrixQ {
    MatrixQ::from_vec(rows, cols, v.to_vec())
}

/// The invariant symmetric form of `ρ`, normalized so that its first nonzero
/// entry is 1.
pub fn invariant_symmetric_form(rho: &Rep) -> Result<MatrixQ> {
    let n = rho.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(SparseVec::from_pairs([(i * n + j, Rational::one()), (j * n + i, -Rational::one())]));
        }
    }
    for m in &rho.matrices {
        for i in 0..n {
            for j in 0..n {
                let mut pairs = Vec::new();
                for k in 0..n {
                    if !m[(k, i)].is_zero() {
                        pairs.push((k * n + j, m[(k, i)].clone()));
                    }
                    if !m[(k, j)].is_zero() {
                        pairs.push((i * n + k, m[(k, j)].clone()));
                    }
                }
                let row = SparseVec::from_pairs(pairs);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let forms = kernel_of_rows(n * n, rows);
    match forms.dim() {
        0 => return Err(Error::NoForm),
        1 => {}
        k => return Err(Error::NotUnique(k)),
    }
    // Canonical rows have leading coefficient 1 already.
    let b = unvec(&forms.basis()[0].to_dense(n * n), n, n);
    if b.det().is_zero() {
        return Err(Error::Degenerate);
    }
    Ok(b)
}
