use serde::Serialize;

use crate::curmod::{
    associative_nilpotency, dual_module, evaluation_module, hom_module_space, tensor_module, verify_pair, Certificate, PairModule,
};
use crate::error::{Error, Result};
use crate::freelie::ker_tau_lyndon;
use crate::liealg::{adjoint_rep, hom_space, same_algebra, Rep};
use crate::qlinalg::{kernel_of_rows, zero, MatrixQ, Rational, SparseVec, Subspace};

#[cfg(test)]
mod tests;

pub const DEFAULT_WINDOW: usize = 3;

/// Solutions of (E1) and (E2) up to degree `verified_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESpace {
    pub space: Subspace,
    pub verified_to: usize,
    /// No cut over the last `window` degrees.
    pub stabilized: bool,
    /// Both `η`s are nilpotent enough that every later condition is vacuous.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtResult {
    pub e_space: Subspace,
    pub e0_space: Subspace,
    pub ext_dim: usize,
    pub verified_to: usize,
    pub stabilized: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtSummary {
    #[serde(rename = "dimE")]
    pub dim_e: usize,
    #[serde(rename = "dimE0")]
    pub dim_e0: usize,
    pub ext1: usize,
    pub verified_to: usize,
    pub stabilized: bool,
    pub exact: bool,
}

impl ExtResult {
    pub fn summary(&self) -> ExtSummary {
        ExtSummary {
            dim_e: self.e_space.dim(),
            dim_e0: self.e0_space.dim(),
            ext1: self.ext_dim,
            verified_to: self.verified_to,
            stabilized: self.stabilized,
            exact: self.exact,
        }
    }
}

/// `η̃` as `dim 𝔞` matrices of shape `dim V₂ × dim V₁`; coordinate
/// `(r·n₁ + c)·d + i` holds entry `(r, c)` of `η̃(x_i)`.
pub fn eta_tilde_from_vector(v: &[Rational], d: usize, n1: usize, n2: usize) -> Vec<MatrixQ> {
    (0..d)
        .map(|i| {
            let mut m = MatrixQ::zeros(n2, n1);
            for r in 0..n2 {
                for c in 0..n1 {
                    m[(r, c)] = v[(r * n1 + c) * d + i].clone();
                }
            }
            m
        })
        .collect()
}

pub fn eta_tilde_to_vector(eta: &[MatrixQ]) -> Vec<Rational> {
    let d = eta.len();
    let (n2, n1) = eta.first().map_or((0, 0), |m| (m.nrows(), m.ncols()));
    let mut v = vec![zero(); d * n1 * n2];
    for (i, m) in eta.iter().enumerate() {
        for r in 0..n2 {
            for c in 0..n1 {
                v[(r * n1 + c) * d + i] = m[(r, c)].clone();
            }
        }
    }
    v
}

/// `(ρ₁⊕ρ₂, η₁⊕η₂ + η̃)` with `η̃` in the lower-left block, no checks.
fn block_module(m1: &PairModule, m2: &PairModule, tilde: &[MatrixQ]) -> Result<PairModule> {
    let rho = m1.rho().direct_sum(m2.rho())?;
    let (n1, n2) = (m1.dim(), m2.dim());
    let eta = m1
        .eta()
        .iter()
        .zip(m2.eta())
        .zip(tilde)
        .map(|((a, b), t)| MatrixQ::block(a, &MatrixQ::zeros(n1, n2), t, b))
        .collect();
    PairModule::from_parts(rho, eta, Certificate::Bounded(0))
}

/// Solutions of (E1), the `𝔞`-equivariant maps `𝔞 → Hom(V₁, V₂)`.
pub fn e1_space(m1: &PairModule, m2: &PairModule) -> Result<Subspace> {
    same_algebra(m1.algebra(), m2.algebra())?;
    hom_space(&adjoint_rep(m1.algebra()), &Rep::hom(m1.rho(), m2.rho())?)
}

/// Degree after which (E2) is vacuous, when both `η`s are nilpotent as
/// associative families.
fn vacuous_from(m1: &PairModule, m2: &PairModule) -> Option<usize> {
    Some(associative_nilpotency(m1.eta())? + associative_nilpotency(m2.eta())?)
}

pub fn e_space(m1: &PairModule, m2: &PairModule, bound: usize, window: usize) -> Result<ESpace> {
    let l = m1.algebra().clone();
    let d = l.dim();
    let (n1, n2) = (m1.dim(), m2.dim());
    let ambient = d * n1 * n2;
    let mut space = e1_space(m1, m2)?;
    let vacuous = vacuous_from(m1, m2);
    let last = match vacuous {
        Some(k) if k <= bound + 1 => k.saturating_sub(1),
        _ => bound,
    };
    let mut last_cut = 1;
    for r in 2..=last {
        if space.is_zero() {
            break;
        }
        let kernel = ker_tau_lyndon(&l, r)?;
        if kernel.is_zero() {
            continue;
        }
        let basis: Vec<Vec<Rational>> = space.basis().iter().map(|b| b.to_dense(ambient)).collect();
        // lower-left block of η_F(k) is linear in η̃
        let mut blocks: Vec<Vec<MatrixQ>> = Vec::with_capacity(basis.len());
        for b in &basis {
            let module = block_module(m1, m2, &eta_tilde_from_vector(b, d, n1, n2))?;
            let per_kernel = kernel
                .basis()
                .iter()
                .map(|k| Ok(module.eta_f_lyndon(r, k)?.sub_block(n1, 0, n2, n1)))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(per_kernel);
        }
        let mut rows = Vec::new();
        for k in 0..kernel.dim() {
            for e in 0..n1 * n2 {
                rows.push(SparseVec::from_pairs(blocks.iter().enumerate().map(|(j, bl)| (j, bl[k].data()[e].clone()))));
            }
        }
        let coeffs = kernel_of_rows(basis.len(), rows);
        if coeffs.dim() < basis.len() {
            last_cut = r;
            let combos = coeffs.basis().iter().map(|c| {
                c.iter().fold(SparseVec::new(), |acc, (j, cj)| acc.add_scaled(cj, &space.basis()[*j]))
            });
            space = Subspace::span(ambient, combos.collect::<Vec<_>>());
        }
    }
    let exact = vacuous.is_some_and(|k| k <= bound + 1) || space.is_zero();
    let stabilized = exact || bound.saturating_sub(last_cut) >= window;
    Ok(ESpace { space, verified_to: bound, stabilized, exact })
}

/// `{η̃_ψ = η₂ ψ − ψ η₁ : ψ ∈ Hom_𝔞(V₁, V₂)}`.
pub fn e0_space(m1: &PairModule, m2: &PairModule) -> Result<Subspace> {
    same_algebra(m1.algebra(), m2.algebra())?;
    let d = m1.algebra().dim();
    let (n1, n2) = (m1.dim(), m2.dim());
    let homs = hom_space(m1.rho(), m2.rho())?;
    let images: Vec<SparseVec> = homs
        .basis()
        .iter()
        .map(|p| {
            let psi = MatrixQ::from_vec(n2, n1, p.to_dense(n1 * n2));
            let tilde: Vec<MatrixQ> = m1.eta().iter().zip(m2.eta()).map(|(a, b)| &(b * &psi) - &(&psi * a)).collect();
            SparseVec::from_dense(&eta_tilde_to_vector(&tilde))
        })
        .collect();
    Ok(Subspace::span(d * n1 * n2, images))
}

/// `Ext¹` through `𝓔/𝓔₀`; assumes `Ext¹_𝔞(V₁, V₂) = 0`.
pub fn ext1(m1: &PairModule, m2: &PairModule, bound: usize, window: usize) -> Result<ExtResult> {
    let e = e_space(m1, m2, bound, window)?;
    let e0 = e0_space(m1, m2)?;
    let ext_dim = e.space.dim() - e.space.intersection(&e0)?.dim();
    Ok(ExtResult {
        e_space: e.space,
        e0_space: e0,
        ext_dim,
        verified_to: e.verified_to,
        stabilized: e.stabilized,
        exact: e.exact,
    })
}

/// The extension `0 → V₂ → V₁⊕V₂ → V₁ → 0` defined by `η̃`, certified up
/// to `bound`.
pub fn build_extension(m1: &PairModule, m2: &PairModule, tilde: &[MatrixQ], bound: usize) -> Result<PairModule> {
    let (n1, n2) = (m1.dim(), m2.dim());
    let d = m1.algebra().dim();
    if tilde.len() != d || tilde.iter().any(|t| t.nrows() != n2 || t.ncols() != n1) {
        return Err(Error::DimensionMismatch("eta_tilde must be dim V2 x dim V1 per basis element".into()));
    }
    let e = e_space(m1, m2, bound, DEFAULT_WINDOW)?;
    if !e.space.contains_dense(&eta_tilde_to_vector(tilde)) {
        return Err(Error::NotInE);
    }
    let block = block_module(m1, m2, tilde)?;
    let ext = verify_pair(block.rho(), block.eta().to_vec(), bound)?;
    // ι₀ and π₀ are module maps
    let mut iota = MatrixQ::zeros(n1 + n2, n2);
    let mut pi = MatrixQ::zeros(n1, n1 + n2);
    for i in 0..n2 {
        iota[(n1 + i, i)] = crate::qlinalg::one();
    }
    for i in 0..n1 {
        pi[(i, i)] = crate::qlinalg::one();
    }
    debug_assert!(hom_module_space(m2, &ext)?.contains_dense(&iota.vectorize()));
    debug_assert!(hom_module_space(&ext, m1)?.contains_dense(&pi.vectorize()));
    Ok(ext)
}

/// `Σ_a dim Hom_{𝔤[t]}(𝔤(ad, a·ad), V* ⊗ V′)` over the given points.
pub fn ext1_irreducibles(v: &PairModule, v2: &PairModule, points: &[Rational], bound: usize) -> Result<usize> {
    same_algebra(v.algebra(), v2.algebra())?;
    let target = tensor_module(&dual_module(v), v2, bound)?;
    let ad = adjoint_rep(v.algebra());
    let mut seen: Vec<&Rational> = Vec::new();
    let mut total = 0;
    for a in points {
        if seen.contains(&a) {
            continue;
        }
        seen.push(a);
        let source = evaluation_module(&ad, a)?;
        total += hom_module_space(&source, &target)?.dim();
    }
    Ok(total)
}
