use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{c2_failure, verify_pair, Certificate, PairModule};
use crate::error::{Error, Result};
use crate::liealg::{hom_space, intertwiner_rows, same_algebra, tensor_mats, unvec, Rep};
use crate::qlinalg::{kernel_of_rows, MatrixQ, Rational, Subspace};

pub const EVALUATION: &str = "evaluation";

/// `η = a ρ`, the pullback through `x f ↦ f(a) x`.
pub fn evaluation_module(rho: &Rep, a: &Rational) -> Result<PairModule> {
    if let Some((i, j)) = rho.bracket_failure() {
        return Err(Error::C1Fails(i, j));
    }
    let eta = rho.matrices().iter().map(|m| m.scale(a)).collect();
    PairModule::from_parts(rho.clone(), eta, Certificate::ExactByConstruction(EVALUATION.into()))
}

/// `(ρ, a η)`, the pullback through `x t^r ↦ a^r x t^r`.
pub fn twist_eps(m: &PairModule, a: &Rational) -> PairModule {
    let eta = m.eta().iter().map(|e| e.scale(a)).collect();
    PairModule::from_parts(m.rho().clone(), eta, m.certificate().clone()).expect("shapes unchanged")
}

/// `(ρ, η - a ρ)`, the pullback through `x t^r ↦ x (t - a)^r`. A nilpotency
/// bound does not survive the shift, so such certificates become
/// constructive ones.
pub fn twist_gamma(m: &PairModule, a: &Rational) -> PairModule {
    let eta = m
        .eta()
        .iter()
        .zip(m.rho().matrices())
        .map(|(e, r)| e - &r.scale(a))
        .collect();
    let certificate = match m.certificate() {
        Certificate::ExactNilpotent(_) if !a.is_zero() => Certificate::ExactByConstruction("twist".into()),
        c => c.clone(),
    };
    PairModule::from_parts(m.rho().clone(), eta, certificate).expect("shapes unchanged")
}

/// `(ρ*, η*) = (-ρ^T, -η^T)`.
pub fn dual_module(m: &PairModule) -> PairModule {
    let eta = m.eta().iter().map(|e| -&e.transpose()).collect();
    PairModule::from_parts(m.rho().dual(), eta, m.certificate().clone()).expect("shapes unchanged")
}

/// `V₁ ⊕ V₂` with block-diagonal actions.
pub fn direct_sum(m1: &PairModule, m2: &PairModule) -> Result<PairModule> {
    let rho = m1.rho().direct_sum(m2.rho())?;
    let eta = m1.eta().iter().zip(m2.eta()).map(|(a, b)| MatrixQ::block_diag(a, b)).collect();
    PairModule::from_parts(rho, eta, m1.certificate().combine(m2.certificate()))
}

/// `V₁ ⊗ V₂` through `x t^r ↦ x t^r ⊗ 1 + 1 ⊗ x t^r`. Evaluation modules at a
/// common point give an evaluation module; anything else is re-verified up
/// to `bound`.
pub fn tensor_module(m1: &PairModule, m2: &PairModule, bound: usize) -> Result<PairModule> {
    let rho = m1.rho().tensor(m2.rho())?;
    let eta = tensor_mats(m1.eta(), m2.eta(), m1.dim(), m2.dim());
    let same_point = match (m1.evaluation_point(), m2.evaluation_point()) {
        (Some(a), Some(b)) => {
            let trivial1 = m1.rho().matrices().iter().all(MatrixQ::is_zero);
            let trivial2 = m2.rho().matrices().iter().all(MatrixQ::is_zero);
            a == b || trivial1 || trivial2
        }
        _ => false,
    };
    if same_point {
        if let Some((i, j)) = rho.bracket_failure() {
            return Err(Error::C1Fails(i, j));
        }
        if let Some((i, j)) = c2_failure(&rho, &eta) {
            return Err(Error::C2Fails(i, j));
        }
        return PairModule::from_parts(rho, eta, Certificate::ExactByConstruction(EVALUATION.into()));
    }
    verify_pair(&rho, eta, bound)
}

/// `Hom_{a[t]}(V₁, V₂)` inside row-major `dim V₂ × dim V₁` matrices.
pub fn hom_module_space(m1: &PairModule, m2: &PairModule) -> Result<Subspace> {
    same_algebra(m1.algebra(), m2.algebra())?;
    let (n1, n2) = (m1.dim(), m2.dim());
    let mut rows = intertwiner_rows(m1.rho().matrices(), m2.rho().matrices(), n1, n2);
    rows.extend(intertwiner_rows(m1.eta(), m2.eta(), n1, n2));
    Ok(kernel_of_rows(n1 * n2, rows))
}

/// Result of searching a hom space for an invertible element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch {
    Found(MatrixQ),
    /// `proven` is true when no invertible element exists at all.
    NotFound { proven: bool },
}

impl IsoSearch {
    pub fn found(&self) -> Option<&MatrixQ> {
        match self {
            IsoSearch::Found(m) => Some(m),
            IsoSearch::NotFound { .. } => None,
        }
    }
}

const RANDOM_TRIES: usize = 32;
const GRID_MAX_DIM: usize = 3;

/// Looks for an invertible element of `basis` (row-major `n × n` matrices):
/// basis vectors first, then seeded random combinations. When the space has
/// dimension at most 3 the generic determinant is evaluated on a grid large
/// enough to decide whether it vanishes identically.
pub fn find_invertible(basis: &[Vec<Rational>], n: usize, seed: u64) -> IsoSearch {
    if basis.is_empty() {
        return IsoSearch::NotFound { proven: n > 0 };
    }
    let combine = |coeffs: &[Rational]| -> MatrixQ {
        let mut v = vec![Rational::zero(); n * n];
        for (b, c) in basis.iter().zip(coeffs) {
            for (s, x) in v.iter_mut().zip(b) {
                *s += c * x;
            }
        }
        unvec(&v, n, n)
    };
    let k = basis.len();
    for i in 0..k {
        let mut c = vec![Rational::zero(); k];
        c[i] = Rational::one();
        let m = combine(&c);
        if !m.det().is_zero() {
            return IsoSearch::Found(m);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let c: Vec<Rational> = (0..k).map(|_| Rational::from_integer(rng.gen_range(-7i64..=7).into())).collect();
        let m = combine(&c);
        if !m.det().is_zero() {
            return IsoSearch::Found(m);
        }
    }
    if k > GRID_MAX_DIM {
        return IsoSearch::NotFound { proven: false };
    }
    // det(Σ c_i B_i) has degree ≤ n in each c_i; vanishing on {0..n}^k
    // forces it to be the zero polynomial.
    let mut c = vec![0usize; k];
    loop {
        let coeffs: Vec<Rational> = c.iter().map(|&x| Rational::from_integer((x as i64).into())).collect();
        let m = combine(&coeffs);
        if !m.det().is_zero() {
            return IsoSearch::Found(m);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return IsoSearch::NotFound { proven: true };
            }
            c[pos] += 1;
            if c[pos] <= n {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
}

/// An invertible `a[t]`-module map `V₁ → V₂`, if one is found.
pub fn find_isomorphism(m1: &PairModule, m2: &PairModule, seed: u64) -> Result<IsoSearch> {
    if m1.dim() != m2.dim() {
        return Ok(IsoSearch::NotFound { proven: true });
    }
    let h = hom_module_space(m1, m2)?;
    Ok(find_invertible(&h.basis_dense(), m1.dim(), seed))
}

/// `Hom_a(V₁, V₂)` for the underlying representations.
pub fn rep_hom_space(m1: &PairModule, m2: &PairModule) -> Result<Subspace> {
    hom_space(m1.rho(), m2.rho())
}
