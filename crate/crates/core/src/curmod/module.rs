use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freelie::{tau_degree, LieEvaluator, Limits};
use crate::liealg::{lin_comb, LieAlgebra, Rep};
use crate::qlinalg::{Echelon, MatrixQ, Rational, SparseVec};

/// How far condition (C3) is known to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `η_F` vanishes on `F^N`, so (C3) holds in every degree.
    ExactNilpotent(usize),
    /// Valid by construction; the tag names the constructor.
    ExactByConstruction(String),
    /// (C3) checked for `2 ≤ r ≤ R` only.
    Bounded(usize),
}

impl Certificate {
    pub fn covers(&self, r: usize) -> bool {
        match self {
            Certificate::Bounded(bound) => r <= *bound,
            _ => true,
        }
    }

    /// Degrees up to which actions are computed when a finite range is
    /// needed. Exact certificates without a nilpotency bound use the
    /// configured degree cap.
    pub fn cover(&self) -> usize {
        match self {
            Certificate::ExactNilpotent(n) => n.saturating_sub(1).max(1),
            Certificate::ExactByConstruction(_) => Limits::current().max_degree,
            Certificate::Bounded(bound) => *bound,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Certificate::Bounded(_))
    }

    pub fn code(&self) -> &'static str {
        match self {
            Certificate::ExactNilpotent(_) => "EXACT_NILPOTENT",
            Certificate::ExactByConstruction(_) => "EXACT_BY_CONSTRUCTION",
            Certificate::Bounded(_) => "BOUNDED",
        }
    }

    /// Certificate of a direct sum.
    pub fn combine(&self, other: &Certificate) -> Certificate {
        use Certificate::*;
        match (self, other) {
            (Bounded(a), Bounded(b)) => Bounded(*a.min(b)),
            (Bounded(a), _) | (_, Bounded(a)) => Bounded(*a),
            (ExactNilpotent(a), ExactNilpotent(b)) => ExactNilpotent(*a.max(b)),
            (ExactByConstruction(a), ExactByConstruction(b)) if a == b => ExactByConstruction(a.clone()),
            (ExactByConstruction(a), ExactByConstruction(b)) => ExactByConstruction(format!("{a}+{b}")),
            (ExactByConstruction(a), ExactNilpotent(_)) | (ExactNilpotent(_), ExactByConstruction(a)) => {
                ExactByConstruction(a.clone())
            }
        }
    }
}

type MatEval = LieEvaluator<MatrixQ, fn(&MatrixQ, &MatrixQ) -> MatrixQ>;

fn commutator(a: &MatrixQ, b: &MatrixQ) -> MatrixQ {
    a.commutator(b)
}

/// A candidate `a[t]`-module `(ρ, η)` with its certificate.
#[derive(Clone)]
pub struct PairModule {
    rho: Rep,
    eta: Vec<MatrixQ>,
    certificate: Certificate,
    eta_f: Arc<Mutex<MatEval>>,
}

impl PartialEq for PairModule {
    fn eq(&self, other: &Self) -> bool {
        self.rho == other.rho && self.eta == other.eta && self.certificate == other.certificate
    }
}

impl Eq for PairModule {}

impl std::fmt::Debug for PairModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PairModule")
            .field("dim", &self.dim())
            .field("certificate", &self.certificate)
            .finish()
    }
}

impl PairModule {
    /// No checks beyond shapes; callers vouch for the certificate.
    pub fn from_parts(rho: Rep, eta: Vec<MatrixQ>, certificate: Certificate) -> Result<Self> {
        let n = rho.dim();
        if eta.len() != rho.algebra().dim() || eta.iter().any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(Error::DimensionMismatch("eta does not match rho".into()));
        }
        let eval: MatEval = LieEvaluator::new(eta.clone(), commutator as fn(&MatrixQ, &MatrixQ) -> MatrixQ);
        Ok(Self { rho, eta, certificate, eta_f: Arc::new(Mutex::new(eval)) })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.rho.algebra()
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn rho(&self) -> &Rep {
        &self.rho
    }

    pub fn eta(&self) -> &[MatrixQ] {
        &self.eta
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// `η_F` of the standard bracketing of a Lyndon word.
    pub fn eta_f(&self, word: &[usize]) -> MatrixQ {
        self.eta_f.lock().unwrap_or_else(|e| e.into_inner()).eval(word)
    }

    /// `η_F(Σ c_w P_w)` for Lyndon coordinates in degree `r`.
    pub fn eta_f_lyndon(&self, r: usize, c: &SparseVec) -> Result<MatrixQ> {
        let t = tau_degree(self.algebra(), r)?;
        let n = self.dim();
        let mut acc = MatrixQ::zeros(n, n);
        for (w, cw) in c.iter() {
            acc = &acc + &self.eta_f(t.free.words()[*w].letters()).scale(cw);
        }
        Ok(acc)
    }

    /// `a` with `η = a ρ`, if any (for `ρ = 0` and `η = 0`, zero).
    pub fn evaluation_point(&self) -> Option<Rational> {
        let mut a: Option<Rational> = None;
        for (r, e) in self.rho.matrices().iter().zip(&self.eta) {
            for (x, y) in r.data().iter().zip(e.data()) {
                if x.is_zero() {
                    if !y.is_zero() {
                        return None;
                    }
                    continue;
                }
                let ratio = y / x;
                match &a {
                    None => a = Some(ratio),
                    Some(b) if *b != ratio => return None,
                    _ => {}
                }
            }
        }
        Some(a.unwrap_or_else(Rational::zero))
    }

    /// Matrix of `x t^r` acting on the module.
    pub fn action_matrix(&self, x: &[Rational], r: usize) -> Result<MatrixQ> {
        let n = self.dim();
        match r {
            0 => return Ok(self.rho.image(x)),
            1 => return Ok(lin_comb(&self.eta, x, n)),
            _ => {}
        }
        if !self.certificate.covers(r) {
            return Err(Error::UncoveredDegree { degree: r, cover: self.certificate.cover() });
        }
        if x.iter().all(Zero::is_zero) {
            return Ok(MatrixQ::zeros(n, n));
        }
        if let Certificate::ExactNilpotent(bound) = self.certificate {
            if r >= bound && self.algebra().is_perfect() {
                return Ok(MatrixQ::zeros(n, n));
            }
        }
        let t = tau_degree(self.algebra(), r)?;
        let z = t.preimage(x)?;
        self.eta_f_lyndon(r, &z)
    }

    /// `(x t^r) v`.
    pub fn act(&self, x: &[Rational], r: usize, v: &[Rational]) -> Result<Vec<Rational>> {
        Ok(self.action_matrix(x, r)?.mul_vec(v))
    }
}

pub fn act(m: &PairModule, x: &[Rational], r: usize, v: &[Rational]) -> Result<Vec<Rational>> {
    m.act(x, r, v)
}

/// First pair `(i, j)` violating `[ρ(x_i), η(x_j)] = η([x_i, x_j])`.
pub fn c2_failure(rho: &Rep, eta: &[MatrixQ]) -> Option<(usize, usize)> {
    let l = rho.algebra();
    let n = rho.dim();
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let lhs = rho.matrix(i).commutator(&eta[j]);
            let mut rhs = MatrixQ::zeros(n, n);
            for (k, c) in l.bracket(i, j).iter() {
                rhs = &rhs + &eta[*k].scale(c);
            }
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// Smallest `K ≥ 1` with `span of iterated commutators of length K = 0`,
/// searched up to `max`.
pub(crate) fn lie_nilpotency(eta: &[MatrixQ], max: usize) -> Option<usize> {
    let mut layer = independent(eta.iter().cloned());
    for k in 1..=max {
        if layer.is_empty() {
            return Some(k);
        }
        layer = independent(eta.iter().flat_map(|a| layer.iter().map(move |b| a.commutator(b))));
    }
    None
}

/// Smallest `K ≥ 1` such that all products of `K` of the matrices vanish.
pub fn associative_nilpotency(eta: &[MatrixQ]) -> Option<usize> {
    let n = eta.first().map_or(0, MatrixQ::nrows);
    let mut layer = independent(eta.iter().cloned());
    for k in 1..=n + 1 {
        if layer.is_empty() {
            return Some(k);
        }
        layer = independent(eta.iter().flat_map(|a| layer.iter().map(move |b| a * b)));
    }
    None
}

fn independent(mats: impl Iterator<Item = MatrixQ>) -> Vec<MatrixQ> {
    let mut e: Option<Echelon> = None;
    let mut out = Vec::new();
    for m in mats {
        let (r, c) = (m.nrows(), m.ncols());
        let ech = e.get_or_insert_with(|| Echelon::new(r * c));
        if ech.insert(SparseVec::from_dense(&m.vectorize())) {
            out.push(m);
        }
    }
    out
}

/// Checks (C1), (C2) and (C3). Issues `ExactNilpotent(N)` when `η_F`
/// vanishes on `F^N` for some `N ≤ bound` (with `N ≥ 2`), else `Bounded(bound)`.
pub fn verify_pair(rho: &Rep, eta: Vec<MatrixQ>, bound: usize) -> Result<PairModule> {
    if let Some((i, j)) = rho.bracket_failure() {
        return Err(Error::C1Fails(i, j));
    }
    let n = rho.dim();
    if eta.len() != rho.algebra().dim() || eta.iter().any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(Error::DimensionMismatch("eta does not match rho".into()));
    }
    if let Some((i, j)) = c2_failure(rho, &eta) {
        return Err(Error::C2Fails(i, j));
    }
    let nil = lie_nilpotency(&eta, bound).map(|k| k.max(2)).filter(|&k| k <= bound);
    let (top, certificate) = match nil {
        Some(k) => (k - 1, Certificate::ExactNilpotent(k)),
        None => (bound, Certificate::Bounded(bound)),
    };
    let m = PairModule::from_parts(rho.clone(), eta, certificate)?;
    for r in 2..=top {
        check_c3(&m, r)?;
    }
    Ok(m)
}

/// `η_F(ker τ_r) = 0`, with the offending kernel vector as witness.
pub fn check_c3(m: &PairModule, r: usize) -> Result<()> {
    let t = tau_degree(m.algebra(), r)?;
    for k in &t.kernel {
        if !m.eta_f_lyndon(r, k)?.is_zero() {
            let tensor = t.free.expand_lyndon(k);
            let vector = tensor.iter().map(|(i, c)| (t.free.word_of_monomial(*i), c.clone())).collect();
            return Err(Error::C3Fails { degree: r, vector });
        }
    }
    Ok(())
}
