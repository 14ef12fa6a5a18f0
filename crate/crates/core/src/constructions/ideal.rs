use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::graded::GradedModule;
use crate::curmod::{verify_pair, Certificate, PairModule};
use crate::error::{Error, Result};
use crate::freelie::{ad_t_sparse, ker_tau, lyndon_degree, monomial_count, Limits, TensorPoly};
use crate::liealg::{adjoint_rep, invariant_symmetric_form, LieAlgebra, Rep};
use crate::qlinalg::{MatrixQ, Rational, SparseVec, Subspace};

pub const TENSOR_IDEAL: &str = "tensor-ideal";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Tensor,
    Symmetric,
}

/// Homogeneous generators of an ad-invariant ideal and the truncation
/// degree. For the symmetric flavor a word stands for the commutative
/// monomial of its letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub flavor: Flavor,
    pub generators: Vec<TensorPoly>,
    pub truncation: usize,
}

impl IdealSpec {
    pub fn new(flavor: Flavor, generators: Vec<TensorPoly>, truncation: usize) -> Self {
        Self { flavor, generators, truncation }
    }

    /// The augmentation ideal, generated by all of degree 1.
    pub fn augmentation(flavor: Flavor, d: usize, truncation: usize) -> Self {
        let generators = (0..d).map(|i| TensorPoly::monomial(vec![i])).collect();
        Self { flavor, generators, truncation }
    }

    /// All monomials of degree `k`.
    pub fn full_degree(flavor: Flavor, d: usize, k: usize, truncation: usize) -> Self {
        let generators = match flavor {
            Flavor::Tensor => (0..monomial_count(d, k))
                .map(|i| TensorPoly::monomial(crate::freelie::index_word(i, d, k)))
                .collect(),
            Flavor::Symmetric => sym_monomials(d, k).into_iter().map(TensorPoly::monomial).collect(),
        };
        Self { flavor, generators, truncation }
    }

    /// `ker τ_r` for `2 ≤ r ≤ truncation`, in the tensor flavor.
    pub fn ker_tau(l: &LieAlgebra, truncation: usize) -> Result<Self> {
        let d = l.dim();
        let mut generators = Vec::new();
        for r in 2..=truncation {
            let fd = lyndon_degree(d, r)?;
            for v in ker_tau(l, &fd)?.basis() {
                generators.push(TensorPoly::from_sparse(d, r, v));
            }
        }
        Ok(Self { flavor: Flavor::Tensor, generators, truncation })
    }
}

/// Smallest subspace containing `seed` and stable under `ops`.
fn ad_closure(seed: Subspace, ops: impl Fn(&SparseVec) -> Vec<SparseVec>) -> Subspace {
    let n = seed.ambient_dim();
    let mut echelon = crate::qlinalg::Echelon::from_rows(n, seed.basis().iter().cloned());
    let mut frontier: Vec<SparseVec> = seed.basis().to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for w in ops(v) {
                if echelon.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Subspace::from_echelon(echelon)
}

/// Quotient coordinates: reduce modulo the subspace and read the free
/// columns.
struct Quotient {
    sub: Subspace,
    free: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl Quotient {
    fn new(sub: Subspace) -> Self {
        let free = sub.free_columns();
        let position = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Self { sub, free, position }
    }

    fn dim(&self) -> usize {
        self.free.len()
    }

    fn coords(&self, v: &SparseVec) -> Vec<(usize, Rational)> {
        self.sub.reduce(v).iter().map(|(c, x)| (self.position[c], x.clone())).collect()
    }
}

/// Assembles `ρ` and `η` on `⊕_r Q_r`; `rho_op(x, r, m)` and `eta_op(x, r, m)`
/// act on the monomial `m` of degree `r` (eta landing in degree `r + 1`).
fn assemble(
    l: &Arc<LieAlgebra>,
    quotients: &[Quotient],
    rho_op: impl Fn(usize, usize, usize) -> SparseVec,
    eta_op: impl Fn(usize, usize, usize) -> SparseVec,
) -> (Vec<MatrixQ>, Vec<MatrixQ>, Vec<usize>) {
    let mut offsets = Vec::new();
    let mut degrees = Vec::new();
    let mut total = 0;
    for (r, q) in quotients.iter().enumerate() {
        offsets.push(total);
        total += q.dim();
        degrees.extend(std::iter::repeat(r).take(q.dim()));
    }
    let top = quotients.len() - 1;
    let d = l.dim();
    let mut rho = vec![MatrixQ::zeros(total, total); d];
    let mut eta = vec![MatrixQ::zeros(total, total); d];
    for x in 0..d {
        for (r, q) in quotients.iter().enumerate() {
            for (j, &m) in q.free.iter().enumerate() {
                let col = offsets[r] + j;
                for (i, c) in q.coords(&rho_op(x, r, m)) {
                    rho[x][(offsets[r] + i, col)] = c;
                }
                if r < top {
                    for (i, c) in quotients[r + 1].coords(&eta_op(x, r, m)) {
                        eta[x][(offsets[r + 1] + i, col)] = c;
                    }
                }
            }
        }
    }
    (rho, eta, degrees)
}

/// Degree components `I_0 … I_N` of the two-sided ideal generated by the
/// spec, closed under `ad_T`.
pub fn tensor_ideal_components(l: &LieAlgebra, spec: &IdealSpec) -> Result<Vec<Subspace>> {
    if spec.flavor != Flavor::Tensor {
        return Err(Error::DimensionMismatch("tensor construction needs a tensor ideal".into()));
    }
    let d = l.dim();
    let n = spec.truncation;
    let limits = Limits::current();
    let mut ideal: Vec<Subspace> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let size = monomial_count(d, r);
        if size > limits.max_monomials {
            return Err(Error::SizeLimit { monomials: size, cap: limits.max_monomials });
        }
        let gens = spec
            .generators
            .iter()
            .filter(|g| g.degree() == r)
            .map(|g| g.to_sparse(d))
            .collect::<Vec<_>>();
        let seed = Subspace::span(size, gens);
        let mut closed = ad_closure(seed, |v| (0..d).map(|a| ad_t_sparse(l, a, v, r)).collect());
        if r > 0 {
            let prev = &ideal[r - 1];
            let prev_size = monomial_count(d, r - 1);
            let mut extra = Vec::new();
            for v in prev.basis() {
                for a in 0..d {
                    extra.push(v.map_indices(|i| a * prev_size + i));
                    extra.push(v.map_indices(|i| i * d + a));
                }
            }
            closed = closed.sum(&Subspace::span(size, extra))?;
        }
        ideal.push(closed);
    }
    Ok(ideal)
}

/// `(⊕_{r ≤ N} T^r) / I` for the two-sided ideal generated by the spec,
/// with `ρ = ad_T` and `η(x)` = left multiplication by `x`.
pub fn ideal_module_tensor(l: &Arc<LieAlgebra>, spec: &IdealSpec) -> Result<GradedModule> {
    if !l.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let d = l.dim();
    let n = spec.truncation;
    let ideal = tensor_ideal_components(l, spec)?;
    for r in 2..=n {
        let fd = lyndon_degree(d, r)?;
        if !ideal[r].contains(&ker_tau(l, &fd)?)? {
            return Err(Error::KerTauNotContained { degree: r });
        }
    }
    let quotients: Vec<Quotient> = ideal.into_iter().map(Quotient::new).collect();
    let (rho, eta, degrees) = assemble(
        l,
        &quotients,
        |x, r, m| if r == 0 { SparseVec::new() } else { ad_t_sparse(l, x, &SparseVec::unit(m), r) },
        |x, r, m| SparseVec::unit(x * monomial_count(d, r) + m),
    );
    let rho = Rep::from_parts(l.clone(), rho)?;
    let module = PairModule::from_parts(rho, eta, Certificate::ExactByConstruction(TENSOR_IDEAL.into()))?;
    Ok(GradedModule::new(module, degrees))
}

/// Non-decreasing words of length `k`, lexicographic.
pub fn sym_monomials(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(k);
    fn rec(d: usize, k: usize, start: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.len() == k {
            out.push(w.clone());
            return;
        }
        for c in start..d {
            w.push(c);
            rec(d, k, c, w, out);
            w.pop();
        }
    }
    rec(d, k, 0, &mut w, &mut out);
    out
}

/// Monomial bases of `S^0 … S^N` with index lookup.
struct SymBasis {
    words: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl SymBasis {
    fn new(d: usize, n: usize) -> Self {
        let words: Vec<_> = (0..=n).map(|k| sym_monomials(d, k)).collect();
        let index = words
            .iter()
            .map(|ws| ws.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect())
            .collect();
        Self { words, index }
    }

    fn vector(&self, k: usize, terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> SparseVec {
        SparseVec::from_pairs(terms.into_iter().map(|(mut w, c)| {
            w.sort_unstable();
            (self.index[k][&w], c)
        }))
    }

    /// Derivation action of `ad x` on the monomial `m` of degree `k`.
    fn ad(&self, l: &LieAlgebra, x: usize, k: usize, m: usize) -> SparseVec {
        let w = &self.words[k][m];
        let mut terms = Vec::new();
        for (pos, &y) in w.iter().enumerate() {
            for (z, c) in l.bracket(x, y).iter() {
                let mut nw = w.clone();
                nw[pos] = *z;
                terms.push((nw, c.clone()));
            }
        }
        self.vector(k, terms)
    }

    fn mul(&self, x: usize, k: usize, m: usize) -> SparseVec {
        let mut w = self.words[k][m].clone();
        w.push(x);
        self.vector(k + 1, [(w, Rational::from_integer(1.into()))])
    }

    /// `x·(x₁⋯x_k) ↦ Σ_j B(x, x_j) x₁⋯x̂_j⋯x_k`.
    fn contract(&self, b: &MatrixQ, x: usize, k: usize, m: usize) -> SparseVec {
        let w = &self.words[k][m];
        let mut terms = Vec::new();
        for (pos, &y) in w.iter().enumerate() {
            let c = &b[(x, y)];
            if !c.is_zero() {
                let mut nw = w.clone();
                nw.remove(pos);
                terms.push((nw, c.clone()));
            }
        }
        self.vector(k - 1, terms)
    }
}

fn commuting_certificate(rho: Rep, eta: Vec<MatrixQ>) -> Result<PairModule> {
    let m = verify_pair(&rho, eta, 2)?;
    debug_assert_eq!(m.certificate(), &Certificate::ExactNilpotent(2));
    Ok(m)
}

/// `(⊕_{k ≤ N} S^k) / I` with `ρ` the induced adjoint action and `η(x)`
/// multiplication by `x`.
pub fn ideal_module_sym(l: &Arc<LieAlgebra>, spec: &IdealSpec) -> Result<GradedModule> {
    if spec.flavor != Flavor::Symmetric {
        return Err(Error::DimensionMismatch("symmetric construction needs a symmetric ideal".into()));
    }
    let d = l.dim();
    let n = spec.truncation;
    let basis = SymBasis::new(d, n);
    let limits = Limits::current();
    let mut ideal: Vec<Subspace> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let size = basis.words[k].len();
        if size > limits.max_monomials {
            return Err(Error::SizeLimit { monomials: size, cap: limits.max_monomials });
        }
        let gens: Vec<SparseVec> = spec
            .generators
            .iter()
            .filter(|g| g.degree() == k)
            .map(|g| basis.vector(k, g.terms().iter().map(|(w, c)| (w.clone(), c.clone()))))
            .collect();
        let seed = Subspace::span(size, gens);
        let mut closed = ad_closure(seed, |v| {
            (0..d)
                .map(|x| {
                    v.iter().fold(SparseVec::new(), |acc, (m, c)| acc.add_scaled(c, &basis.ad(l, x, k, *m)))
                })
                .collect()
        });
        if k > 0 {
            let mut extra = Vec::new();
            for v in ideal[k - 1].basis() {
                for x in 0..d {
                    extra.push(v.iter().fold(SparseVec::new(), |acc, (m, c)| acc.add_scaled(c, &basis.mul(x, k - 1, *m))));
                }
            }
            closed = closed.sum(&Subspace::span(size, extra))?;
        }
        ideal.push(closed);
    }
    let quotients: Vec<Quotient> = ideal.into_iter().map(Quotient::new).collect();
    let (rho, eta, degrees) = assemble(l, &quotients, |x, k, m| basis.ad(l, x, k, m), |x, k, m| basis.mul(x, k, m));
    let module = commuting_certificate(Rep::from_parts(l.clone(), rho)?, eta)?;
    Ok(GradedModule::new(module, degrees))
}

/// `⊕_{k ≤ N} S^k` with `η(x)` contracting against the invariant form of the
/// adjoint representation.
pub fn sym_dual_module(l: &Arc<LieAlgebra>, n: usize) -> Result<GradedModule> {
    let b = invariant_symmetric_form(&adjoint_rep(l))?;
    let d = l.dim();
    let basis = SymBasis::new(d, n);
    let mut offsets = Vec::new();
    let mut degrees = Vec::new();
    let mut total = 0;
    for k in 0..=n {
        offsets.push(total);
        total += basis.words[k].len();
        degrees.extend(std::iter::repeat(k).take(basis.words[k].len()));
    }
    let mut rho = vec![MatrixQ::zeros(total, total); d];
    let mut eta = vec![MatrixQ::zeros(total, total); d];
    for x in 0..d {
        for k in 0..=n {
            for m in 0..basis.words[k].len() {
                let col = offsets[k] + m;
                for (i, c) in basis.ad(l, x, k, m).iter() {
                    rho[x][(offsets[k] + i, col)] = c.clone();
                }
                if k > 0 {
                    for (i, c) in basis.contract(&b, x, k, m).iter() {
                        eta[x][(offsets[k - 1] + i, col)] = c.clone();
                    }
                }
            }
        }
    }
    let module = commuting_certificate(Rep::from_parts(l.clone(), rho)?, eta)?;
    Ok(GradedModule::new(module, degrees))
}

/// Gram matrix on `S^k` of the form induced by `b`:
/// `(x₁⋯x_k, y₁⋯y_k) = Σ_σ Π b(x_i, y_σ(i))`.
pub fn sym_gram(b: &MatrixQ, k: usize) -> MatrixQ {
    let d = b.nrows();
    let words = sym_monomials(d, k);
    let mut g = MatrixQ::zeros(words.len(), words.len());
    for (i, u) in words.iter().enumerate() {
        for (j, w) in words.iter().enumerate() {
            g[(i, j)] = permanent(b, u, w);
        }
    }
    g
}

fn permanent(b: &MatrixQ, u: &[usize], w: &[usize]) -> Rational {
    if u.is_empty() {
        return Rational::from_integer(1.into());
    }
    let mut acc = Rational::zero();
    for j in 0..w.len() {
        let c = &b[(u[0], w[j])];
        if c.is_zero() {
            continue;
        }
        let mut rest = w.to_vec();
        rest.remove(j);
        acc += c * permanent(b, &u[1..], &rest);
    }
    acc
}
