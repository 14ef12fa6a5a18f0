use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::degree::{lyndon_degree, FreeDegree};
use super::lyndon::standard_split;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::qlinalg::{kernel_vectors, solve, MatrixQ, Rational, SparseVec, Subspace};

/// Evaluates standard bracketings of Lyndon words in any Lie algebra, given
/// the images of the letters and the bracket. Subwords are memoized.
pub struct LieEvaluator<T, F> {
    base: Vec<T>,
    bracket: F,
    memo: HashMap<Vec<usize>, T>,
}

impl<T: Clone, F: Fn(&T, &T) -> T> LieEvaluator<T, F> {
    pub fn new(base: Vec<T>, bracket: F) -> Self {
        Self { base, bracket, memo: HashMap::new() }
    }

    pub fn eval(&mut self, w: &[usize]) -> T {
        if w.len() == 1 {
            return self.base[w[0]].clone();
        }
        if let Some(t) = self.memo.get(w) {
            return t.clone();
        }
        let (u, v) = w.split_at(standard_split(w));
        let a = self.eval(u);
        let b = self.eval(v);
        let t = (self.bracket)(&a, &b);
        self.memo.insert(w.to_vec(), t.clone());
        t
    }
}

/// Everything about `τ_r` for one algebra and degree.
#[derive(Debug)]
pub struct TauDegree {
    pub free: Arc<FreeDegree>,
    /// `τ_r` of each Lyndon basis element, in coordinates of the algebra.
    pub images: Vec<SparseVec>,
    pub rank: usize,
    /// A basis of `ker τ_r` in Lyndon coordinates (not canonicalized).
    pub kernel: Vec<SparseVec>,
    /// Preimages of the basis of the algebra under the free-variable-zero
    /// rule; `None` where there is none.
    pub preimages: Vec<Option<SparseVec>>,
}

impl TauDegree {
    pub fn degree(&self) -> usize {
        self.free.degree()
    }

    /// Lyndon coordinates of some `z` with `τ_r(z) = x`.
    pub fn preimage(&self, x: &[Rational]) -> Result<SparseVec> {
        let mut acc = SparseVec::new();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match &self.preimages[k] {
                Some(z) => acc = acc.add_scaled(c, z),
                None => return self.solve_general(x),
            }
        }
        Ok(acc)
    }

    fn solve_general(&self, x: &[Rational]) -> Result<SparseVec> {
        let d = x.len();
        let m = MatrixQ::from_columns(
            &self.images.iter().map(|v| v.to_dense(d)).collect::<Vec<_>>(),
            d,
        );
        match solve(&m, x)? {
            Some(z) => Ok(SparseVec::from_dense(&z)),
            None => Err(Error::NoPreimage { degree: self.degree() }),
        }
    }

    pub fn matrix(&self, d: usize) -> MatrixQ {
        MatrixQ::from_columns(&self.images.iter().map(|v| v.to_dense(d)).collect::<Vec<_>>(), d)
    }
}

fn sparse_bracket(l: &LieAlgebra, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut pairs = Vec::new();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            let ab = a * b;
            for (k, c) in l.bracket(*i, *j).iter() {
                pairs.push((*k, &ab * c));
            }
        }
    }
    SparseVec::from_pairs(pairs)
}

/// `τ_r` data for `l`, computed once per algebra and degree.
pub fn tau_degree(l: &LieAlgebra, r: usize) -> Result<Arc<TauDegree>> {
    let mut cache = l.tau_cache().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = cache.get(&r) {
        return Ok(t.clone());
    }
    let free = Arc::new(lyndon_degree(l.dim(), r)?);
    let t = Arc::new(compute_tau(l, free)?);
    cache.insert(r, t.clone());
    Ok(t)
}

fn compute_tau(l: &LieAlgebra, free: Arc<FreeDegree>) -> Result<TauDegree> {
    let d = l.dim();
    let base = (0..d).map(SparseVec::unit).collect();
    let mut ev = LieEvaluator::new(base, |x: &SparseVec, y: &SparseVec| sparse_bracket(l, x, y));
    let images: Vec<SparseVec> = free.words().iter().map(|w| ev.eval(w.letters())).collect();
    let mut rows = vec![Vec::new(); d];
    for (w, img) in images.iter().enumerate() {
        for (k, c) in img.iter() {
            rows[*k].push((w, c.clone()));
        }
    }
    let rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_pairs).collect();
    let kernel = kernel_vectors(free.dim(), rows.clone());
    let rank = free.dim() - kernel.len();
    let tau = MatrixQ::from_sparse_rows(&rows, free.dim());
    let mut preimages = Vec::with_capacity(d);
    for k in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[k] = Rational::from_integer(1.into());
        preimages.push(solve(&tau, &e)?.map(|z| SparseVec::from_dense(&z)));
    }
    Ok(TauDegree { free, images, rank, kernel, preimages })
}

fn check_free(l: &LieAlgebra, fd: &FreeDegree) -> Result<()> {
    if fd.algebra_dim() != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "free degree on {} letters for an algebra of dimension {}",
            fd.algebra_dim(),
            l.dim()
        )));
    }
    Ok(())
}

/// `τ_r` as a `dim L × dim F^r` matrix.
pub fn tau_r(l: &LieAlgebra, fd: &FreeDegree) -> Result<MatrixQ> {
    check_free(l, fd)?;
    Ok(tau_degree(l, fd.degree())?.matrix(l.dim()))
}

/// `ker τ_r` in monomial coordinates of `T^r`.
pub fn ker_tau(l: &LieAlgebra, fd: &FreeDegree) -> Result<Subspace> {
    check_free(l, fd)?;
    let t = tau_degree(l, fd.degree())?;
    Ok(Subspace::span(fd.monomials(), t.kernel.iter().map(|k| t.free.expand_lyndon(k))))
}

/// `ker τ_r` in Lyndon coordinates, canonical.
pub fn ker_tau_lyndon(l: &LieAlgebra, r: usize) -> Result<Subspace> {
    let t = tau_degree(l, r)?;
    Ok(Subspace::span(t.free.dim(), t.kernel.iter().cloned()))
}

/// `Σ_{r ≤ k} (dim F^r - dim ker τ_r)`.
pub fn truncated_current_dim(l: &LieAlgebra, k: usize) -> Result<usize> {
    if !l.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let mut total = 0;
    for r in 1..=k {
        total += tau_degree(l, r)?.rank;
    }
    Ok(total)
}
