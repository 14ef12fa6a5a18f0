use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freelie::TauDegree;
use crate::qlinalg::{Echelon, Rational, SparseVec};

/// Root-theoretic data attached to a simple algebra: index sets of the basis
/// spanning `n+`, `h`, `n-`, the highest root vectors and the highest root as
/// a functional on the `h` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangular {
    pub nplus: Vec<usize>,
    pub h: Vec<usize>,
    pub nminus: Vec<usize>,
    pub x_theta_plus: Vec<Rational>,
    pub x_theta_minus: Vec<Rational>,
    pub theta: Vec<Rational>,
}

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    table: Vec<SparseVec>,
    triangular: Option<Triangular>,
    tau_cache: Arc<Mutex<BTreeMap<usize, Arc<TauDegree>>>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.names == other.names
            && self.table == other.table
            && self.triangular == other.triangular
    }
}

impl Eq for LieAlgebra {}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("dim", &self.dim)
            .field("names", &self.names)
            .field("triangular", &self.triangular.is_some())
            .finish()
    }
}

/// One entry of a sparse bracket table: `[x_i, x_j] = Σ c x_k`.
pub type BracketEntry = (usize, usize, Vec<(usize, Rational)>);

/// Validates a sparse bracket table and builds the algebra. A pair whose
/// mirror `(j, i)` is absent is completed antisymmetrically; a pair given
/// both ways must be antisymmetric.
pub fn make_algebra(dim: usize, names: Vec<String>, brackets: Vec<BracketEntry>) -> Result<LieAlgebra> {
    if names.len() != dim {
        return Err(Error::DimensionMismatch(format!("{} names for dimension {dim}", names.len())));
    }
    let mut given: HashMap<(usize, usize), SparseVec> = HashMap::new();
    for (i, j, terms) in brackets {
        if i >= dim || j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
            return Err(Error::DimensionMismatch(format!("bracket index out of range in ({i}, {j})")));
        }
        let v = SparseVec::from_pairs(terms);
        let slot = given.entry((i, j)).or_default();
        *slot = slot.add_scaled(&Rational::from_integer(1.into()), &v);
    }
    let mut table = vec![SparseVec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let ij = given.get(&(i, j));
            let ji = given.get(&(j, i));
            let v = match (ij, ji) {
                (Some(a), Some(b)) => {
                    if a.add_scaled(&Rational::from_integer(1.into()), b) != SparseVec::new() {
                        return Err(Error::NotAntisymmetric(i.min(j), i.max(j)));
                    }
                    a.clone()
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.scale(&Rational::from_integer((-1).into())),
                (None, None) => SparseVec::new(),
            };
            if i == j && !v.is_zero() {
                return Err(Error::NotAntisymmetric(i, i));
            }
            table[i * dim + j] = v;
        }
    }
    let alg = LieAlgebra::from_table(dim, names, table);
    alg.check_jacobi()?;
    Ok(alg)
}

impl LieAlgebra {
    pub(crate) fn from_table(dim: usize, names: Vec<String>, table: Vec<SparseVec>) -> Self {
        Self { dim, names, table, triangular: None, tau_cache: Default::default() }
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        Self::from_table(dim, (0..dim).map(|i| format!("a{i}")).collect(), vec![SparseVec::new(); dim * dim])
    }

    /// Attaches triangular data after checking `[h, h] = 0` and
    /// `[h, x+θ] = θ(h) x+θ`.
    pub fn with_triangular(mut self, t: Triangular) -> Result<Self> {
        let d = self.dim;
        let bad = |what: &str| Error::DimensionMismatch(format!("triangular data: {what}"));
        if t.x_theta_plus.len() != d || t.x_theta_minus.len() != d || t.theta.len() != t.h.len() {
            return Err(bad("vector lengths"));
        }
        if t.nplus.iter().chain(&t.h).chain(&t.nminus).any(|&i| i >= d) {
            return Err(bad("index out of range"));
        }
        for &a in &t.h {
            for &b in &t.h {
                if !self.bracket(a, b).is_zero() {
                    return Err(bad("h is not abelian"));
                }
            }
        }
        for (k, &hk) in t.h.iter().enumerate() {
            let lhs = self.bracket_vec(&unit(d, hk), &t.x_theta_plus);
            let rhs: Vec<Rational> = t.x_theta_plus.iter().map(|c| c * &t.theta[k]).collect();
            if lhs != rhs {
                return Err(bad("x_theta_plus is not a theta eigenvector"));
            }
        }
        self.triangular = Some(t);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn triangular(&self) -> Option<&Triangular> {
        self.triangular.as_ref()
    }

    /// `[x_i, x_j]` in coordinates.
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket(i, j).iter() {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Sparse triples `(i, j, [x_i, x_j])` for `i < j` with nonzero bracket.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, &SparseVec)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(i, j);
                if !b.is_zero() {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut acc = vec![Rational::zero(); d];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket(b, c).to_dense(d);
                        let outer = self.bracket_vec(&unit(d, a), &inner);
                        for (s, t) in acc.iter_mut().zip(outer) {
                            *s += t;
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiFails(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dimension of `[L, L]`.
    pub fn derived_dim(&self) -> usize {
        let mut e = Echelon::new(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                e.insert(self.bracket(i, j).clone());
            }
        }
        e.rank()
    }

    /// True iff `L = [L, L]`.
    pub fn is_perfect(&self) -> bool {
        self.derived_dim() == self.dim
    }

    pub(crate) fn tau_cache(&self) -> &Mutex<BTreeMap<usize, Arc<TauDegree>>> {
        &self.tau_cache
    }
}

pub fn is_perfect(l: &LieAlgebra) -> bool {
    l.is_perfect()
}

pub(crate) fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::from_integer(1.into());
    v
}
