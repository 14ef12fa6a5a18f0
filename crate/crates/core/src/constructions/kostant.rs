use std::collections::HashMap;

use num_traits::Zero;

use super::graded::GradedModule;
use crate::curmod::verify_pair;
use crate::error::{Error, Result};
use crate::liealg::{invariant_symmetric_form, Rep};
use crate::qlinalg::{kernel_of_rows, one, zero, MatrixQ, Rational, SparseVec};

/// `ΛV` with `ρ` extended as a derivation and `η(x)` wedging by `φ(x) ∈ Λ²V`,
/// where `φ` inverts `ζ(u₁∧u₂)v = (u₁,v)u₂ − (u₂,v)u₁`.
#[derive(Clone, Debug)]
pub struct KostantModule {
    pub graded: GradedModule,
    /// Basis subsets of `{0..n}`, ordered by size then lexicographically.
    pub subsets: Vec<Vec<usize>>,
    pub form: MatrixQ,
    /// `φ(x_i)` in the basis `e_a ∧ e_b`, `a < b` lexicographic.
    pub phi: Vec<Vec<Rational>>,
}

pub(crate) fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut cur = Vec::new();
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(n, k, 0, &mut cur, &mut out);
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Sign and support of `e_S ∧ e_T`, or `None` when they overlap.
fn wedge(s: &[usize], t: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut inversions = 0;
    for &a in s {
        for &b in t {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
    u.sort_unstable();
    Some((inversions % 2 == 1, u))
}

struct Exterior {
    n: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Exterior {
    fn new(n: usize) -> Self {
        let subsets = subsets(n);
        let index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Self { n, subsets, index }
    }

    fn dim(&self) -> usize {
        self.subsets.len()
    }

    fn degrees(&self) -> Vec<usize> {
        self.subsets.iter().map(Vec::len).collect()
    }

    /// Derivation extension of an endomorphism of `V`.
    fn derivation(&self, a: &MatrixQ) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.dim(), self.dim());
        for (col, s) in self.subsets.iter().enumerate() {
            for (pos, &i) in s.iter().enumerate() {
                for j in 0..self.n {
                    let c = &a[(j, i)];
                    if c.is_zero() {
                        continue;
                    }
                    let mut rest = s.clone();
                    rest.remove(pos);
                    if rest.contains(&j) {
                        continue;
                    }
                    let mut t = rest.clone();
                    t.insert(pos, j);
                    // sort `t`, tracking the sign of the permutation
                    let mut inversions = 0;
                    for p in 0..t.len() {
                        for q in p + 1..t.len() {
                            if t[p] > t[q] {
                                inversions += 1;
                            }
                        }
                    }
                    t.sort_unstable();
                    let row = self.index[&t];
                    if inversions % 2 == 0 {
                        m[(row, col)] += c;
                    } else {
                        m[(row, col)] -= c;
                    }
                }
            }
        }
        m
    }

    /// Left wedge by a 2-vector.
    fn wedge_by(&self, w: &[Rational]) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.dim(), self.dim());
        for (p, (a, b)) in pairs(self.n).into_iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            for (col, s) in self.subsets.iter().enumerate() {
                if let Some((negative, u)) = wedge(&[a, b], s) {
                    let row = self.index[&u];
                    if negative {
                        m[(row, col)] -= &w[p];
                    } else {
                        m[(row, col)] += &w[p];
                    }
                }
            }
        }
        m
    }
}

/// `ζ(e_a ∧ e_b)` as a matrix on `V`.
fn zeta(form: &MatrixQ, a: usize, b: usize) -> MatrixQ {
    let n = form.nrows();
    let mut m = MatrixQ::zeros(n, n);
    for j in 0..n {
        m[(b, j)] += &form[(a, j)];
        m[(a, j)] -= &form[(b, j)];
    }
    m
}

fn solve_phi(rho: &Rep, form: &MatrixQ) -> Result<Vec<Vec<Rational>>> {
    let n = rho.dim();
    let ps = pairs(n);
    let zetas: Vec<MatrixQ> = ps.iter().map(|&(a, b)| zeta(form, a, b)).collect();
    let unknowns = ps.len();
    let mut out = Vec::new();
    for (x, target) in rho.matrices().iter().enumerate() {
        // columns: coefficients of ζ's, then -target; kernel vectors with last entry 1
        let rows = (0..n * n).map(|e| {
            let (i, j) = (e / n, e % n);
            let mut row: Vec<(usize, Rational)> = zetas.iter().enumerate().map(|(p, z)| (p, z[(i, j)].clone())).collect();
            row.push((unknowns, -target[(i, j)].clone()));
            SparseVec::from_pairs(row)
        });
        let ker = kernel_of_rows(unknowns + 1, rows);
        let sol = ker
            .basis()
            .iter()
            .find(|v| !v.get(unknowns).is_zero())
            .ok_or(Error::NotSkew(x))?;
        let scale = sol.get(unknowns).recip();
        out.push((0..unknowns).map(|p| sol.get(p) * &scale).collect());
    }
    Ok(out)
}

fn setup(rho: &Rep) -> Result<(Exterior, MatrixQ, Vec<Vec<Rational>>, Rep)> {
    let form = invariant_symmetric_form(rho)?;
    let phi = solve_phi(rho, &form)?;
    let ext = Exterior::new(rho.dim());
    let rho_l = Rep::from_parts(rho.algebra().clone(), rho.matrices().iter().map(|a| ext.derivation(a)).collect())?;
    Ok((ext, form, phi, rho_l))
}

pub fn kostant_module(rho: &Rep) -> Result<KostantModule> {
    let (ext, form, phi, rho_l) = setup(rho)?;
    let eta = phi.iter().map(|w| ext.wedge_by(w)).collect();
    let module = verify_pair(&rho_l, eta, 2)?;
    Ok(KostantModule { graded: GradedModule::new(module, ext.degrees()), subsets: ext.subsets, form, phi })
}

/// Form on `Λ²V`: `(u₁∧u₂, w₁∧w₂) = det [(u_i, w_j)]`.
fn pair_form(form: &MatrixQ, (c, d): (usize, usize), (a, b): (usize, usize)) -> Rational {
    &form[(c, a)] * &form[(d, b)] - &form[(c, b)] * &form[(d, a)]
}

/// Same `ρ`, with `η*(x)` contracting against `φ(x)`:
/// `v₁∧⋯∧v_k ↦ −Σ_{r<s} (−1)^{r+s} (φ(x), v_r∧v_s) v₁∧⋯v̂_r⋯v̂_s⋯∧v_k`.
pub fn kostant_dual_module(rho: &Rep) -> Result<KostantModule> {
    let (ext, form, phi, rho_l) = setup(rho)?;
    let ps = pairs(ext.n);
    let eta = phi
        .iter()
        .map(|w| {
            let mut m = MatrixQ::zeros(ext.dim(), ext.dim());
            for (col, s) in ext.subsets.iter().enumerate() {
                for p in 0..s.len() {
                    for q in p + 1..s.len() {
                        let pair = (s[p], s[q]);
                        let mut c = zero();
                        for (i, &cd) in ps.iter().enumerate() {
                            if !w[i].is_zero() {
                                c += &w[i] * pair_form(&form, cd, pair);
                            }
                        }
                        if c.is_zero() {
                            continue;
                        }
                        let rest: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != p && i != q).map(|(_, &e)| e).collect();
                        let row = ext.index[&rest];
                        // 1-based positions p+1, q+1 give the same parity as p+q
                        if (p + q) % 2 == 0 {
                            m[(row, col)] -= &c;
                        } else {
                            m[(row, col)] += &c;
                        }
                    }
                }
            }
            m
        })
        .collect();
    let module = verify_pair(&rho_l, eta, 2)?;
    Ok(KostantModule { graded: GradedModule::new(module, ext.degrees()), subsets: ext.subsets, form, phi })
}

/// Gram matrix on `ΛV` of the form induced by `form` (determinants of
/// Gram blocks), block diagonal by degree.
pub fn exterior_gram(form: &MatrixQ) -> MatrixQ {
    let subs = subsets(form.nrows());
    let mut g = MatrixQ::zeros(subs.len(), subs.len());
    for (i, s) in subs.iter().enumerate() {
        for (j, t) in subs.iter().enumerate() {
            if s.len() == t.len() {
                g[(i, j)] = if s.is_empty() { one() } else { form.select(s, t).det() };
            }
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    /// `⊕_{k ≥ r} Λ^{2k(+1)}`, for the wedge module.
    AtLeast(usize),
    /// `⊕_{k ≤ r} Λ^{2k(+1)}`, for the contraction module.
    AtMost(usize),
}

/// The span of `Λ^{2k}` (or `Λ^{2k+1}`) over the allowed `k`, checked to be
/// a submodule.
pub fn even_odd_submodules(m: &KostantModule, parity: Parity, bound: DegreeBound) -> Result<GradedModule> {
    let g = &m.graded;
    let keep: Vec<usize> = (0..g.degrees.len())
        .filter(|&i| {
            let deg = g.degrees[i];
            let odd = deg % 2 == 1;
            if odd != (parity == Parity::Odd) {
                return false;
            }
            let k = deg / 2;
            match bound {
                DegreeBound::AtLeast(r) => k >= r,
                DegreeBound::AtMost(r) => k <= r,
            }
        })
        .collect();
    super::graded::restrict_to_coordinates(g, &keep)
}

