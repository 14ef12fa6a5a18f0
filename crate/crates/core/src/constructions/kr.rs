use std::sync::Arc;

use num_traits::{One, Zero};

use super::graded::GradedModule;
use crate::curmod::verify_pair;
use crate::error::{Error, Result};
use crate::freelie::{ad_t_sparse, monomial_count, Limits};
use crate::liealg::{hom_space, unvec, LieAlgebra, Rep};
use crate::qlinalg::{Echelon, MatrixQ, SparseVec, Subspace};

/// `T(𝔤)/K_r ≅ ⊕_{s<r} V(sθ)` together with the data used to build it.
#[derive(Clone, Debug)]
pub struct KrModule {
    pub graded: GradedModule,
    /// RREF basis of `V(sθ) ⊂ T^s` for each `s < r`.
    pub orbits: Vec<Subspace>,
    /// `C_s : T^s → V(sθ)` in orbit coordinates, for each `s ≤ r - 1`.
    pub projectors: Vec<MatrixQ>,
}

fn ad_matrices(l: &LieAlgebra, s: usize) -> Vec<MatrixQ> {
    let d = l.dim();
    let n = monomial_count(d, s);
    (0..d)
        .map(|x| {
            let mut m = MatrixQ::zeros(n, n);
            for col in 0..n {
                for (row, c) in ad_t_sparse(l, x, &SparseVec::unit(col), s).iter() {
                    m[(*row, col)] = c.clone();
                }
            }
            m
        })
        .collect()
}

fn tensor_power(v: &SparseVec, s: usize, d: usize) -> SparseVec {
    let mut out = SparseVec::unit(0);
    for _ in 0..s {
        let mut pairs = Vec::new();
        for (i, a) in out.iter() {
            for (j, b) in v.iter() {
                pairs.push((i * d + j, a * b));
            }
        }
        out = SparseVec::from_pairs(pairs);
    }
    out
}

/// Irreducible `V(sθ)` inside `T^s` and the invariant projection onto it.
fn orbit_and_projector(l: &Arc<LieAlgebra>, theta_vec: &SparseVec, s: usize) -> Result<(Subspace, Rep, MatrixQ)> {
    let d = l.dim();
    let n = monomial_count(d, s);
    let start = tensor_power(theta_vec, s, d);
    let mut echelon = Echelon::new(n);
    echelon.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for x in 0..d {
                let w = ad_t_sparse(l, x, v, s);
                if echelon.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let orbit = Subspace::from_echelon(echelon);
    let k = orbit.dim();
    let full = ad_matrices(l, s);
    let rho_v: Vec<MatrixQ> = full
        .iter()
        .map(|a| {
            let mut m = MatrixQ::zeros(k, k);
            for (j, b) in orbit.basis().iter().enumerate() {
                let image = crate::qlinalg::SparseVec::from_dense(&a.mul_vec(&b.to_dense(n)));
                let coords = orbit.coordinates(&image).ok_or(Error::OrbitNotStable { degree: s })?;
                for (i, c) in coords.into_iter().enumerate() {
                    m[(i, j)] = c;
                }
            }
            Ok(m)
        })
        .collect::<Result<_>>()?;
    let rho_v = Rep::from_parts(l.clone(), rho_v)?;
    let rho_t = Rep::from_parts(l.clone(), full)?;
    let homs = hom_space(&rho_t, &rho_v)?;
    if homs.dim() != 1 {
        return Err(Error::OrbitNotStable { degree: s });
    }
    let phi = unvec(&homs.basis()[0].to_dense(k * n), k, n);
    let incl = orbit.basis_matrix().transpose();
    let composite = &phi * &incl;
    let c = composite[(0, 0)].clone();
    if c.is_zero() || composite != MatrixQ::identity(k).scale(&c) {
        return Err(Error::OrbitNotStable { degree: s });
    }
    let projector = phi.scale(&(c.recip()));
    Ok((orbit, rho_v, projector))
}

/// The quotient of `T(𝔤)` by the ideal spanned by `T^{≥r}` and the
/// complements of `V(sθ)` in each `T^s`. Needs triangular data for `x_θ`.
pub fn kr_module(l: &Arc<LieAlgebra>, r: usize) -> Result<KrModule> {
    if r == 0 {
        return Err(Error::DimensionMismatch("r must be at least 1".into()));
    }
    let tri = l.triangular().ok_or(Error::NoTriangularData)?;
    let d = l.dim();
    let limits = Limits::current();
    let needed = monomial_count(d, r - 1).saturating_mul(d);
    if needed > limits.max_monomials {
        return Err(Error::SizeLimit { monomials: needed, cap: limits.max_monomials });
    }
    let theta_vec = SparseVec::from_dense(&tri.x_theta_plus);
    let mut orbits = Vec::new();
    let mut reps = Vec::new();
    let mut projectors = Vec::new();
    for s in 0..r {
        let (orbit, rho_v, proj) = orbit_and_projector(l, &theta_vec, s)?;
        orbits.push(orbit);
        reps.push(rho_v);
        projectors.push(proj);
    }
    let mut rho = reps[0].clone();
    for rep in &reps[1..] {
        rho = rho.direct_sum(rep)?;
    }
    let mut offsets = Vec::new();
    let mut degrees = Vec::new();
    let mut total = 0;
    for (s, o) in orbits.iter().enumerate() {
        offsets.push(total);
        total += o.dim();
        degrees.extend(std::iter::repeat(s).take(o.dim()));
    }
    let mut eta = vec![MatrixQ::zeros(total, total); d];
    for s in 0..r.saturating_sub(1) {
        let ns = monomial_count(d, s);
        let target = &projectors[s + 1];
        for x in 0..d {
            for (j, b) in orbits[s].basis().iter().enumerate() {
                let lifted = b.map_indices(|m| x * ns + m);
                for i in 0..target.nrows() {
                    let v = lifted.dot_dense(target.row(i));
                    if !v.is_zero() {
                        eta[x][(offsets[s + 1] + i, offsets[s] + j)] = v;
                    }
                }
            }
        }
    }
    let module = verify_pair(&rho, eta, r.max(2))?;
    debug_assert!(projectors[0][(0, 0)].is_one());
    Ok(KrModule { graded: GradedModule::new(module, degrees), orbits, projectors })
}
