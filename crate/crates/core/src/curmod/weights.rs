use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::module::PairModule;
use crate::error::{Error, Result};
use crate::liealg::unit;
use crate::qlinalg::{kernel_of_rows, solve, MatrixQ, Rational, SparseVec, Subspace};

/// Characteristic polynomial `det(t I - A)`, coefficients from the constant
/// term up (Faddeev-LeVerrier).
pub fn charpoly(a: &MatrixQ) -> Vec<Rational> {
    let n = a.nrows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = MatrixQ::zeros(n, n);
    let id = MatrixQ::identity(n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&c[n - k + 1]);
        let am = a * &m;
        c[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    c
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Divides by `t - x`, assuming `x` is a root.
fn deflate(p: &[Rational], x: &Rational) -> Vec<Rational> {
    let n = p.len() - 1;
    let mut q = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * x;
        q[i] = carry.clone();
    }
    q
}

/// Rational roots with multiplicity (ascending) and the leftover factor.
pub fn rational_roots(p: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut p: Vec<Rational> = p.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Rational::zero());
        p.remove(0);
    }
    if p.len() > 1 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut candidates = Vec::new();
        for num in divisors(&ints[0]) {
            for den in divisors(ints.last().unwrap()) {
                let x = Rational::new(num.clone(), den);
                candidates.push(-x.clone());
                candidates.push(x);
            }
        }
        candidates.sort();
        candidates.dedup();
        for x in candidates {
            while p.len() > 1 && eval_poly(&p, &x).is_zero() {
                p = deflate(&p, &x);
                roots.push(x.clone());
            }
        }
    }
    roots.sort();
    (roots, p)
}

/// A joint eigenspace inside the highest-weight locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    /// Eigenvalue of each `h t^r`, ordered by `h` then `r`.
    pub weight: Vec<Rational>,
    pub space: Subspace,
}

fn annihilator_rows(s: &Subspace) -> Vec<SparseVec> {
    kernel_of_rows(s.ambient_dim(), s.basis().iter().cloned()).basis().to_vec()
}

/// Largest subspace of `w` mapped into itself by every operator.
fn invariant_core(w: Subspace, ops: &[MatrixQ]) -> Subspace {
    let n = w.ambient_dim();
    let mut w = w;
    loop {
        let ann = annihilator_rows(&w);
        let mut rows: Vec<SparseVec> = ann.clone();
        for h in ops {
            for a in &ann {
                let dense = a.to_dense(n);
                let row: Vec<Rational> = (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, i| acc + &dense[i] * &h[(i, j)]))
                    .collect();
                rows.push(SparseVec::from_dense(&row));
            }
        }
        let next = kernel_of_rows(n, rows);
        if next.dim() == w.dim() {
            return next;
        }
        w = next;
    }
}

/// Splits `w` (invariant under `h`) into eigenspaces of `h`.
fn eigen_split(w: &Subspace, h: &MatrixQ) -> Result<Vec<(Rational, Subspace)>> {
    let n = w.ambient_dim();
    let basis = w.basis_dense();
    let k = basis.len();
    let mut coords = MatrixQ::zeros(k, k);
    for (j, b) in basis.iter().enumerate() {
        let img = h.mul_vec(b);
        let c = w.coordinates(&SparseVec::from_dense(&img)).expect("subspace is invariant");
        for i in 0..k {
            coords[(i, j)] = c[i].clone();
        }
    }
    let poly = charpoly(&coords);
    let (mut roots, rest) = rational_roots(&poly);
    if rest.len() > 1 {
        return Err(Error::IrrationalEigenvalue { charpoly: poly });
    }
    roots.dedup();
    let mut out = Vec::new();
    for lambda in roots {
        let shifted = &coords - &MatrixQ::identity(k).scale(&lambda);
        let kernel = kernel_of_rows(k, shifted.sparse_rows());
        let vectors = kernel.basis().iter().map(|c| {
            let mut v = vec![Rational::zero(); n];
            for (j, x) in c.iter() {
                for (s, b) in v.iter_mut().zip(&basis[*j]) {
                    *s += x * b;
                }
            }
            SparseVec::from_dense(&v)
        });
        out.push((lambda, Subspace::span(n, vectors.collect::<Vec<_>>())));
    }
    Ok(out)
}

/// Joint kernel of `n+ ⊗ t^r` for `r` up to the certificate's cover, split
/// into joint eigenspaces of `h ⊗ t^r`.
pub fn highest_weight_spaces(m: &PairModule) -> Result<Vec<WeightSpace>> {
    let l = m.algebra().clone();
    let tri = l.triangular().ok_or(Error::NoTriangularData)?;
    let cover = m.certificate().cover();
    let d = l.dim();
    let n = m.dim();
    let mut rows = Vec::new();
    for &x in &tri.nplus {
        for r in 0..=cover {
            rows.extend(m.action_matrix(&unit(d, x), r)?.sparse_rows());
        }
    }
    let kernel = kernel_of_rows(n, rows);
    let mut hops = Vec::new();
    for &h in &tri.h {
        for r in 0..=cover {
            hops.push(m.action_matrix(&unit(d, h), r)?);
        }
    }
    let mut spaces = vec![(Vec::new(), invariant_core(kernel, &hops))];
    for (i, h) in hops.iter().enumerate() {
        let mut next = Vec::new();
        for (weight, w) in spaces {
            if w.is_zero() {
                continue;
            }
            for (lambda, e) in eigen_split(&w, h)? {
                let mut wt: Vec<Rational> = weight.clone();
                wt.push(lambda);
                next.push((wt, invariant_core(e, &hops[i + 1..])));
            }
        }
        spaces = next;
    }
    Ok(spaces
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(weight, space)| WeightSpace { weight, space })
        .collect())
}

/// Basis vectors of every joint eigenspace in the highest-weight locus.
pub fn highest_vectors(m: &PairModule) -> Result<Vec<Vec<Rational>>> {
    Ok(highest_weight_spaces(m)?.into_iter().flat_map(|w| w.space.basis_dense()).collect())
}

/// Coefficients of `(t - a₁)⋯(t - a_k)` from the constant term up.
pub fn poly_from_roots(roots: &[Rational]) -> Vec<Rational> {
    let mut p = vec![Rational::one()];
    for a in roots {
        let mut next = vec![Rational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * a;
        }
        p = next;
    }
    p
}

/// Whether `x ⊗ p(t)` kills the module for every basis element `x`.
pub fn annihilated_by(m: &PairModule, poly: &[Rational]) -> Result<bool> {
    let d = m.algebra().dim();
    let n = m.dim();
    for x in 0..d {
        let mut acc = MatrixQ::zeros(n, n);
        for (s, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &m.action_matrix(&unit(d, x), s)?.scale(c);
            }
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn annihilator_poly_test(m: &PairModule, roots: &[Rational]) -> Result<bool> {
    annihilated_by(m, &poly_from_roots(roots))
}

/// Some monic `p` of degree `k` with `x ⊗ p(t)` acting as zero for all `x`,
/// or `None` when no such polynomial exists.
pub fn find_annihilating_polynomial(m: &PairModule, k: usize) -> Result<Option<Vec<Rational>>> {
    let d = m.algebra().dim();
    let mut columns: Vec<Vec<Rational>> = vec![Vec::new(); k + 1];
    for x in 0..d {
        for (s, col) in columns.iter_mut().enumerate() {
            col.extend(m.action_matrix(&unit(d, x), s)?.vectorize());
        }
    }
    let rows = columns[0].len();
    let a = MatrixQ::from_columns(&columns[..k], rows);
    let b: Vec<Rational> = columns[k].iter().map(|x| -x).collect();
    Ok(solve(&a, &b)?.map(|mut c| {
        c.push(Rational::one());
        c
    }))
}
