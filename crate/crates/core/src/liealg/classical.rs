use std::sync::Arc;


use super::{LieAlgebra, Rep, Triangular};
use crate::error::{Error, Result};
use crate::qlinalg::{one, solve, MatrixQ, Rational, SparseVec};

/// Classical families with a fixed matrix realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `sl_n` on `E_ij` (i ≠ j) and `H_i = E_ii - E_{i+1,i+1}`.
    Sl,
    /// `so_n` on `A_ij = E_ij - E_ji`, preserving the identity form. Over Q
    /// this real form has no rational Cartan decomposition, so no triangular
    /// data is attached.
    So,
    /// `so_n` preserving the antidiagonal form; root vectors are rational and
    /// triangular data is attached.
    SoSplit,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl" => Ok(Family::Sl),
            "so" => Ok(Family::So),
            "so-split" | "sosplit" => Ok(Family::SoSplit),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

fn elementary(n: usize, i: usize, j: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    m[(i, j)] = one();
    m
}

fn pair_name(prefix: &str, n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}

/// Structure constants of the span of linearly independent, bracket-closed
/// matrices, together with the defining representation.
pub fn from_matrix_basis(names: Vec<String>, basis: Vec<MatrixQ>) -> Result<(LieAlgebra, Vec<MatrixQ>)> {
    let d = basis.len();
    let columns: Vec<Vec<Rational>> = basis.iter().map(MatrixQ::vectorize).collect();
    let n2 = columns.first().map_or(0, Vec::len);
    let coords = MatrixQ::from_columns(&columns, n2);
    let mut table = vec![SparseVec::new(); d * d];
    for i in 0..d {
        for j in i + 1..d {
            let c = basis[i].commutator(&basis[j]);
            let x = solve(&coords, &c.vectorize())?.ok_or_else(|| {
                Error::DimensionMismatch("matrix basis is not closed under the commutator".into())
            })?;
            let v = SparseVec::from_dense(&x);
            table[j * d + i] = v.scale(&-one());
            table[i * d + j] = v;
        }
    }
    Ok((LieAlgebra::from_table(d, names, table), basis))
}

struct Realization {
    names: Vec<String>,
    basis: Vec<MatrixQ>,
    nplus: Vec<usize>,
    h: Vec<usize>,
    nminus: Vec<usize>,
    theta_plus: usize,
    theta_minus: usize,
}

fn sl_realization(n: usize) -> Realization {
    let (mut names, mut basis) = (Vec::new(), Vec::new());
    let (mut nplus, mut h, mut nminus) = (Vec::new(), Vec::new(), Vec::new());
    let mut positive = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positive.push((i, j));
        }
    }
    for &(i, j) in &positive {
        nplus.push(basis.len());
        names.push(pair_name("E", n, i, j));
        basis.push(elementary(n, i, j));
    }
    for i in 0..n - 1 {
        h.push(basis.len());
        names.push(format!("H{}", i + 1));
        basis.push(&elementary(n, i, i) - &elementary(n, i + 1, i + 1));
    }
    for &(i, j) in &positive {
        nminus.push(basis.len());
        names.push(pair_name("E", n, j, i));
        basis.push(elementary(n, j, i));
    }
    let theta_plus = nplus[positive.iter().position(|&p| p == (0, n - 1)).unwrap()];
    let theta_minus = nminus[positive.iter().position(|&p| p == (0, n - 1)).unwrap()];
    Realization { names, basis, nplus, h, nminus, theta_plus, theta_minus }
}

fn so_compact_realization(n: usize) -> (Vec<String>, Vec<MatrixQ>) {
    let (mut names, mut basis) = (Vec::new(), Vec::new());
    for i in 0..n {
        for j in i + 1..n {
            names.push(pair_name("A", n, i, j));
            basis.push(&elementary(n, i, j) - &elementary(n, j, i));
        }
    }
    (names, basis)
}

/// Split form: `X^T J + J X = 0` with `J` the antidiagonal identity. Basis
/// elements `E_pq - E_{q'p'}` with `p' = n-1-p`, one per pair with `p + q < n-1`.
fn so_split_realization(n: usize) -> Realization {
    let bar = |p: usize| n - 1 - p;
    let element = |p: usize, q: usize| &elementary(n, p, q) - &elementary(n, bar(q), bar(p));
    let mut positive = Vec::new();
    let mut cartan = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p + q < n - 1 {
                if p < q {
                    positive.push((p, q));
                } else if p == q {
                    cartan.push(p);
                }
            }
        }
    }
    let (mut names, mut basis) = (Vec::new(), Vec::new());
    let (mut nplus, mut h, mut nminus) = (Vec::new(), Vec::new(), Vec::new());
    for &(p, q) in &positive {
        nplus.push(basis.len());
        names.push(pair_name("X", n, p, q));
        basis.push(element(p, q));
    }
    for &p in &cartan {
        h.push(basis.len());
        names.push(format!("H{}", p + 1));
        basis.push(element(p, p));
    }
    for &(p, q) in &positive {
        nminus.push(basis.len());
        names.push(pair_name("X", n, q, p));
        basis.push(element(q, p));
    }
    let top = if n == 3 { (0, 1) } else { (0, n - 2) };
    let k = positive.iter().position(|&p| p == top).unwrap();
    let (theta_plus, theta_minus) = (nplus[k], nminus[k]);
    Realization { names, basis, nplus, h, nminus, theta_plus, theta_minus }
}

fn with_roots(r: Realization) -> Result<(LieAlgebra, Vec<MatrixQ>)> {
    let (alg, mats) = from_matrix_basis(r.names, r.basis)?;
    let d = alg.dim();
    let xp = super::algebra::unit(d, r.theta_plus);
    let xm = super::algebra::unit(d, r.theta_minus);
    let theta = r
        .h
        .iter()
        .map(|&hk| alg.bracket(hk, r.theta_plus).get(r.theta_plus))
        .collect();
    let alg = alg.with_triangular(Triangular {
        nplus: r.nplus,
        h: r.h,
        nminus: r.nminus,
        x_theta_plus: xp,
        x_theta_minus: xm,
        theta,
    })?;
    Ok((alg, mats))
}

/// The classical algebra together with its natural representation.
pub fn classical_with_natural(family: Family, n: usize) -> Result<(Arc<LieAlgebra>, Rep)> {
    let bad = |name: &str| Err(Error::BadRank { family: name.into(), n });
    let (alg, mats) = match family {
        Family::Sl if n >= 2 => with_roots(sl_realization(n))?,
        Family::Sl => return bad("sl"),
        Family::So if n >= 3 => {
            let (names, basis) = so_compact_realization(n);
            from_matrix_basis(names, basis)?
        }
        Family::So => return bad("so"),
        Family::SoSplit if n >= 3 => with_roots(so_split_realization(n))?,
        Family::SoSplit => return bad("so-split"),
    };
    let alg = Arc::new(alg);
    let natural = Rep::new(alg.clone(), mats)?;
    Ok((alg, natural))
}

pub fn classical_algebra(family: Family, n: usize) -> Result<LieAlgebra> {
    Ok((*classical_with_natural(family, n)?.0).clone())
}

/// Index of the basis element named `name`, if any.
pub fn basis_index(alg: &LieAlgebra, name: &str) -> Option<usize> {
    alg.names().iter().position(|s| s == name)
}


/// Algebra named by a short tag: `sl<n>`, `so<n>` or `sosplit<n>`.
pub fn builtin_algebra(tag: &str) -> Result<(Arc<LieAlgebra>, Rep)> {
    let parse = |prefix: &str, family| {
        tag.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
            .map(|n| classical_with_natural(family, n))
    };
    parse("sosplit", Family::SoSplit)
        .or_else(|| parse("so", Family::So))
        .or_else(|| parse("sl", Family::Sl))
        .unwrap_or_else(|| Err(Error::Parse(format!("unknown algebra tag {tag:?}"))))
}

/// The `(n+1)`-dimensional irreducible representation of `sl2` in the basis
/// `(E12, H1, E21)` of `classical_algebra(Sl, 2)`, on weight vectors
/// `v_0, …, v_n` with `h v_k = (n - 2k) v_k`.
pub fn sl2_irrep(alg: Arc<LieAlgebra>, n: usize) -> Result<Rep> {
    let d = n + 1;
    let mut e = MatrixQ::zeros(d, d);
    let mut h = MatrixQ::zeros(d, d);
    let mut f = MatrixQ::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = Rational::from_integer((n as i64 - 2 * k as i64).into());
        if k + 1 < d {
            f[(k + 1, k)] = Rational::from_integer((k as i64 + 1).into());
        }
        if k >= 1 {
            e[(k - 1, k)] = Rational::from_integer(((n - k + 1) as i64).into());
        }
    }
    Rep::new(alg, vec![e, h, f])
}
