#![allow(dead_code)]

use std::collections::HashMap;

use curalg::freelie::index_word;
use curalg::qlinalg::{MatrixQ, Rational};
use num_traits::{One, Zero};

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Necklace count `(1/r) Σ_{s | r} μ(s) d^{r/s}`.
pub fn witt(d: usize, r: usize) -> usize {
    let mut total: i128 = 0;
    for s in 1..=r {
        if r % s == 0 {
            total += mobius(s) as i128 * (d as i128).pow((r / s) as u32);
        }
    }
    (total / r as i128) as usize
}

/// Rank by plain Gaussian elimination on dense rows.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let sub = &f * &rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Row-reduced basis of the span, by the same elimination.
pub fn row_basis(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for v in rows {
        let mut cand = basis.clone();
        cand.push(v.clone());
        if rank(cand) > basis.len() {
            basis.push(v);
        }
    }
    basis
}

/// `rank τ_r` through the natural representation: the span of `r`-fold
/// nested commutators `[X_{i₁}, [X_{i₂}, … X_{i_r}]]`.
pub fn nested_commutator_rank(natural: &[MatrixQ], r: usize) -> usize {
    let mut layer: Vec<MatrixQ> = natural.to_vec();
    for _ in 1..r {
        let mut next = Vec::new();
        for x in natural {
            for b in &layer {
                next.push(x.commutator(b));
            }
        }
        let vecs: Vec<Vec<Rational>> = next.iter().map(|m| m.data().to_vec()).collect();
        let keep = row_basis(vecs);
        let n = natural[0].nrows();
        layer = keep.into_iter().map(|v| MatrixQ::from_vec(n, n, v)).collect();
    }
    rank(layer.iter().map(|m| m.data().to_vec()).collect())
}

/// `M_{w₁} ⋯ M_{w_r}` for every word of length `r`, indexed big-endian.
pub fn word_products(mats: &[MatrixQ], r: usize) -> Vec<MatrixQ> {
    let d = mats.len();
    let n = mats.first().map_or(0, MatrixQ::nrows);
    let mut layer = vec![MatrixQ::identity(n)];
    for _ in 0..r {
        let mut next = Vec::with_capacity(layer.len() * d);
        for p in &layer {
            for m in mats {
                next.push(p * m);
            }
        }
        layer = next;
    }
    layer
}

/// `Σ_w c_w M_{w₁} ⋯ M_{w_r}` for a tensor-coordinate vector.
pub fn apply_monomials(products: &[MatrixQ], v: &[(usize, Rational)]) -> MatrixQ {
    let n = products[0].nrows();
    let mut acc = MatrixQ::zeros(n, n);
    for (i, c) in v {
        acc = &acc + &products[*i].scale(c);
    }
    acc
}

pub fn words_of(d: usize, r: usize) -> Vec<Vec<usize>> {
    (0..d.pow(r as u32)).map(|i| index_word(i, d, r)).collect()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::one();
    v
}

/// Counts of each key, for multiset comparisons.
pub fn histogram<T: std::hash::Hash + Eq>(xs: impl IntoIterator<Item = T>) -> HashMap<T, usize> {
    let mut h = HashMap::new();
    for x in xs {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}
