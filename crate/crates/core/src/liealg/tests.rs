use std::sync::Arc;

use super::*;
use crate::qlinalg::{q, MatrixQ, Rational, SparseVec};

fn sl2_table() -> LieAlgebra {
    // basis e, h, f
    make_algebra(
        3,
        vec!["e".into(), "h".into(), "f".into()],
        vec![
            (1, 0, vec![(0, q(2))]),
            (1, 2, vec![(2, q(-2))]),
            (0, 2, vec![(1, q(1))]),
        ],
    )
    .unwrap()
}

#[test]
fn make_algebra_checks() {
    let l = sl2_table();
    assert_eq!(l.bracket(0, 1).to_dense(3), vec![q(-2), q(0), q(0)]);
    assert!(make_algebra(2, vec!["a".into(), "b".into()], vec![]).is_ok());
    let bad = make_algebra(
        3,
        vec!["e".into(), "h".into(), "f".into()],
        vec![(0, 2, vec![(1, q(1))]), (2, 0, vec![(1, q(1))])],
    );
    assert_eq!(bad.unwrap_err().code(), "NOT_ANTISYMMETRIC");
    // [a,b] = a, [a,c] = b, [b,c] = 0 breaks Jacobi
    let jac = make_algebra(
        3,
        vec!["a".into(), "b".into(), "c".into()],
        vec![(0, 1, vec![(0, q(1))]), (0, 2, vec![(1, q(1))])],
    );
    assert_eq!(jac.unwrap_err().code(), "JACOBI_FAILS");
}

#[test]
fn classical_sl2_matches_table() {
    let l = classical_algebra(Family::Sl, 2).unwrap();
    assert_eq!(l.names(), ["E12", "H1", "E21"]);
    assert_eq!(l, {
        let t = sl2_table();
        LieAlgebra::from_table(3, l.names().to_vec(), (0..9).map(|k| t.bracket(k / 3, k % 3).clone()).collect())
            .with_triangular(l.triangular().unwrap().clone())
            .unwrap()
    });
}

#[test]
fn so3_brackets() {
    let l = classical_algebra(Family::So, 3).unwrap();
    assert_eq!(l.names(), ["A12", "A13", "A23"]);
    // [A12, A13] = E12E13 - ... = -A23 expanded by hand
    assert_eq!(l.bracket(0, 1), &SparseVec::from_pairs([(2, q(-1))]));
    assert_eq!(l.bracket(0, 2), &SparseVec::from_pairs([(1, q(1))]));
    assert_eq!(l.bracket(1, 2), &SparseVec::from_pairs([(0, q(-1))]));
    assert!(l.triangular().is_none());
}

#[test]
fn sl3_theta() {
    let l = classical_algebra(Family::Sl, 3).unwrap();
    assert_eq!(l.dim(), 8);
    let t = l.triangular().unwrap();
    let e13 = basis_index(&l, "E13").unwrap();
    assert_eq!(t.x_theta_plus, unit(8, e13));
    assert_eq!(t.x_theta_minus, unit(8, basis_index(&l, "E31").unwrap()));
    assert_eq!(t.theta, vec![q(1), q(1)]);
}

#[test]
fn perfect() {
    for n in 2..=5 {
        assert!(classical_algebra(Family::Sl, n).unwrap().is_perfect());
    }
    for n in 3..=5 {
        assert!(classical_algebra(Family::So, n).unwrap().is_perfect());
        assert!(classical_algebra(Family::SoSplit, n).unwrap().is_perfect());
    }
    assert!(!LieAlgebra::abelian(2).is_perfect());
    assert_eq!(classical_algebra(Family::So, 4).unwrap().derived_dim(), 6);
}

#[test]
fn split_so_root_data() {
    for n in 3..=6 {
        let (l, nat) = classical_with_natural(Family::SoSplit, n).unwrap();
        let d = l.dim();
        assert_eq!(d, n * (n - 1) / 2);
        let t = l.triangular().unwrap();
        assert_eq!(t.nplus.len(), t.nminus.len());
        assert_eq!(t.nplus.len() * 2 + t.h.len(), d);
        // x+θ is killed by n+, x-θ by n-
        for &i in &t.nplus {
            assert!(l.bracket_vec(&unit(d, i), &t.x_theta_plus).iter().all(|c| *c == q(0)));
        }
        for &i in &t.nminus {
            assert!(l.bracket_vec(&unit(d, i), &t.x_theta_minus).iter().all(|c| *c == q(0)));
        }
        // natural rep: n+ strictly upper triangular
        for &i in &t.nplus {
            let m = nat.matrix(i);
            for r in 0..n {
                for c in 0..=r {
                    assert_eq!(m[(r, c)], q(0));
                }
            }
        }
        // the form is antidiagonal
        let b = invariant_symmetric_form(&nat).unwrap();
        for r in 0..n {
            for c in 0..n {
                assert_eq!(b[(r, c)], if r + c == n - 1 { q(1) } else { q(0) });
            }
        }
    }
}

#[test]
fn bad_rank() {
    assert_eq!(classical_algebra(Family::Sl, 1).unwrap_err().code(), "BAD_RANK");
    assert_eq!(classical_algebra(Family::So, 2).unwrap_err().code(), "BAD_RANK");
}

#[test]
fn adjoint_and_killing() {
    let l = Arc::new(classical_algebra(Family::Sl, 2).unwrap());
    let ad = adjoint_rep(&l);
    let h = ad.matrix(1);
    assert_eq!(h, &MatrixQ::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
    assert_eq!((h * h).trace(), q(8));
    assert!(ad.bracket_failure().is_none());
    let ab = Arc::new(LieAlgebra::abelian(2));
    assert!(adjoint_rep(&ab).matrices().iter().all(MatrixQ::is_zero));

    // trace-form oracle, then normalize the first nonzero entry
    let mut kappa = MatrixQ::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            kappa[(i, j)] = (ad.matrix(i) * ad.matrix(j)).trace();
        }
    }
    assert_eq!(kappa[(0, 2)], q(4));
    assert_eq!(kappa[(1, 1)], q(8));
    let b = invariant_symmetric_form(&ad).unwrap();
    assert_eq!(b, kappa.scale(&Rational::new(1.into(), 4.into())));
}

#[test]
fn hom_spaces() {
    let l = Arc::new(classical_algebra(Family::Sl, 2).unwrap());
    let ad = adjoint_rep(&l);
    let triv = trivial(l.clone(), 1);
    assert_eq!(hom_space(&ad, &ad).unwrap().dim(), 1);
    assert_eq!(hom_space(&triv, &ad).unwrap().dim(), 0);
    assert_eq!(hom_space(&triv, &triv).unwrap().dim(), 1);
    let id = MatrixQ::identity(3).vectorize();
    assert!(hom_space(&ad, &ad).unwrap().contains_dense(&id));
    // the hom module's invariants are the hom space
    let h = Rep::hom(&ad, &ad).unwrap();
    assert!(h.bracket_failure().is_none());
    assert_eq!(hom_space(&trivial(l.clone(), 1), &h).unwrap().dim(), 1);
}

#[test]
fn forms() {
    let (_, nat) = classical_with_natural(Family::So, 3).unwrap();
    assert_eq!(invariant_symmetric_form(&nat).unwrap(), MatrixQ::identity(3));
    let l = Arc::new(classical_algebra(Family::Sl, 2).unwrap());
    assert_eq!(invariant_symmetric_form(&trivial(l.clone(), 2)).unwrap_err().code(), "NOT_UNIQUE");
    let (_, nat2) = classical_with_natural(Family::Sl, 2).unwrap();
    assert_eq!(invariant_symmetric_form(&nat2).unwrap_err().code(), "NO_FORM");
}

#[test]
fn rep_rejects_non_hom() {
    let (l, nat) = classical_with_natural(Family::Sl, 2).unwrap();
    let mut mats = nat.matrices().to_vec();
    mats[0] = mats[0].scale(&q(2));
    assert_eq!(Rep::new(l, mats).unwrap_err().code(), "C1_FAILS");
}

#[test]
fn json_round_trip() {
    let l = classical_algebra(Family::Sl, 3).unwrap();
    let v = io::algebra_to_value(&l);
    assert_eq!(io::algebra_from_value(&v).unwrap(), l);
    let text = r#"{"dim":3,"basis":["e","h","f"],"brackets":[[1,0,[[0,"2"]]],[1,2,[[2,"-2"]]],[0,2,[[1,"1"]]]]}"#;
    assert_eq!(io::algebra_from_json(text).unwrap(), sl2_table());
}
