use std::sync::Arc;

use super::*;
use crate::liealg::{adjoint_rep, classical_with_natural, trivial, unit, Family, LieAlgebra, Rep};
use crate::qlinalg::{q, MatrixQ, Rational};

fn sl2() -> (Arc<LieAlgebra>, Rep) {
    classical_with_natural(Family::Sl, 2).unwrap()
}

#[test]
fn verify_examples() {
    let (l, nat) = sl2();
    let zero = vec![MatrixQ::zeros(2, 2); 3];
    assert_eq!(verify_pair(&nat, zero, 6).unwrap().certificate(), &Certificate::ExactNilpotent(2));
    let m = verify_pair(&nat, nat.matrices().to_vec(), 6).unwrap();
    assert_eq!(m.certificate(), &Certificate::Bounded(6));
    let mut bad = nat.matrices().to_vec();
    bad[0] = MatrixQ::from_i64(&[&[1, 2], &[3, 4]]);
    let err = verify_pair(&nat, bad, 6).unwrap_err();
    assert_eq!(err.code(), "C2_FAILS");
    assert_eq!(err.witness(), serde_json::json!([0, 0]));
    let _ = l;
}

#[test]
fn c3_failure_is_reported() {
    // On V(3) ⊕ V(1) the equivariant maps between the two summands pass (C2)
    // but their sum does not kill ker τ₃.
    let (l, _) = sl2();
    let rho = crate::liealg::sl2_irrep(l.clone(), 3)
        .unwrap()
        .direct_sum(&crate::liealg::sl2_irrep(l.clone(), 1).unwrap())
        .unwrap();
    let n = rho.dim();
    let h = crate::liealg::hom_space(&adjoint_rep(&l), &Rep::hom(&rho, &rho).unwrap()).unwrap();
    assert_eq!(h.dim(), 4);
    let basis = h.basis_dense();
    let eta_of = |pick: &[usize]| -> Vec<MatrixQ> {
        (0..3)
            .map(|x| {
                let mut m = MatrixQ::zeros(n, n);
                for &k in pick {
                    for r in 0..n {
                        for c in 0..n {
                            m[(r, c)] += &basis[k][(r * n + c) * 3 + x];
                        }
                    }
                }
                m
            })
            .collect()
    };
    for k in 0..4 {
        assert!(verify_pair(&rho, eta_of(&[k]), 4).is_ok());
    }
    let eta = eta_of(&[2, 3]);
    assert!(c2_failure(&rho, &eta).is_none());
    let err = verify_pair(&rho, eta, 4).unwrap_err();
    assert_eq!(err.code(), "C3_FAILS");
    assert_eq!(err.witness()["degree"], serde_json::json!(3));
}

#[test]
fn act_examples() {
    let (l, nat) = sl2();
    let m = evaluation_module(&nat, &q(2)).unwrap();
    let v = vec![q(3), q(-1)];
    let e = unit(3, 0);
    assert_eq!(m.act(&e, 3, &v).unwrap(), nat.matrix(0).scale(&q(8)).mul_vec(&v));
    assert_eq!(m.act(&e, 1, &v).unwrap(), m.eta()[0].mul_vec(&v));
    for r in 0..=5 {
        for x in 0..3 {
            let expected = nat.matrix(x).scale(&Rational::from_integer(2.into()).pow(r as i32));
            assert_eq!(m.action_matrix(&unit(3, x), r).unwrap(), expected);
        }
    }
    let ab = Arc::new(LieAlgebra::abelian(2));
    let rho = trivial(ab, 1);
    let m = verify_pair(&rho, vec![MatrixQ::identity(1), MatrixQ::zeros(1, 1)], 4).unwrap();
    assert_eq!(m.act(&[q(1), q(0)], 2, &[q(1)]).unwrap_err().code(), "NO_PREIMAGE");
    let b = verify_pair(&nat, nat.matrices().to_vec(), 3).unwrap();
    assert_eq!(b.act(&e, 4, &v).unwrap_err().code(), "UNCOVERED_DEGREE");
    let _ = l;
}

#[test]
fn twists() {
    let (_, nat) = sl2();
    let m = verify_pair(&nat, nat.matrices().to_vec(), 5).unwrap();
    let z = twist_eps(&m, &q(0));
    assert!(z.eta().iter().all(MatrixQ::is_zero));
    assert_eq!(twist_eps(&m, &q(1)), m);
    let eb = evaluation_module(&nat, &q(5)).unwrap();
    let g = twist_gamma(&eb, &q(2));
    assert_eq!(g.evaluation_point(), Some(q(3)));
    assert_eq!(twist_gamma(&g, &q(-2)), eb);
}

#[test]
fn hom_examples() {
    let (_, nat) = sl2();
    let a = evaluation_module(&nat, &q(1)).unwrap();
    let b = evaluation_module(&nat, &q(2)).unwrap();
    assert_eq!(hom_module_space(&a, &a).unwrap().dim(), 1);
    assert_eq!(hom_module_space(&a, &b).unwrap().dim(), 0);
    let aa = direct_sum(&a, &a).unwrap();
    assert_eq!(hom_module_space(&a, &aa).unwrap().dim(), 2);
    assert!(rep_hom_space(&a, &b).unwrap().contains(&hom_module_space(&a, &b).unwrap()).unwrap());
}

#[test]
fn isomorphisms() {
    let (l, nat) = sl2();
    let a = evaluation_module(&nat, &q(1)).unwrap();
    assert!(find_isomorphism(&a, &a, 7).unwrap().found().is_some());
    let z = evaluation_module(&nat, &q(0)).unwrap();
    assert_eq!(find_isomorphism(&z, &a, 7).unwrap(), IsoSearch::NotFound { proven: true });
    let phi = MatrixQ::from_i64(&[&[1, 2], &[1, 3]]);
    let inv = phi.inverse().unwrap();
    let conj = |ms: &[MatrixQ]| ms.iter().map(|m| &(&phi * m) * &inv).collect::<Vec<_>>();
    let rho2 = Rep::new(l.clone(), conj(nat.matrices())).unwrap();
    let b = verify_pair(&rho2, conj(a.eta()), 4).unwrap();
    let iso = find_isomorphism(&a, &b, 1).unwrap();
    let f = iso.found().unwrap();
    assert!(!f.det().is_zero_rational());
}

trait IsZeroRational {
    fn is_zero_rational(&self) -> bool;
}

impl IsZeroRational for Rational {
    fn is_zero_rational(&self) -> bool {
        *self == q(0)
    }
}

#[test]
fn duals() {
    let (l, nat) = sl2();
    let t = evaluation_module(&trivial(l.clone(), 1), &q(0)).unwrap();
    assert_eq!(dual_module(&t), t);
    let a = evaluation_module(&nat, &q(3)).unwrap();
    assert!(find_isomorphism(&dual_module(&a), &a, 0).unwrap().found().is_some());
    assert_eq!(dual_module(&dual_module(&a)), a);
    assert_eq!(dual_module(&a).evaluation_point(), Some(q(3)));
}

#[test]
fn tensors() {
    let (l, nat) = sl2();
    let a = evaluation_module(&nat, &q(1)).unwrap();
    let t = evaluation_module(&trivial(l.clone(), 1), &q(0)).unwrap();
    let ta = tensor_module(&t, &a, 4).unwrap();
    assert_eq!(ta.rho(), a.rho());
    assert_eq!(ta.eta(), a.eta());
    let ad = adjoint_rep(&l);
    let b = evaluation_module(&ad, &q(1)).unwrap();
    let ab = tensor_module(&a, &b, 4).unwrap();
    assert_eq!(ab, evaluation_module(&nat.tensor(&ad).unwrap(), &q(1)).unwrap());
    let z = evaluation_module(&nat, &q(0)).unwrap();
    let zo = tensor_module(&z, &a, 5).unwrap();
    assert_eq!(zo.certificate(), &Certificate::Bounded(5));
    assert_eq!(hom_module_space(&zo, &zo).unwrap().dim(), 1);
}

#[test]
fn annihilators() {
    let (_, nat) = sl2();
    let a = evaluation_module(&nat, &q(-2)).unwrap();
    assert!(annihilator_poly_test(&a, &[q(-2)]).unwrap());
    let s = direct_sum(&evaluation_module(&nat, &q(0)).unwrap(), &evaluation_module(&nat, &q(1)).unwrap()).unwrap();
    assert!(annihilator_poly_test(&s, &[q(0), q(1)]).unwrap());
    assert!(!annihilator_poly_test(&s, &[q(0)]).unwrap());
    assert_eq!(find_annihilating_polynomial(&s, 1).unwrap(), None);
    assert_eq!(find_annihilating_polynomial(&s, 2).unwrap(), Some(vec![q(0), q(-1), q(1)]));
    assert_eq!(poly_from_roots(&[q(1), q(2)]), vec![q(2), q(-3), q(1)]);
}

#[test]
fn highest() {
    let (l, nat) = sl2();
    let a = evaluation_module(&nat, &q(4)).unwrap();
    assert_eq!(highest_vectors(&a).unwrap(), vec![vec![q(1), q(0)]]);
    let t = evaluation_module(&trivial(l.clone(), 2), &q(0)).unwrap();
    assert_eq!(highest_vectors(&t).unwrap().len(), 2);
    let ad = evaluation_module(&adjoint_rep(&l), &q(1)).unwrap();
    let tri = l.triangular().unwrap();
    assert_eq!(highest_vectors(&ad).unwrap(), vec![tri.x_theta_plus.clone()]);
    let (so, so_nat) = classical_with_natural(Family::So, 3).unwrap();
    let m = evaluation_module(&so_nat, &q(0)).unwrap();
    assert_eq!(highest_vectors(&m).unwrap_err().code(), "NO_TRIANGULAR_DATA");
    let _ = so;
}

#[test]
fn irrational_eigenvalues_are_reported() {
    // h acting by a rotation-like block with eigenvalues ±sqrt 2 on a rep of a
    // one-dimensional algebra with triangular data h = {0}.
    let base = LieAlgebra::abelian(1)
        .with_triangular(crate::liealg::Triangular {
            nplus: vec![],
            h: vec![0],
            nminus: vec![],
            x_theta_plus: vec![q(0)],
            x_theta_minus: vec![q(0)],
            theta: vec![q(0)],
        })
        .unwrap();
    let l = Arc::new(base);
    let rho = Rep::new(l, vec![MatrixQ::from_i64(&[&[0, 2], &[1, 0]])]).unwrap();
    let m = verify_pair(&rho, vec![MatrixQ::zeros(2, 2)], 4).unwrap();
    let err = highest_vectors(&m).unwrap_err();
    assert_eq!(err.code(), "IRRATIONAL_EIGENVALUE");
}

#[test]
fn polynomials() {
    let a = MatrixQ::from_i64(&[&[2, 1], &[0, 3]]);
    assert_eq!(charpoly(&a), vec![q(6), q(-5), q(1)]);
    let (roots, rest) = rational_roots(&[q(6), q(-5), q(1)]);
    assert_eq!((roots, rest), (vec![q(2), q(3)], vec![q(1)]));
    let (roots, rest) = rational_roots(&[q(0), q(-2), q(0), q(1)]);
    assert_eq!(roots, vec![q(0)]);
    assert_eq!(rest, vec![q(-2), q(0), q(1)]);
    let half = Rational::new(1.into(), 2.into());
    let (roots, _) = rational_roots(&poly_from_roots(&[half.clone(), half.clone(), q(-3)]));
    assert_eq!(roots, vec![q(-3), half.clone(), half]);
}

#[test]
fn module_json_round_trip() {
    let (_, nat) = sl2();
    let a = evaluation_module(&nat, &q(1)).unwrap();
    let v = io::module_to_value(&a, Some("sl2"));
    let back = io::module_from_value(&v, 4).unwrap();
    assert_eq!(back.rho(), a.rho());
    assert_eq!(back.eta(), a.eta());
    let v = io::module_to_value(&a, None);
    assert_eq!(io::module_from_value(&v, 4).unwrap().eta(), a.eta());
}
