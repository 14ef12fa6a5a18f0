use curalg::qlinalg::{kernel_basis, q, rref, solve, MatrixQ, Subspace};
use proptest::prelude::*;

fn matrix_with(rows: usize, c: usize) -> impl Strategy<Value = MatrixQ> {
    (0..=rows).prop_flat_map(move |r| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| MatrixQ::from_vec(r, c, v.into_iter().map(q).collect()))
    })
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = MatrixQ> {
    (1..=max_cols).prop_flat_map(move |c| matrix_with(max_rows, c))
}

fn matrix_pair(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (MatrixQ, MatrixQ)> {
    (1..=max_cols).prop_flat_map(move |c| (matrix_with(max_rows, c), matrix_with(max_rows, c)))
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(5, 6)) {
        let r = rref(&m);
        prop_assert_eq!(r.rank + kernel_basis(&m).dim(), m.ncols());
        for v in kernel_basis(&m).basis_dense() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(5, 6)) {
        let once = rref(&m).reduced;
        prop_assert_eq!(rref(&once).reduced, once);
    }

    #[test]
    fn dimension_formula((a, b) in matrix_pair(4, 5)) {
        let n = a.ncols();
        let sa = Subspace::span(n, a.sparse_rows());
        let sb = Subspace::span(n, b.sparse_rows());
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersection(&sb).unwrap();
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
        prop_assert!(sa.contains(&meet).unwrap() && sb.contains(&meet).unwrap());
        prop_assert!(sum.contains(&sa).unwrap() && sum.contains(&sb).unwrap());
    }

    #[test]
    fn solve_is_exact(m in small_matrix(4, 5), x in prop::collection::vec(-4i64..=4, 5)) {
        let x: Vec<_> = x.into_iter().take(m.ncols()).map(q).collect();
        prop_assume!(x.len() == m.ncols());
        let b = m.mul_vec(&x);
        let sol = solve(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }
}
