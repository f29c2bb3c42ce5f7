mod common;

use common::{close, close_scalar, fixture, kind, matrix, ALL_KINDS};
use dkstp::lie::{ad_matrix, bracket, center_dim, gamma_matrix, killing_form};
use dkstp::linalg::{rank_nullspace, vec_stack, StackMode, DEFAULT_RANK_TOL};
use dkstp::{Error, Matrix, ProductKind};
use proptest::prelude::*;

fn lie_triple() -> (Matrix, Matrix, Matrix) {
    (
        Matrix::from_rows(&[[1.0, 0.0, -1.0], [0.0, 1.0, 1.0]]).unwrap(),
        Matrix::from_rows(&[[0.0, 1.0, 0.0], [-1.0, 0.0, 1.0]]).unwrap(),
        Matrix::from_rows(&[[0.0, 0.0, 1.0], [0.0, 1.0, 0.0]]).unwrap(),
    )
}

fn ad(a: &Matrix) -> Matrix {
    ad_matrix(a, ProductKind::LEFT).unwrap().value
}

#[test]
fn printed_adjoints() {
    let (a, b, c) = lie_triple();
    assert_eq!(ad(&b), fixture("ad_b"));
    assert_eq!(ad(&c), fixture("ad_c"));

    // The printed ad_A has −2 at (3, 3); expanding the defining formula gives
    // 2 there, and every other entry agrees.
    let got = ad(&a);
    let printed = fixture("ad_a");
    for i in 0..6 {
        for j in 0..6 {
            if (i, j) != (3, 3) {
                assert_eq!(got[(i, j)], printed[(i, j)], "entry ({i}, {j})");
            }
        }
    }
    assert_eq!(got[(3, 3)], 2.0);
    assert_eq!(printed[(3, 3)], -2.0);
}

#[test]
fn adjoint_by_columns() {
    // column k of ad_A is V_c([A, E_k]) built directly from brackets
    let (a, _, _) = lie_triple();
    let got = ad(&a);
    for k in 0..6 {
        let e = Matrix::from_fn(2, 3, |i, j| if j * 2 + i == k { 1.0 } else { 0.0 });
        let col = vec_stack(&bracket(&a, &e, ProductKind::LEFT).unwrap(), StackMode::Column);
        assert_eq!(got.col(k), col);
    }
}

#[test]
fn printed_killing_values() {
    let (a, b, c) = lie_triple();
    let k = |x: &Matrix, y: &Matrix| killing_form(x, y, ProductKind::LEFT).unwrap();
    assert_eq!(k(&a, &b), 35.0);
    assert_eq!(k(&b, &a), 35.0);
    assert_eq!(k(&a, &c), 5.0);
    assert_eq!(k(&b, &c), -11.0);
    assert_eq!(k(&(&a + &b), &c), -6.0);
    let ad_a_b = bracket(&a, &b, ProductKind::LEFT).unwrap();
    let ad_a_c = bracket(&a, &c, ProductKind::LEFT).unwrap();
    assert_eq!(k(&ad_a_b, &c), -60.0);
    assert_eq!(k(&b, &ad_a_c), 60.0);
    assert_eq!(k(&Matrix::zeros(2, 3), &b), 0.0);
}

#[test]
fn shape_errors() {
    let (a, _, _) = lie_triple();
    let sq = Matrix::identity(2);
    assert!(matches!(bracket(&a, &sq, ProductKind::LEFT), Err(Error::DimensionMismatch { .. })));
    assert!(matches!(killing_form(&a, &sq, ProductKind::LEFT), Err(Error::DimensionMismatch { .. })));
    assert!(gamma_matrix(0, 2).is_err());
    assert!(gamma_matrix(12, 13).is_err());
}

#[test]
fn printed_gamma_small() {
    assert_eq!(gamma_matrix(1, 2).unwrap(), fixture("gamma_1x2"));
    assert_eq!(gamma_matrix(2, 3).unwrap(), fixture("gamma_2x3"));
}

#[test]
fn printed_gamma_two_by_four() {
    // Row 36 is printed as [0,0,0,0,0,0,-1,0]. It is the coefficient row of
    // ad_A entry (4, 4), which is a₁₁ + a₁₂ − a₂₃ by direct expansion.
    let got = gamma_matrix(2, 4).unwrap();
    let printed = fixture("gamma_2x4");
    assert_eq!(got.shape(), printed.shape());
    for i in (0..64).filter(|&i| i != 36) {
        assert_eq!(got.row(i), printed.row(i), "row {i}");
    }
    assert_eq!(got.row(36), &[1.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]);
    assert_eq!(printed.row(36), &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]);
}

#[test]
fn gamma_matches_adjoint() {
    for (m, n) in [(1, 3), (2, 2), (3, 2), (2, 4)] {
        let g = gamma_matrix(m, n).unwrap();
        let a = Matrix::from_fn(m, n, |i, j| (3 * i + j) as f64 - 2.5);
        let lhs = g.mul_vec(&vec_stack(&a, StackMode::Row)).unwrap();
        assert_eq!(lhs, vec_stack(&ad(&a), StackMode::Row));
    }
}

#[test]
fn center_dimensions() {
    for (m, n) in [(1, 2), (2, 3), (2, 4), (3, 4)] {
        assert_eq!(center_dim(m, n).unwrap(), 0, "{m}x{n}");
    }
    // scalar multiples of the identity commute with everything
    for n in 1..=3 {
        assert!(center_dim(n, n).unwrap() >= 1);
        let g = gamma_matrix(n, n).unwrap();
        let id = vec_stack(&Matrix::identity(n), StackMode::Row);
        assert!(g.mul_vec(&id).unwrap().iter().all(|v| *v == 0.0));
    }
    let info = rank_nullspace(&gamma_matrix(2, 2).unwrap(), DEFAULT_RANK_TOL);
    assert_eq!(info.nullity(), 1);
    let v = &info.nullspace[0];
    assert!(v[1].abs() < 1e-12 && v[2].abs() < 1e-12 && (v[0] - v[3]).abs() < 1e-12);
}

fn triple() -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| (matrix(m, n), matrix(m, n), matrix(m, n)))
}

fn scale(x: &[&Matrix]) -> f64 {
    x.iter().map(|m| m.frobenius_norm()).fold(1.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bracket_is_a_lie_bracket((a, b, c) in triple(), s in -2.0f64..2.0, kind in kind()) {
        let br = |x: &Matrix, y: &Matrix| bracket(x, y, kind).unwrap();
        let tol = 1e-10 * scale(&[&a, &b, &c]).powi(3);

        let lhs = br(&(&a.scale(s) + &b), &c);
        let rhs = &br(&a, &c).scale(s) + &br(&b, &c);
        prop_assert!(lhs.max_abs_diff(&rhs) <= tol);

        prop_assert!(br(&a, &b).max_abs_diff(&-&br(&b, &a)) <= tol);
        prop_assert!(br(&a, &a).max_abs() <= tol);

        let jacobi = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        prop_assert!(jacobi.max_abs() <= tol);
    }

    #[test]
    fn adjoint_represents_bracket((a, x, _) in triple(), kind in kind()) {
        let lhs = vec_stack(&bracket(&a, &x, kind).unwrap(), StackMode::Column);
        let rhs = ad_matrix(&a, kind).unwrap().value.mul_vec(&vec_stack(&x, StackMode::Column)).unwrap();
        let tol = 1e-10 * scale(&[&a, &x]).powi(2);
        for (p, q) in lhs.iter().zip(&rhs) {
            prop_assert!((p - q).abs() <= tol);
        }
    }

    #[test]
    fn killing_form_is_symmetric_bilinear((x, y, z) in triple(), s in -2.0f64..2.0, kind in kind()) {
        let k = |p: &Matrix, q: &Matrix| killing_form(p, q, kind).unwrap();
        let tol = 1e-10 * scale(&[&x, &y, &z]).powi(4);
        prop_assert!((k(&x, &y) - k(&y, &x)).abs() <= tol);
        let lhs = k(&(&x.scale(s) + &z), &y);
        prop_assert!((lhs - (s * k(&x, &y) + k(&z, &y))).abs() <= tol);
    }

    #[test]
    fn killing_form_is_invariant((a, b, c) in triple(), kind in kind()) {
        let ab = bracket(&a, &b, kind).unwrap();
        let ac = bracket(&a, &c, kind).unwrap();
        let l = killing_form(&ab, &c, kind).unwrap();
        let r = killing_form(&b, &ac, kind).unwrap();
        let tol = 1e-9 * scale(&[&a, &b, &c]).powi(5);
        prop_assert!((l + r).abs() <= tol, "{l} + {r}");
    }

    #[test]
    fn square_bracket_is_commutator(
        (a, b) in (1usize..=5).prop_flat_map(|n| (matrix(n, n), matrix(n, n))),
    ) {
        for kind in ALL_KINDS {
            let classical = &(&a * &b) - &(&b * &a);
            prop_assert!(close(&bracket(&a, &b, kind).unwrap(), &classical, 1e-12));
        }
        let ad = ad_matrix(&a, ProductKind::LEFT).unwrap().value;
        let tr: f64 = (0..ad.rows()).map(|i| ad[(i, i)]).sum();
        prop_assert!(close_scalar(tr, 0.0, 1e-12));
    }
}
