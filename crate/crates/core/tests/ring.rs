mod common;

use common::{bridge, close, dk, left_kind, matrix, orthogonal, ALL_KINDS};
use dkstp::linalg::kron;
use dkstp::ring::{averaging_matrix, ring_auto_psi, ring_hom_pi, ring_iso_phi, ring_iso_phi_inv};
use dkstp::{dk_stp, Error, Matrix, ProductKind, Side};
use proptest::prelude::*;

#[test]
fn averaging_matrix_is_idempotent() {
    for s in 1..=5 {
        let j = averaging_matrix(s).unwrap();
        assert!(close(&(&j * &j), &j, 1e-15));
    }
    assert!(averaging_matrix(0).is_err());
}

#[test]
fn scalar_embedding_is_multiplicative() {
    let (a, b) = (Matrix::from_rows(&[[3.0]]).unwrap(), Matrix::from_rows(&[[-2.0]]).unwrap());
    let pa = ring_hom_pi(&a, 2, Side::Left).unwrap();
    let pb = ring_hom_pi(&b, 2, Side::Left).unwrap();
    let prod = dk_stp(&pa, &pb, ProductKind::LEFT).unwrap();
    assert!(close(&prod, &averaging_matrix(2).unwrap().scale(-6.0), 1e-15));
}

#[test]
fn identity_rotation_is_trivial() {
    let a = Matrix::from_fn(4, 6, |i, j| (i * 6 + j) as f64 - 7.0);
    for r in [1, 2] {
        assert_eq!(ring_auto_psi(&a, &Matrix::identity(r)).unwrap(), a);
    }
}

#[test]
fn automorphism_errors() {
    let a = Matrix::zeros(4, 6);
    let skew = Matrix::from_rows(&[[1.0, 0.1], [0.0, 1.0]]).unwrap();
    assert!(matches!(ring_auto_psi(&a, &skew), Err(Error::NotOrthogonal { .. })));
    assert!(matches!(
        ring_auto_psi(&a, &Matrix::identity(4)),
        Err(Error::InvalidDimension(_))
    ));
    assert!(matches!(
        ring_auto_psi(&a, &Matrix::zeros(2, 3)),
        Err(Error::NotSquare { .. })
    ));
}

#[test]
fn isomorphism_rejects_foreign_matrices() {
    let x = Matrix::from_fn(4, 4, |i, j| (i + 2 * j) as f64);
    assert!(ring_iso_phi(&x, 2).is_err());
    assert!(ring_iso_phi_inv(&x, 2).is_err());
    assert!(ring_iso_phi(&Matrix::zeros(3, 4), 2).is_err());
}

fn side_kinds(side: Side) -> Vec<ProductKind> {
    ALL_KINDS.iter().copied().filter(|k| k.side == side).collect()
}

/// `(A, B)` with `A` m×n and `B` p×q, all in 1..=4, plus `s` in 1..=3.
fn embedding_case() -> impl Strategy<Value = (Matrix, Matrix, usize)> {
    (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4, 1usize..=3)
        .prop_flat_map(|(m, n, p, q, s)| (matrix(m, n), matrix(p, q), Just(s)))
}

/// `(A, B, M)` where the rotation size `r` divides every dimension.
fn rotation_case() -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (1usize..=3, 1usize..=2, 1usize..=2, 1usize..=2, 1usize..=2)
        .prop_flat_map(|(r, m, n, p, q)| {
            (
                matrix(r * m, r * n),
                matrix(r * p, r * q),
                prop::collection::vec(-3.2f64..3.2, 3),
                Just(r),
            )
        })
        .prop_map(|(a, b, angles, r)| (a, b, orthogonal(r, &angles)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn embeddings_are_ring_homomorphisms((a, b, s) in embedding_case(), c in 0usize..2) {
        let side = if c == 0 { Side::Left } else { Side::Right };
        for kind in side_kinds(side) {
            let lhs = ring_hom_pi(&dk_stp(&a, &b, kind).unwrap(), s, side).unwrap();
            let rhs = dk(&ring_hom_pi(&a, s, side).unwrap(), &ring_hom_pi(&b, s, side).unwrap(), kind);
            prop_assert!(close(&lhs, &rhs, 1e-10));
        }
        let b2 = Matrix::from_fn(a.rows(), a.cols(), |i, j| b[(i % b.rows(), j % b.cols())]);
        let sum = ring_hom_pi(&(&a + &b2), s, side).unwrap();
        let parts = &ring_hom_pi(&a, s, side).unwrap() + &ring_hom_pi(&b2, s, side).unwrap();
        prop_assert!(close(&sum, &parts, 1e-12));
    }

    #[test]
    fn isomorphism_between_embedded_rings((a, _b, s) in embedding_case()) {
        let left = kron(&averaging_matrix(s).unwrap(), &a);
        let right = kron(&a, &averaging_matrix(s).unwrap());
        let forward = ring_iso_phi(&left, s).unwrap();
        prop_assert!(close(&forward, &right, 1e-12));
        let back = ring_iso_phi_inv(&forward, s).unwrap();
        prop_assert!(close(&back, &left, 1e-12));

    }

    #[test]
    fn rotation_preserves_bridge((a, _b, m) in rotation_case(), kind in left_kind()) {
        let r = m.rows();
        let (rows, cols) = a.shape();
        let lhs = &(&kron(&m.transpose(), &Matrix::identity(cols / r)) * &bridge(cols, rows, kind))
            * &kron(&m, &Matrix::identity(rows / r));
        prop_assert!(close(&lhs, &bridge(cols, rows, kind), 1e-11));
    }

    #[test]
    fn rotation_is_ring_automorphism((a, b, m) in rotation_case(), kind in left_kind()) {
        let lhs = ring_auto_psi(&dk_stp(&a, &b, kind).unwrap(), &m).unwrap();
        let rhs = dk(&ring_auto_psi(&a, &m).unwrap(), &ring_auto_psi(&b, &m).unwrap(), kind);
        prop_assert!(close(&lhs, &rhs, 1e-10));
        let sum = ring_auto_psi(&(&a + &a.scale(2.0)), &m).unwrap();
        prop_assert!(close(&sum, &ring_auto_psi(&a, &m).unwrap().scale(3.0), 1e-12));
    }
}
