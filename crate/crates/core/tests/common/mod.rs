//! Independent reference implementations and generators shared by the
//! integration tests. Everything here is built from explicit Kronecker
//! products so that it never goes through the library's streamed formulas.

#![allow(dead_code)]

use dkstp::linalg::kron;
use dkstp::{Matrix, ProductKind, Side, WeightScheme};
use proptest::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

pub const ALL_KINDS: [ProductKind; 4] = [
    ProductKind::LEFT,
    ProductKind::RIGHT,
    ProductKind {
        side: Side::Left,
        scheme: WeightScheme::Gauss,
    },
    ProductKind {
        side: Side::Right,
        scheme: WeightScheme::Gauss,
    },
];

pub const LEFT_KINDS: [ProductKind; 3] = [
    ProductKind::LEFT,
    ProductKind {
        side: Side::Left,
        scheme: WeightScheme::Gauss,
    },
    ProductKind {
        side: Side::Left,
        scheme: WeightScheme::Average,
    },
];

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn weights(scheme: WeightScheme, k: usize) -> Vec<f64> {
    if k == 1 {
        return vec![1.0];
    }
    match scheme {
        WeightScheme::Ones => vec![1.0; k],
        WeightScheme::Average => vec![1.0 / k as f64; k],
        WeightScheme::Gauss => {
            let normal = Normal::new(0.0, 1.0).unwrap();
            // distance from the centre, in steps of 0.1
            let centre = (k as f64 - 1.0) / 2.0;
            (0..k)
                .map(|i| {
                    let d = (i as f64 - centre).abs();
                    let steps = if k.is_multiple_of(2) { d + 0.5 } else { d };
                    normal.cdf(-0.1 * steps)
                })
                .collect()
        }
    }
}

fn col(v: &[f64]) -> Matrix {
    Matrix::column(v).unwrap()
}

/// Bridge matrix from its Kronecker definition.
pub fn bridge(n: usize, p: usize, kind: ProductKind) -> Matrix {
    let t = lcm(n, p);
    let wa = col(&weights(kind.scheme, t / n));
    let wb = col(&weights(kind.scheme, t / p));
    match kind.side {
        Side::Left => &kron(&Matrix::identity(n), &wa.transpose()) * &kron(&Matrix::identity(p), &wb),
        Side::Right => &kron(&wa.transpose(), &Matrix::identity(n)) * &kron(&wb, &Matrix::identity(p)),
    }
}

pub fn dk(a: &Matrix, b: &Matrix, kind: ProductKind) -> Matrix {
    &(a * &bridge(a.cols(), b.rows(), kind)) * b
}

/// Vector product from the lifted vectors.
pub fn vv(x: &[f64], y: &[f64], kind: ProductKind) -> f64 {
    let t = lcm(x.len(), y.len());
    let wx = col(&weights(kind.scheme, t / x.len()));
    let wy = col(&weights(kind.scheme, t / y.len()));
    let (lx, ly) = match kind.side {
        Side::Left => (kron(&col(x), &wx), kron(&col(y), &wy)),
        Side::Right => (kron(&wx, &col(x)), kron(&wy, &col(y))),
    };
    lx.as_slice().iter().zip(ly.as_slice()).map(|(a, b)| a * b).sum()
}

/// Product computed entry by entry from row-column vector products.
pub fn dk_entrywise(a: &Matrix, b: &Matrix, kind: ProductKind) -> Matrix {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| vv(a.row(i), &b.col(j), kind))
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &Matrix) -> f64 {
    let n = m.rows();
    if n == 1 {
        return m[(0, 0)];
    }
    (0..n)
        .map(|j| {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m[(r + 1, if c < j { c } else { c + 1 })]);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[(0, j)] * det_cofactor(&minor)
        })
        .sum()
}

/// `|a − b| ≤ tol·max|b| + 1e−12` entrywise.
pub fn close(a: &Matrix, b: &Matrix, tol: f64) -> bool {
    a.shape() == b.shape() && a.max_abs_diff(b) <= tol * b.max_abs() + 1e-12
}

pub fn close_scalar(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs() + 1e-12
}

pub fn dim() -> impl Strategy<Value = usize> {
    1usize..=6
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3.0f64..3.0, rows * cols)
        .prop_map(move |data| Matrix::new(rows, cols, data).unwrap())
}

pub fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i32..=3, rows * cols).prop_map(move |data| {
        Matrix::new(rows, cols, data.into_iter().map(f64::from).collect()).unwrap()
    })
}

pub fn any_matrix() -> impl Strategy<Value = Matrix> {
    (dim(), dim()).prop_flat_map(|(m, n)| matrix(m, n))
}

pub fn kind() -> impl Strategy<Value = ProductKind> {
    prop::sample::select(ALL_KINDS.to_vec())
}

pub fn left_kind() -> impl Strategy<Value = ProductKind> {
    prop::sample::select(LEFT_KINDS.to_vec())
}

/// A rotation-like orthogonal matrix of size `r` built from Givens rotations.
pub fn orthogonal(r: usize, angles: &[f64]) -> Matrix {
    let mut q = Matrix::identity(r);
    let mut k = 0;
    for i in 0..r {
        for j in i + 1..r {
            let theta = angles[k % angles.len()];
            k += 1;
            let mut g = Matrix::identity(r);
            g[(i, i)] = theta.cos();
            g[(j, j)] = theta.cos();
            g[(i, j)] = -theta.sin();
            g[(j, i)] = theta.sin();
            q = &q * &g;
        }
    }
    q
}

/// Loads a whitespace-separated matrix from `tests/fixtures/<name>.txt`.
pub fn fixture(name: &str) -> Matrix {
    let path = format!("{}/tests/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    Matrix::from_rows(&rows).unwrap()
}
