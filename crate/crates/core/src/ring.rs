//! Morphisms of the matrix ring under the dimension-keeping product.

use crate::error::{Error, Result};
use crate::linalg::{kron, Matrix};
use crate::stp::Side;

/// Tolerance used to accept `M` as orthogonal in [`ring_auto_psi`].
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

/// The averaging matrix `J_s = (1/s)·𝟙_{s×s}`.
pub fn averaging_matrix(s: usize) -> Result<Matrix> {
    if s == 0 {
        return Err(Error::InvalidDimension("s must be positive".into()));
    }
    Ok(Matrix::filled(s, s, 1.0 / s as f64))
}

/// `π₁(A) = J_s ⊗ A` (left) or `π₂(A) = A ⊗ J_s` (right).
pub fn ring_hom_pi(a: &Matrix, s: usize, side: Side) -> Result<Matrix> {
    let j = averaging_matrix(s)?;
    Ok(match side {
        Side::Left => kron(&j, a),
        Side::Right => kron(a, &j),
    })
}

/// Recovers `A` from `J_s ⊗ A` or `A ⊗ J_s`, rejecting inputs of another form.
fn factor_out(x: &Matrix, s: usize, side: Side) -> Result<Matrix> {
    if s == 0 || !x.rows().is_multiple_of(s) || !x.cols().is_multiple_of(s) {
        return Err(Error::InvalidDimension(format!(
            "{}x{} is not divisible into {s}x{s} blocks",
            x.rows(),
            x.cols()
        )));
    }
    let (m, n) = (x.rows() / s, x.cols() / s);
    let a = match side {
        Side::Left => x.block(0, 0, m, n).scale(s as f64),
        Side::Right => Matrix::from_fn(m, n, |i, j| x[(i * s, j * s)] * s as f64),
    };
    let rebuilt = ring_hom_pi(&a, s, side)?;
    if !rebuilt.approx_eq(x, 1e-12) {
        return Err(Error::InvalidArgument(format!(
            "matrix is not in the image of the {} embedding",
            side.name()
        )));
    }
    Ok(a)
}

/// The isomorphism `J_s ⊗ A ↦ A ⊗ J_s` between the two embedded rings.
pub fn ring_iso_phi(x: &Matrix, s: usize) -> Result<Matrix> {
    ring_hom_pi(&factor_out(x, s, Side::Left)?, s, Side::Right)
}

/// Inverse of [`ring_iso_phi`]: `A ⊗ J_s ↦ J_s ⊗ A`.
pub fn ring_iso_phi_inv(x: &Matrix, s: usize) -> Result<Matrix> {
    ring_hom_pi(&factor_out(x, s, Side::Right)?, s, Side::Left)
}

/// `ψ(A) = (M ⊗ I_a) A (Mᵀ ⊗ I_b)` for orthogonal `M` of size `r`, where `r`
/// divides both dimensions of `A` and `a = m/r`, `b = n/r`.
pub fn ring_auto_psi(a: &Matrix, m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let r = m.rows();
    if !a.rows().is_multiple_of(r) || !a.cols().is_multiple_of(r) {
        return Err(Error::InvalidDimension(format!(
            "{r} does not divide both dimensions of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let deviation = (&(&m.transpose() * m) - &Matrix::identity(r)).max_abs();
    if deviation > ORTHOGONALITY_TOL {
        return Err(Error::NotOrthogonal { deviation });
    }
    let left = kron(m, &Matrix::identity(a.rows() / r));
    let right = kron(&m.transpose(), &Matrix::identity(a.cols() / r));
    left.matmul(a)?.matmul(&right)
}
