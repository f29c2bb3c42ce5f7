//! Square restrictions of non-square matrices and the spectral notions built
//! on them: generalized Cayley–Hamilton, Π-determinant, Π-inverse and
//! Π-eigenpairs.

use crate::error::{Error, Result};
use crate::linalg::{charpoly, det, eigen, inverse, CharPoly, EigenPair, Matrix};
use crate::stp::{bridge_matrix, dk_stp, ProductKind};

/// Relative threshold of the invertibility tests.
pub const INVERTIBILITY_TOL: f64 = 1e-10;

/// Largest condition estimate of the bridge product tolerated by [`pi_inverse`].
pub const MAX_BRIDGE_CONDITION: f64 = 1e12;

/// Which matrix a restriction was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `Π_A`, used when `m ≤ n`.
    Direct,
    /// `Π_{Aᵀ}`, used when `m > n`.
    Transposed,
}

/// The `r×r` matrix through which a non-square matrix acts on `R^r`.
#[derive(Debug, Clone, PartialEq)]
pub struct Restriction {
    pub source: Matrix,
    pub kind: ProductKind,
    pub value: Matrix,
    pub branch: Branch,
}

impl Restriction {
    pub fn dim(&self) -> usize {
        self.value.rows()
    }
}

/// `Π_A = A · bridge(n, m)`, the unique `m×m` matrix with `A ⋉̄ x = Π_A x`.
pub fn square_restriction(a: &Matrix, kind: ProductKind) -> Result<Restriction> {
    let bridge = bridge_matrix(a.cols(), a.rows(), kind)?;
    Ok(Restriction {
        source: a.clone(),
        kind,
        value: a.matmul(&bridge)?,
        branch: Branch::Direct,
    })
}

/// `Π_A` when `m ≤ n`, otherwise `Π_{Aᵀ}`.
pub fn pi_of(a: &Matrix, kind: ProductKind) -> Result<Restriction> {
    if a.rows() <= a.cols() {
        return square_restriction(a, kind);
    }
    let at = a.transpose();
    let bridge = bridge_matrix(at.cols(), at.rows(), kind)?;
    Ok(Restriction {
        source: a.clone(),
        kind,
        value: at.matmul(&bridge)?,
        branch: Branch::Transposed,
    })
}

/// Outcome of evaluating the generalized Cayley–Hamilton identity.
#[derive(Debug, Clone, PartialEq)]
pub struct GchReport {
    pub poly: CharPoly,
    pub branch: Branch,
    /// `‖A^{<r+1>} + p_{r−1}A^{<r>} + … + p₀A‖_F / max(1, ‖A‖_F^{r+1})`.
    pub residual: f64,
}

/// Evaluates `A^{<r+1>} + Σ_k p_k A^{<k+1>}` with `p` the characteristic
/// polynomial of `Π(A)`. For `m > n` the identity is evaluated on `Aᵀ`.
pub fn gch_check(a: &Matrix, kind: ProductKind) -> Result<GchReport> {
    let restriction = pi_of(a, kind)?;
    let poly = charpoly(&restriction.value)?;
    let base = match restriction.branch {
        Branch::Direct => a.clone(),
        Branch::Transposed => a.transpose(),
    };
    let r = poly.degree();
    let mut power = base.clone();
    let mut acc = base.scale(poly.coeff(0));
    for k in 1..=r {
        power = dk_stp(&power, &base, kind)?;
        acc += &power.scale(poly.coeff(k));
    }
    let scale = a.frobenius_norm().powi(r as i32 + 1).max(1.0);
    Ok(GchReport {
        poly,
        branch: restriction.branch,
        residual: acc.frobenius_norm() / scale,
    })
}

pub fn gch_residual(a: &Matrix, kind: ProductKind) -> Result<f64> {
    Ok(gch_check(a, kind)?.residual)
}

/// Determinant of `Π(A)`, read off the characteristic polynomial as `(−1)ʳp₀`.
pub fn pdet(a: &Matrix, kind: ProductKind) -> Result<f64> {
    let poly = charpoly(&pi_of(a, kind)?.value)?;
    let sign = if poly.degree() % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * poly.coeff(0))
}

fn threshold(m: &Matrix) -> f64 {
    INVERTIBILITY_TOL * m.frobenius_norm().powi(m.rows() as i32).max(1.0)
}

/// `|pdet(A)| > 1e−10 · max(1, ‖Π(A)‖_F^r)`.
pub fn pi_invertible(a: &Matrix, kind: ProductKind) -> Result<bool> {
    let pi = pi_of(a, kind)?.value;
    Ok(pdet(a, kind)?.abs() > threshold(&pi))
}

/// The same test applied to an ordinary square matrix.
pub fn is_invertible(m: &Matrix) -> Result<bool> {
    Ok(det(m)?.abs() > threshold(m))
}

fn pi_inverse_wide(a: &Matrix, kind: ProductKind) -> Result<Matrix> {
    let (m, n) = a.shape();
    let pi = square_restriction(a, kind)?.value;
    let poly = charpoly(&pi)?;
    let p0 = poly.coeff(0);
    if p0.abs() <= threshold(&pi) {
        return Err(Error::Singular("square restriction"));
    }

    // stand-in for the zeroth power: Π_E = I
    let k_mn = bridge_matrix(m, n, kind)?;
    let k_nm = bridge_matrix(n, m, kind)?;
    let gram = k_mn.matmul(&k_nm)?;
    let gram_inv = inverse(&gram).map_err(|_| Error::BridgeDegenerate {
        condition: f64::INFINITY,
    })?;
    let condition = gram.norm_1() * gram_inv.norm_1();
    if !(condition <= MAX_BRIDGE_CONDITION) {
        return Err(Error::BridgeDegenerate { condition });
    }
    let e = gram_inv.matmul(&k_mn)?;

    // −(1/p₀)(p₁E + Σ_{k≥2} p_k Π^{k−2}A), reduced through p(Π) = 0 and
    // p₁/p₀ = −tr(Π⁻¹) to Π⁻²A − tr(Π⁻¹)(Π⁻¹A − E)
    let pi_inv = inverse(&pi)?;
    let y = pi_inv.matmul(a)?;
    let correction = (&y - &e).scale(pi_inv.trace());
    let b = &pi_inv.matmul(&y)? - &correction;

    // one refinement step against B·Ψ_{n×m} = Π⁻¹; E·Ψ_{n×m} = I, so the
    // update only removes the rounding left by the E term
    let r = &b.matmul(&k_nm)? - &pi_inv;
    Ok(&b - &r.matmul(&e)?)
}

/// Π-inverse of an `m×n` matrix.
///
/// For `m ≤ n` the result `B` satisfies `B ⋉̄ A ⋉̄ I_m = I_m`; for `m > n` it
/// satisfies `I_n ⋉̄ A ⋉̄ B = I_n`. The result has the shape of `A`.
pub fn pi_inverse(a: &Matrix, kind: ProductKind) -> Result<Matrix> {
    if a.rows() <= a.cols() {
        pi_inverse_wide(a, kind)
    } else {
        Ok(pi_inverse_wide(&a.transpose(), kind)?.transpose())
    }
}

/// Eigenpairs of `Π(A)`.
pub fn pi_eigen(a: &Matrix, kind: ProductKind) -> Result<Vec<EigenPair>> {
    eigen(&pi_of(a, kind)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_a() -> Matrix {
        Matrix::from_rows(&[
            [1.0, 2.0, -1.0, 3.0],
            [2.0, 3.0, -2.0, 0.0],
            [3.0, 1.0, 0.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn branches() {
        assert_eq!(pi_of(&Matrix::zeros(3, 4), ProductKind::LEFT).unwrap().branch, Branch::Direct);
        let tall = pi_of(&Matrix::zeros(4, 3), ProductKind::LEFT).unwrap();
        assert_eq!(tall.branch, Branch::Transposed);
        assert_eq!(tall.dim(), 3);
        let sq = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert_eq!(pi_of(&sq, ProductKind::RIGHT).unwrap().value, sq);
    }

    #[test]
    fn scalar_inverse() {
        let b = pi_inverse(&Matrix::from_rows(&[[2.0]]).unwrap(), ProductKind::LEFT).unwrap();
        assert!((b[(0, 0)] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn square_inverse_is_classical() {
        let a = Matrix::from_rows(&[[4.0, 1.0], [2.0, 3.0]]).unwrap();
        let b = pi_inverse(&a, ProductKind::LEFT).unwrap();
        assert!((&a * &b).approx_eq(&Matrix::identity(2), 1e-12));
    }

    #[test]
    fn pi_singular_witness() {
        let a = Matrix::from_rows(&[[1.0, -2.0, 1.0], [1.0, 0.0, 0.0]]).unwrap();
        assert!(pdet(&a, ProductKind::LEFT).unwrap().abs() < 1e-12);
        assert!(!pi_invertible(&a, ProductKind::LEFT).unwrap());
        assert_eq!(
            pi_inverse(&a, ProductKind::LEFT),
            Err(Error::Singular("square restriction"))
        );
    }

    #[test]
    fn gch_on_wide_matrix() {
        let report = gch_check(&ex_a(), ProductKind::LEFT).unwrap();
        assert!(report.residual < 1e-10);
        let report = gch_check(&ex_a().transpose(), ProductKind::RIGHT).unwrap();
        assert_eq!(report.branch, Branch::Transposed);
        assert!(report.residual < 1e-10);
    }
}
