use crate::error::{Error, Result};
use crate::linalg::{kron, Matrix};
use crate::stp::{bridge_matrix, common_dim, weight_vector, ProductKind, Side};

/// Vector-vector product: the inner product of the two vectors after both are
/// lifted to dimension `lcm(m, n)`.
pub fn vv_stp(x: &[f64], y: &[f64], kind: ProductKind) -> Result<f64> {
    let (m, n) = (x.len(), y.len());
    let t = common_dim(m, n)?;
    let (a, b) = (t / m, t / n);
    let wa = weight_vector(kind.scheme, a)?;
    let wb = weight_vector(kind.scheme, b)?;
    let sum = match kind.side {
        Side::Left => (0..t)
            .map(|k| x[k / a] * wa[k % a] * y[k / b] * wb[k % b])
            .sum(),
        Side::Right => (0..t)
            .map(|k| x[k % m] * wa[k / m] * y[k % n] * wb[k / n])
            .sum(),
    };
    Ok(sum)
}

/// Dimension-keeping product of an `m×n` and a `p×q` matrix: the `m×q`
/// matrix `A · bridge(n, p) · B`.
pub fn dk_stp(a: &Matrix, b: &Matrix, kind: ProductKind) -> Result<Matrix> {
    let bridge = bridge_matrix(a.cols(), b.rows(), kind)?;
    a.matmul(&bridge)?.matmul(b)
}

/// The `k`-fold product `A ⋉̄ A ⋉̄ ⋯ ⋉̄ A`.
pub fn dk_power(a: &Matrix, k: usize, kind: ProductKind) -> Result<Matrix> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "power must be at least 1; the product has no identity matrix".into(),
        ));
    }
    let restriction = a.matmul(&*bridge_matrix(a.cols(), a.rows(), kind)?)?;
    let mut out = a.clone();
    for _ in 1..k {
        out = restriction.matmul(&out)?;
    }
    Ok(out)
}

/// Classical first-type semi-tensor product `(A ⊗ I_{t/n})(B ⊗ I_{t/p})`.
pub fn mm_stp_classic(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let t = common_dim(a.cols(), b.rows())?;
    let left = kron(a, &Matrix::identity(t / a.cols()));
    let right = kron(b, &Matrix::identity(t / b.rows()));
    left.matmul(&right)
}

/// Classical matrix-vector product `(A ⊗ I_{t/n})(x ⊗ 𝟙_{t/p})`.
pub fn mv_stp_classic(a: &Matrix, x: &[f64]) -> Result<Vec<f64>> {
    let t = common_dim(a.cols(), x.len())?;
    let lifted: Vec<f64> = (0..t).map(|k| x[k / (t / x.len())]).collect();
    kron(a, &Matrix::identity(t / a.cols())).mul_vec(&lifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vv_examples() {
        assert_eq!(vv_stp(&[1.0, 2.0], &[1.0, 1.0, 1.0], ProductKind::LEFT).unwrap(), 9.0);
        assert_eq!(vv_stp(&[1.0, 2.0], &[3.0, 4.0], ProductKind::LEFT).unwrap(), 11.0);
        assert_eq!(vv_stp(&[1.0, 2.0], &[1.0, 0.0, 0.0], ProductKind::RIGHT).unwrap(), 3.0);
    }

    #[test]
    fn power_of_wide_matrix() {
        let a = Matrix::from_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]).unwrap();
        assert_eq!(dk_power(&a, 1, ProductKind::LEFT).unwrap(), a);
        let expected = Matrix::from_rows(&[[2.0, 2.0, 2.0], [1.0, 1.0, 1.0]]).unwrap();
        assert_eq!(dk_power(&a, 2, ProductKind::LEFT).unwrap(), expected);
        assert!(dk_power(&a, 0, ProductKind::LEFT).is_err());
    }

    #[test]
    fn classic_products() {
        let a = Matrix::row_vector(&[1.0, 2.0]).unwrap();
        let b = Matrix::column(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(mm_stp_classic(&a, &b).unwrap(), Matrix::column(&[7.0, 10.0]).unwrap());
        assert_eq!(mv_stp_classic(&a, &[1.0, 2.0, 3.0]).unwrap(), vec![5.0, 7.0, 8.0]);
        assert_eq!(
            mv_stp_classic(&Matrix::identity(2), &[1.0, 2.0]).unwrap(),
            vec![1.0, 2.0]
        );
    }
}
