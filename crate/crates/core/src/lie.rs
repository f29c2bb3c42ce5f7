//! The Lie algebra of `m×n` matrices under the bracket
//! `[A, B] = A ⋉̄ B − B ⋉̄ A`.

use crate::error::{Error, Result};
use crate::linalg::{kron, rank_nullspace, Matrix, DEFAULT_RANK_TOL};
use crate::stp::{bridge_matrix, dk_stp, ProductKind};

/// Largest `m·n` accepted by [`gamma_matrix`]; the matrix has `(mn)³` entries.
pub const MAX_GAMMA_DIM: usize = 144;

fn same_shape(op: &'static str, a: &Matrix, b: &Matrix) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op,
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(())
}

pub fn bracket(a: &Matrix, b: &Matrix, kind: ProductKind) -> Result<Matrix> {
    same_shape("bracket", a, b)?;
    dk_stp(a, b, kind)?.checked_sub(&dk_stp(b, a, kind)?)
}

/// Matrix of `X ↦ [A, X]` acting on column-stacked coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointMatrix {
    pub source: Matrix,
    pub value: Matrix,
}

/// `ad_A = I_n ⊗ (A K) − (K A)ᵀ ⊗ I_m` with `K = bridge(n, m)`.
///
/// For the left product `(K A)ᵀ = Aᵀ Ψ_{m×n}`.
pub fn ad_matrix(a: &Matrix, kind: ProductKind) -> Result<AdjointMatrix> {
    let (m, n) = a.shape();
    let k = bridge_matrix(n, m, kind)?;
    let left = kron(&Matrix::identity(n), &a.matmul(&k)?);
    let right = kron(&k.matmul(a)?.transpose(), &Matrix::identity(m));
    Ok(AdjointMatrix {
        source: a.clone(),
        value: left.checked_sub(&right)?,
    })
}

/// `(X, Y) = tr(ad_X ad_Y)`.
pub fn killing_form(x: &Matrix, y: &Matrix, kind: ProductKind) -> Result<f64> {
    same_shape("killing_form", x, y)?;
    let ax = ad_matrix(x, kind)?.value;
    let ay = ad_matrix(y, kind)?.value;
    // tr(PQ) = Σ_ij P_ij Q_ji
    let n = ax.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += ax[(i, j)] * ay[(j, i)];
        }
    }
    Ok(sum)
}

/// The `(mn)²×mn` matrix `Γ` with `Γ V_r(A) = V_r(ad_A)` under the left
/// product, so that the center of the algebra is its nullspace.
pub fn gamma_matrix(m: usize, n: usize) -> Result<Matrix> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimension("dimensions must be positive".into()));
    }
    let d = m * n;
    if d > MAX_GAMMA_DIM {
        return Err(Error::InvalidDimension(format!(
            "m·n = {d} exceeds {MAX_GAMMA_DIM}"
        )));
    }
    let mut gamma = Matrix::zeros(d * d, d);
    for k in 0..d {
        let unit = Matrix::from_fn(m, n, |i, j| if i * n + j == k { 1.0 } else { 0.0 });
        let ad = ad_matrix(&unit, ProductKind::LEFT)?.value;
        for (row, v) in ad.as_slice().iter().enumerate() {
            gamma[(row, k)] = *v;
        }
    }
    Ok(gamma)
}

/// Dimension of the center of the `m×n` algebra: `nullity(Γ_{m×n})`.
pub fn center_dim(m: usize, n: usize) -> Result<usize> {
    Ok(rank_nullspace(&gamma_matrix(m, n)?, DEFAULT_RANK_TOL).nullity())
}
