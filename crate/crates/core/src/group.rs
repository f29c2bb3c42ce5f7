//! The group of invertible elements `I_{m×n} + A`, kept in affine coordinates:
//! an element is stored as its coordinate `A`, the identity is `0`, and the
//! product is `A ∘ B = A + B + A ⋉̄ B`.

use crate::error::{Error, Result};
use crate::linalg::{kron, lsq_solve, unstack_columns, vec_stack, Matrix, StackMode};
use crate::lie::ad_matrix;
use crate::spectral::square_restriction;
use crate::stp::{bridge_matrix, dk_stp, ProductKind};

/// Default acceptance tolerance of [`group_inverse`], relative to `max(1, ‖A‖_F)`.
pub const DEFAULT_GROUP_TOL: f64 = 1e-9;

/// Cap on the number of series terms in [`e0_map`].
pub const MAX_SERIES_TERMS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub coord: Matrix,
}

impl GroupElement {
    pub fn new(coord: Matrix) -> Self {
        Self { coord }
    }

    pub fn identity(m: usize, n: usize) -> Self {
        Self {
            coord: Matrix::zeros(m, n),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.coord.shape()
    }
}

pub fn group_mul(a: &GroupElement, b: &GroupElement, kind: ProductKind) -> Result<GroupElement> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "group_mul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let prod = dk_stp(&a.coord, &b.coord, kind)?;
    Ok(GroupElement {
        coord: &(&a.coord + &b.coord) + &prod,
    })
}

/// `[I_n ⊗ (A K) + I_{mn}; ad_A]`, the system whose solution is `V_c(A⁻¹)`.
pub fn e_matrix(a: &Matrix, kind: ProductKind) -> Result<Matrix> {
    let (m, n) = a.shape();
    let d = m * n;
    let k = bridge_matrix(n, m, kind)?;
    let top = &kron(&Matrix::identity(n), &a.matmul(&k)?) + &Matrix::identity(d);
    let bottom = ad_matrix(a, kind)?.value;
    Ok(Matrix::from_fn(2 * d, d, |i, j| {
        if i < d {
            top[(i, j)]
        } else {
            bottom[(i - d, j)]
        }
    }))
}

/// Inverse of a group element, or [`Error::NotInvertible`] when the element
/// lies outside the group.
///
/// Solves `E(A) x = [−V_c(A); 0]` in the least-squares sense and accepts the
/// solution only if the residual and both products `a ∘ a⁻¹`, `a⁻¹ ∘ a` are
/// within `tol · max(1, ‖A‖_F)`.
pub fn group_inverse(a: &GroupElement, tol: f64, kind: ProductKind) -> Result<GroupElement> {
    let (m, n) = a.shape();
    let d = m * n;
    let e = e_matrix(&a.coord, kind)?;
    let mut rhs = vec![0.0; 2 * d];
    for (r, v) in rhs.iter_mut().zip(vec_stack(&a.coord, StackMode::Column)) {
        *r = -v;
    }
    let x = match lsq_solve(&e, &rhs) {
        Ok(x) => x,
        Err(Error::RankDeficient { .. }) => {
            return Err(Error::NotInvertible {
                residual: f64::INFINITY,
            })
        }
        Err(other) => return Err(other),
    };
    let bound = tol * a.coord.frobenius_norm().max(1.0);
    let ex = e.mul_vec(&x)?;
    let residual = ex
        .iter()
        .zip(&rhs)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        .sqrt();
    if !(residual <= bound) {
        return Err(Error::NotInvertible { residual });
    }
    let inv = GroupElement {
        coord: unstack_columns(&x, m, n)?,
    };
    for prod in [group_mul(a, &inv, kind)?, group_mul(&inv, a, kind)?] {
        let residual = prod.coord.frobenius_norm();
        if !(residual <= bound) {
            return Err(Error::NotInvertible { residual });
        }
    }
    Ok(inv)
}

/// `E₀(A) = Σ_{i≥1} A^{<i>}/i!` by plain summation.
///
/// Terms are added until one has Frobenius norm below `tol` after the series
/// has passed its growth hump (`i > ‖Π_A‖_F`).
pub fn e0_map(a: &Matrix, tol: f64, kind: ProductKind) -> Result<GroupElement> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let pi = square_restriction(a, kind)?.value;
    let hump = pi.frobenius_norm();
    let mut term = a.clone();
    let mut sum = a.clone();
    let mut i = 1usize;
    loop {
        let tn = term.frobenius_norm();
        if !tn.is_finite() || i >= MAX_SERIES_TERMS {
            return Err(Error::Convergence {
                what: "group exponential series",
                iterations: i,
            });
        }
        if tn < tol && i as f64 > hump {
            break;
        }
        term = pi.matmul(&term)?.scale(1.0 / (i + 1) as f64);
        sum += &term;
        i += 1;
    }
    Ok(GroupElement { coord: sum })
}

/// `Exp(A) = I_{m×n} + E₀(A)`, checked to be invertible.
pub fn exp_map(a: &Matrix, tol: f64, kind: ProductKind) -> Result<GroupElement> {
    let g = e0_map(a, tol, kind)?;
    group_inverse(&g, DEFAULT_GROUP_TOL, kind)?;
    Ok(g)
}

/// `φ(I + A) = I_m + Π_A`, the image in the classical group.
pub fn phi_hom(a: &GroupElement, kind: ProductKind) -> Result<Matrix> {
    let pi = phi_algebra(&a.coord, kind)?;
    Ok(&Matrix::identity(pi.rows()) + &pi)
}

/// `φ(A) = Π_A`, the image in the classical Lie algebra.
pub fn phi_algebra(a: &Matrix, kind: ProductKind) -> Result<Matrix> {
    Ok(square_restriction(a, kind)?.value)
}
