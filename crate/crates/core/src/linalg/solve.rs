//! Elimination-based routines: rank and nullspace, least squares, inverse,
//! determinant.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Default relative pivot tolerance for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Result of [`rank_nullspace`].
#[derive(Debug, Clone, PartialEq)]
pub struct RankInfo {
    pub rank: usize,
    /// Unit-length vectors spanning the (numerical) nullspace.
    pub nullspace: Vec<Vec<f64>>,
}

impl RankInfo {
    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }
}

/// Rank and nullspace basis by Gauss–Jordan elimination with complete pivoting.
///
/// A pivot is accepted while it exceeds `tol` times the first (largest) pivot.
pub fn rank_nullspace(m: &Matrix, tol: f64) -> RankInfo {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<f64>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    // perm[k] = original column sitting at position k
    let mut perm: Vec<usize> = (0..cols).collect();
    let largest = m.max_abs();
    let threshold = tol * largest;
    let mut rank = 0;

    if largest > 0.0 {
        while rank < rows.min(cols) {
            let (mut pr, mut pc, mut best) = (rank, rank, 0.0);
            for (i, row) in a.iter().enumerate().skip(rank) {
                for (j, v) in row.iter().enumerate().skip(rank) {
                    if v.abs() > best {
                        best = v.abs();
                        pr = i;
                        pc = j;
                    }
                }
            }
            if best <= threshold {
                break;
            }
            a.swap(rank, pr);
            if pc != rank {
                for row in a.iter_mut() {
                    row.swap(rank, pc);
                }
                perm.swap(rank, pc);
            }
            let pivot = a[rank][rank];
            for v in a[rank].iter_mut() {
                *v /= pivot;
            }
            let pivot_row = a[rank].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == rank {
                    continue;
                }
                let factor = row[rank];
                if factor != 0.0 {
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v -= factor * p;
                    }
                }
            }
            rank += 1;
        }
    }

    let nullspace = (rank..cols)
        .map(|free| {
            let mut x = vec![0.0; cols];
            x[perm[free]] = 1.0;
            for (i, row) in a.iter().enumerate().take(rank) {
                x[perm[i]] = -row[free];
            }
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
            x
        })
        .collect();

    RankInfo { rank, nullspace }
}

pub fn rank(m: &Matrix) -> usize {
    rank_nullspace(m, DEFAULT_RANK_TOL).rank
}

/// Least-squares solution of `M x ≈ b` for `M` of full column rank.
///
/// Solved with Householder QR; this is the same minimiser as the
/// normal-equation form `(MᵀM)⁻¹Mᵀb`.
pub fn lsq_solve(m: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let (rows, cols) = m.shape();
    if b.len() != rows {
        return Err(Error::DimensionMismatch {
            op: "lsq_solve",
            left: m.shape(),
            right: (b.len(), 1),
        });
    }
    let r = rank(m);
    if r < cols {
        return Err(Error::RankDeficient {
            rank: r,
            required: cols,
        });
    }

    let mut a: Vec<Vec<f64>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut rhs = b.to_vec();
    for k in 0..cols {
        let norm = (k..rows).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if a[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|i| a[i][k]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..cols {
            let dot: f64 = (k..rows).map(|i| v[i - k] * a[i][j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..rows {
                a[i][j] -= f * v[i - k];
            }
        }
        let dot: f64 = (k..rows).map(|i| v[i - k] * rhs[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in k..rows {
            rhs[i] -= f * v[i - k];
        }
    }

    let mut x = vec![0.0; cols];
    for k in (0..cols).rev() {
        let s: f64 = (k + 1..cols).map(|j| a[k][j] * x[j]).sum();
        x[k] = (rhs[k] - s) / a[k][k];
    }
    Ok(x)
}

struct Lu {
    a: Vec<Vec<f64>>,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

fn lu(m: &Matrix) -> Result<Lu> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    let mut singular = false;
    let threshold = f64::EPSILON * n as f64 * m.max_abs();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap_or(k);
        if a[p][k].abs() <= threshold {
            singular = true;
            a[k][k] = 0.0;
            continue;
        }
        if p != k {
            a.swap(p, k);
            perm.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            a[i][k] = f;
            for j in k + 1..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    Ok(Lu {
        a,
        perm,
        sign,
        singular,
    })
}

/// Determinant by LU factorisation with partial pivoting.
pub fn det(m: &Matrix) -> Result<f64> {
    let f = lu(m)?;
    Ok(f.sign * (0..m.rows()).map(|i| f.a[i][i]).product::<f64>())
}

/// Solves the square system `M x = b`.
pub fn solve(m: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let f = lu(m)?;
    if f.singular {
        return Err(Error::Singular("matrix"));
    }
    let n = m.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            op: "solve",
            left: m.shape(),
            right: (b.len(), 1),
        });
    }
    let mut y: Vec<f64> = f.perm.iter().map(|&p| b[p]).collect();
    for i in 0..n {
        for j in 0..i {
            y[i] -= f.a[i][j] * y[j];
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            y[i] -= f.a[i][j] * y[j];
        }
        y[i] /= f.a[i][i];
    }
    Ok(y)
}

/// Inverse of a square nonsingular matrix.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut inv = Matrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        let col = solve(m, &e)?;
        for (i, v) in col.into_iter().enumerate() {
            inv[(i, j)] = v;
        }
    }
    Ok(inv)
}
