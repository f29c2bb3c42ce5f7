use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Monic characteristic polynomial `x^r + p_{r-1} x^{r-1} + ... + p_0`.
///
/// Only the non-leading coefficients `[p_0, ..., p_{r-1}]` are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// Wraps explicit non-leading coefficients `[p_0, ..., p_{r-1}]`.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients `[p_0, ..., p_{r-1}]`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; the leading coefficient (`k == r`) is 1.
    pub fn coeff(&self, k: usize) -> f64 {
        match k.cmp(&self.degree()) {
            std::cmp::Ordering::Less => self.coeffs[k],
            std::cmp::Ordering::Equal => 1.0,
            std::cmp::Ordering::Greater => 0.0,
        }
    }

    /// Full coefficient list `[p_0, ..., p_{r-1}, 1]`.
    pub fn monic_coeffs(&self) -> Vec<f64> {
        let mut c = self.coeffs.clone();
        c.push(1.0);
        c
    }

    /// `p(x)` at a real point.
    pub fn eval(&self, x: f64) -> f64 {
        self.monic_coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `p(M)` by Horner's rule with matrix products.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = Matrix::identity(n);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        Ok(acc)
    }
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier recurrence.
pub fn charpoly(m: &Matrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![0.0; n];
    let mut mk = Matrix::zeros(n, n);
    let mut c_prev = 1.0;
    for k in 1..=n {
        mk = &(m * &mk) + &Matrix::identity(n).scale(c_prev);
        let c = -(m * &mk).trace() / k as f64;
        coeffs[n - k] = c;
        c_prev = c;
    }
    Ok(CharPoly { coeffs })
}
