//! The dimension-free vector space and linear systems driven by the
//! dimension-keeping product.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{expm, solve, Matrix};
use crate::spectral::{is_invertible, square_restriction};
use crate::stp::{common_dim, dk_stp, vv_stp, ProductKind};

/// Default tolerance of [`equivalent`].
pub const DEFAULT_EQUIV_TOL: f64 = 1e-9;

/// Cap on the number of series terms in [`ct_trajectory`].
pub const MAX_SERIES_TERMS: usize = 10_000;

/// A vector tagged with its own dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DimVector {
    entries: Vec<f64>,
}

impl DimVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimension("vector must have dimension ≥ 1".into()));
        }
        if let Some(index) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "vector must have dimension ≥ 1");
        Self {
            entries: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.entries
    }

    pub fn to_column(&self) -> Matrix {
        Matrix::from_fn(self.dim(), 1, |i, _| self.entries[i])
    }

    /// `x ⊗ 𝟙_k`.
    pub fn lift(&self, k: usize) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|&v| std::iter::repeat_n(v, k))
            .collect()
    }

    pub fn norm(&self) -> f64 {
        norm(self)
    }
}

impl TryFrom<&Matrix> for DimVector {
    type Error = Error;

    fn try_from(m: &Matrix) -> Result<Self> {
        if m.cols() != 1 {
            return Err(Error::DimensionMismatch {
                op: "column vector",
                left: m.shape(),
                right: (m.rows(), 1),
            });
        }
        DimVector::new(m.as_slice().to_vec())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `x ⊕ y` or `x ⊖ y`, both lifted to dimension `lcm(m, n)`.
pub fn vec_add(x: &DimVector, y: &DimVector, sign: Sign) -> Result<DimVector> {
    let t = common_dim(x.dim(), y.dim())?;
    let s = match sign {
        Sign::Plus => 1.0,
        Sign::Minus => -1.0,
    };
    let entries = x
        .lift(t / x.dim())
        .into_iter()
        .zip(y.lift(t / y.dim()))
        .map(|(a, b)| a + s * b)
        .collect();
    DimVector::new(entries)
}

/// `⟨x, y⟩ = vv(x, y) / lcm(m, n)`.
pub fn inner(x: &DimVector, y: &DimVector) -> Result<f64> {
    let t = common_dim(x.dim(), y.dim())?;
    Ok(vv_stp(x.as_slice(), y.as_slice(), ProductKind::LEFT)? / t as f64)
}

/// `‖x‖ = sqrt(⟨x, x⟩)`, the root mean square of the entries.
pub fn norm(x: &DimVector) -> f64 {
    (x.entries.iter().map(|v| v * v).sum::<f64>() / x.dim() as f64).sqrt()
}

pub fn distance(x: &DimVector, y: &DimVector) -> Result<f64> {
    Ok(norm(&vec_add(x, y, Sign::Minus)?))
}

/// Whether `x ⊖ y` vanishes to within `tol`.
pub fn equivalent(x: &DimVector, y: &DimVector, tol: f64) -> Result<bool> {
    Ok(distance(x, y)? <= tol)
}

/// `sqrt((1/m) Σ_j ‖Row_j(A)‖²)` with the dimension-free norm on each row.
pub fn dk_norm_formula(a: &Matrix) -> f64 {
    let rows = a.rows() as f64;
    let cols = a.cols() as f64;
    let total: f64 = a.as_slice().iter().map(|v| v * v).sum();
    (total / cols / rows).sqrt()
}

/// `‖A ⋉̄ x‖ / ‖x‖` maximised over random `x` whose dimensions cycle through
/// `dims`. Deterministic for a fixed seed.
pub fn dk_norm_empirical(a: &Matrix, dims: &[usize], samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidArgument("dims must be non-empty and positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: f64 = 0.0;
    for s in 0..samples {
        let d = dims[s % dims.len()];
        let x: Vec<f64> = (0..d).map(|_| rng.random_range(-1.0..=1.0)).collect();
        let x = DimVector::new(x)?;
        let nx = norm(&x);
        if nx == 0.0 {
            continue;
        }
        let y = DimVector::try_from(&dk_stp(a, &x.to_column(), ProductKind::LEFT)?)?;
        best = best.max(norm(&y) / nx);
    }
    Ok(best)
}

/// Whether the classical matrix-vector system `x ↦ A ⊢⋉ x` with `A` of shape
/// `m×n` keeps dimensions bounded, i.e. `m | n`.
pub fn bounded_operator(m: usize, n: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimension("dimensions must be positive".into()));
    }
    Ok(n.is_multiple_of(m))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub time: f64,
    pub state: DimVector,
}

/// States sampled at strictly increasing times.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
}

impl Trajectory {
    pub fn last(&self) -> &DimVector {
        &self.samples[self.samples.len() - 1].state
    }
}

/// `x(k+1) = A ⋉̄ x(k)` for `steps` steps; the time stamp is the step index.
pub fn dt_trajectory(
    a: &Matrix,
    x0: &DimVector,
    steps: usize,
    kind: ProductKind,
) -> Result<Trajectory> {
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(Sample {
        time: 0.0,
        state: x0.clone(),
    });
    let mut x = x0.to_column();
    for k in 1..=steps {
        x = dk_stp(a, &x, kind)?;
        samples.push(Sample {
            time: k as f64,
            state: DimVector::try_from(&x)?,
        });
    }
    Ok(Trajectory { samples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtMethod {
    /// Truncated power series.
    Series,
    /// Matrix exponential of the square restriction; needs it invertible.
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CtSolution {
    pub state: DimVector,
    /// The method actually used, after any fallback.
    pub method: CtMethod,
    /// Number of series terms summed; 0 for the closed form.
    pub terms: usize,
}

/// Solution at time `t` of `ẋ = A ⋉̄ x`:
/// `x(t) = x0 ⊕ Σ_{i≥1} (tⁱ/i!) A^{<i>} ⋉̄ x0`.
///
/// The closed form falls back to the series when the square restriction of
/// `A` is singular.
pub fn ct_trajectory(
    a: &Matrix,
    x0: &DimVector,
    t: f64,
    tol: f64,
    kind: ProductKind,
    method: CtMethod,
) -> Result<CtSolution> {
    if !(tol > 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument("need tol > 0 and finite t".into()));
    }
    if t == 0.0 {
        return Ok(CtSolution {
            state: x0.clone(),
            method,
            terms: 0,
        });
    }
    let pi = square_restriction(a, kind)?.value;
    let x1 = dk_stp(a, &x0.to_column(), kind)?.into_vec();

    if method == CtMethod::ClosedForm && is_invertible(&pi)? {
        // Σ_{i≥1} tⁱ/i! Πⁱ⁻¹x₁ = (exp(Πt) − I)ξ with Πξ = x₁
        let xi = solve(&pi, &x1)?;
        let e = expm(&pi.scale(t))?.mul_vec(&xi)?;
        let s: Vec<f64> = e.iter().zip(&xi).map(|(a, b)| a - b).collect();
        let state = vec_add(x0, &DimVector::new(s)?, Sign::Plus)?;
        return Ok(CtSolution {
            state,
            method,
            terms: 0,
        });
    }

    let hump = pi.frobenius_norm() * t.abs();
    let mut term: Vec<f64> = x1.iter().map(|v| v * t).collect();
    let mut sum = term.clone();
    let mut i = 1usize;
    loop {
        let tn = (term.iter().map(|v| v * v).sum::<f64>() / term.len() as f64).sqrt();
        if !tn.is_finite() {
            return Err(Error::Convergence {
                what: "exponential series",
                iterations: i,
            });
        }
        if tn < tol && i as f64 > hump {
            break;
        }
        if i >= MAX_SERIES_TERMS {
            return Err(Error::Convergence {
                what: "exponential series",
                iterations: i,
            });
        }
        let f = t / (i + 1) as f64;
        term = pi.mul_vec(&term)?.into_iter().map(|v| v * f).collect();
        for (s, v) in sum.iter_mut().zip(&term) {
            *s += v;
        }
        i += 1;
    }
    Ok(CtSolution {
        state: vec_add(x0, &DimVector::new(sum)?, Sign::Plus)?,
        method: CtMethod::Series,
        terms: i,
    })
}
