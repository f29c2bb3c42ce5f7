use std::fmt;
use std::str::FromStr;

use statrs::function::erf::erf;

use crate::error::{Error, Result};

/// Rule assigning a positive weight vector `W_k` to every length `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightScheme {
    /// `W_k = 𝟙_k`; the unweighted products.
    Ones,
    /// `W_k = 𝟙_k / k`.
    Average,
    /// Symmetric standard-normal CDF values at `-0.1, -0.2, ...` around the centre.
    Gauss,
}

impl WeightScheme {
    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::Ones => "ones",
            WeightScheme::Average => "average",
            WeightScheme::Gauss => "gauss",
        }
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(WeightScheme::Ones),
            "average" => Ok(WeightScheme::Average),
            "gauss" => Ok(WeightScheme::Gauss),
            other => Err(Error::InvalidArgument(format!(
                "unknown weight scheme `{other}`"
            ))),
        }
    }
}

fn normal_cdf(u: f64) -> f64 {
    0.5 * (1.0 + erf(u / std::f64::consts::SQRT_2))
}

/// The weight vector `W_k` of a scheme. `W_1 = (1)` for every scheme.
pub fn weight_vector(scheme: WeightScheme, k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidDimension("weight length must be positive".into()));
    }
    if k == 1 {
        return Ok(vec![1.0]);
    }
    Ok(match scheme {
        WeightScheme::Ones => vec![1.0; k],
        WeightScheme::Average => vec![1.0 / k as f64; k],
        WeightScheme::Gauss => {
            let half = k / 2;
            let side = |j: usize| normal_cdf(-0.1 * j as f64);
            let mut w: Vec<f64> = (1..=half).rev().map(side).collect();
            if k % 2 == 1 {
                w.push(normal_cdf(0.0));
            }
            w.extend((1..=half).map(side));
            w
        }
    })
}
