use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::stp::{weight_vector, ProductKind, Side};

/// Largest dimension accepted on either side of a bridge.
pub const MAX_BRIDGE_DIM: usize = 4096;

type Key = (usize, usize, ProductKind);

fn cache() -> &'static RwLock<HashMap<Key, Arc<Matrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Matrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `lcm(a, b)` for validated dimensions.
pub fn common_dim(a: usize, b: usize) -> Result<usize> {
    for d in [a, b] {
        if d == 0 || d > MAX_BRIDGE_DIM {
            return Err(Error::InvalidDimension(format!(
                "dimension {d} outside 1..={MAX_BRIDGE_DIM}"
            )));
        }
    }
    (a as u64)
        .checked_mul((b / a.gcd(&b)) as u64)
        .and_then(|t| usize::try_from(t).ok())
        .ok_or_else(|| Error::InvalidDimension(format!("lcm({a}, {b}) overflows")))
}

/// The `n×p` bridge matrix of a product kind: `Ψ` for left, `Φ` for right,
/// with the weight vectors in place of `𝟙` when weighted.
///
/// Results are cached per `(n, p, kind)`.
pub fn bridge_matrix(n: usize, p: usize, kind: ProductKind) -> Result<Arc<Matrix>> {
    let key = (n, p, kind);
    if let Some(hit) = cache().read().ok().and_then(|c| c.get(&key).cloned()) {
        return Ok(hit);
    }
    let built = Arc::new(build(n, p, kind)?);
    if let Ok(mut c) = cache().write() {
        return Ok(c.entry(key).or_insert(built).clone());
    }
    Ok(built)
}

fn build(n: usize, p: usize, kind: ProductKind) -> Result<Matrix> {
    let t = common_dim(n, p)?;
    let (a, b) = (t / n, t / p);
    let wa = weight_vector(kind.scheme, a)?;
    let wb = weight_vector(kind.scheme, b)?;
    let mut out = Matrix::zeros(n, p);
    for k in 0..t {
        match kind.side {
            Side::Left => out[(k / a, k / b)] += wa[k % a] * wb[k % b],
            Side::Right => out[(k % n, k % p)] += wa[k / n] * wb[k / p],
        }
    }
    Ok(out)
}
