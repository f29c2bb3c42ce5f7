//! Dimension-keeping semi-tensor products of arbitrary real matrices, with the
//! ring, Lie algebra, group and dynamical-system structures they induce.
//!
//! ```
//! use dkstp::{dk_stp, Matrix, ProductKind};
//!
//! let a = Matrix::from_rows(&[[1.0, 2.0, -1.0, 4.0], [3.0, 1.0, 0.0, -2.0], [5.0, -2.0, 4.0, -1.0]])?;
//! let x = Matrix::from_rows(&[[2.0], [-1.0], [3.0]])?;
//! let y = dk_stp(&a, &x, ProductKind::LEFT)?;
//! assert_eq!(y.as_slice(), &[41.0, 0.0, 25.0]);
//! # Ok::<(), dkstp::Error>(())
//! ```

pub mod dynamics;
pub mod error;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod ring;
pub mod spectral;
pub mod stp;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use stp::{dk_stp, ProductKind, Side, WeightScheme};
