//! Dimension-keeping semi-tensor products and their bridge matrices.

mod bridge;
mod kind;
mod product;
mod weights;

pub use bridge::{bridge_matrix, common_dim, MAX_BRIDGE_DIM};
pub use kind::{ProductKind, Side};
pub use product::{dk_power, dk_stp, mm_stp_classic, mv_stp_classic, vv_stp};
pub use weights::{weight_vector, WeightScheme};
