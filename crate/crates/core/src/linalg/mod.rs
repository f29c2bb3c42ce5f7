//! Dense real linear algebra used by the product calculus.

mod charpoly;
mod eigen;
mod expm;
mod matrix;
mod solve;

pub use charpoly::{charpoly, CharPoly};
pub use eigen::{eigen, eigenvalues, EigenPair, EIGEN_RESIDUAL_TOL};
pub use expm::expm;
pub use matrix::{kron, unstack_columns, vec_stack, Matrix, StackMode};
pub use solve::{det, inverse, lsq_solve, rank, rank_nullspace, solve, RankInfo, DEFAULT_RANK_TOL};
