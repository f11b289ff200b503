//! Free modules of finite rank over `Q`, `Z` and `Z/p`.
//!
//! Tensor products are Kronecker products with the first factor most
//! significant. A pair of factors of dimension `d` is flattened row-major,
//! so `e_i ⊗ e_j` has index `i·d + j`.

mod duality;
pub mod linalg;
mod matrix;
mod ring;

pub use duality::{canonical_duality, dimension_scalar, symmetry, DualityData, Letter, WordEvaluator};
pub use matrix::ExactMatrix;
pub use ring::{format_scalar, parse_rational, Ring, Scalar};
