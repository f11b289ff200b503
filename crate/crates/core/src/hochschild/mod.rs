//! Hochschild and negative cyclic homology of finite-dimensional algebras.
//!
//! Algebras are given by structure constants on a basis. The cyclic bar
//! complex `C_p = A^{⊗(p+1)}` is assembled as sparse exact matrices.

mod algebra;
mod homology;
mod negative_cyclic;
pub mod operators;

pub use algebra::{validate_algebra, AlgebraSC};
pub use homology::{describe, euler_audit, format_functional, hh_ranks, trace_hh0, HomologyGroup, TraceFunctional};
pub use negative_cyclic::{hc_minus_truncated, lift_unit_and_trace, reliable_min_degree, LiftedClass};
pub use operators::ChainVector;
