//! Exact combinatorics for factorization homology over the circle.
//!
//! The crate realizes a handful of small combinatorial categories as
//! executable finite structures and uses them to compute, exactly, the
//! quantities they control:
//!
//! - [`ordsets`]: finite linear orders, monotone maps, joins and the marked
//!   variants (minimum and/or maximum preserved).
//! - [`paracyclic`]: the skeletal paracyclic category, whose morphisms are
//!   `Z`-equivariant monotone self-maps of the integers, with its hom
//!   `Z`-action and combinatorial Poincaré duality.
//! - [`circle`]: finite point configurations on the circle, the elementary
//!   moves between them and their identification with the paracyclic category.
//! - [`adjunction`]: the walking adjunction as a strict 2-category.
//! - [`matcat`]: exact matrices over `Q`, `Z` and `Z/p`, duality data,
//!   symmetries and word evaluation.
//! - [`trace`]: traces of labeled circles and their invariance under moves.
//! - [`hochschild`]: the cyclic bar complex, Hochschild homology and a
//!   truncated negative cyclic homology.
//! - [`laxfact`]: labeled refinements of the circle valued in the walking
//!   adjunction, their decomposition and reflections.
//! - [`cli`] and [`suite`]: the command-line surface and the acceptance checks
//!   it runs.
//!
//! Everything is exact: there is no floating point anywhere in the crate.

pub mod adjunction;
pub mod circle;
pub mod cli;
pub mod hochschild;
pub mod laxfact;
pub mod matcat;
pub mod ordsets;
pub mod paracyclic;
pub mod suite;
pub mod trace;

use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two morphisms (or cells, or matrices) were not composable.
    #[error("composition mismatch: {0}")]
    Mismatch(String),
    /// A value violated the invariant of its type.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
    /// An index was outside its admissible range.
    #[error("index out of range: {0}")]
    OutOfRange(String),
    /// An algebra failed associativity or unitality.
    #[error("algebra axiom `{law}` fails at basis indices {witness:?}")]
    AlgebraAxiom { law: &'static str, witness: Vec<usize> },
    /// A requested degree lies outside the window a truncation can answer.
    #[error("degree {degree} is outside the reliable window (>= {min_degree}) for weight {weight}")]
    Unreliable { degree: i64, min_degree: i64, weight: usize },
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { what, reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
