//! Finite orthosets: symmetric orthogonality structures with a designated
//! falsity element, their orthocomplement closure operator, separation
//! axioms, Dacey criteria, ranks, and decompositions.
//!
//! Everything here is exact and finite. Types are immutable after
//! construction and all operations are pure functions of their inputs.

pub mod clique;
pub mod dacey;
pub mod format;
pub mod gen;
pub mod orthoset;
pub mod quotient;
pub mod rank;
pub mod subset;

pub use dacey::{dacey_check, is_decomposition, is_reducible, split_by_rank, DaceyCriterion, DaceyReport, Decomposition};
pub use orthoset::{FiniteOrthoset, DEFAULT_FAMILY_CAP, MAX_CARRIER};
pub use quotient::{irredundant_quotient, Quotient};
pub use rank::{max_clique, maximal_perp_set, rank, RankMethod, RankReport};
pub use subset::Subset;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrthoError {
    #[error("an orthoset needs a non-empty carrier")]
    EmptyCarrier,
    #[error("carrier size {n} exceeds the supported maximum {max}")]
    CarrierTooLarge { n: usize, max: usize },
    #[error("edge index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop on proper element {0} violates irreflexivity")]
    ProperSelfLoop(usize),
    #[error("orthoclosed family exceeds the configured cap of {cap}")]
    FamilyCapExceeded { cap: usize },
    #[error("a subspace must contain the falsity")]
    SubspaceWithoutFalsity,
    #[error("split requires a verified atomistic Dacey instance with the covering property")]
    SplitHypothesesUnverified,
    #[error("rank is {rank}, cannot split into parts totalling {requested}")]
    SplitRankMismatch { rank: usize, requested: usize },
    #[error("constructed split failed decomposition verification")]
    SplitVerificationFailed,
    #[error("malformed input: {0}")]
    Format(String),
}
