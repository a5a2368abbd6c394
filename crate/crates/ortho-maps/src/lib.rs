//! Adjointable maps between finite orthosets: adjoint synthesis with its
//! brute-force completeness oracle, equivalence, quotient maps,
//! kernel/image duality, and the morphism taxonomy (orthoisomorphism,
//! partial orthometry, orthometry, Sasaki map, projection).

pub mod adjoint;
pub mod bruteforce;
pub mod classify;
pub mod format;
pub mod map;
pub mod restrict;

pub use adjoint::{
    all_adjointable_maps, is_adjoint_pair, is_adjointable, synthesize_adjoint, AdjointPair,
    NotAdjointable,
};
pub use classify::{classify, verify_lattice_adjoint_laws, LatticeLawReport, MorphismLabels};
pub use map::{maps_equivalent, OrthoMap};
pub use restrict::{inclusion_map, quotient_map, zero_kernel_restriction, ZeroKernelRestriction};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("table length {got} does not match the carrier size {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("table value {value} out of range for codomain size {n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("maps are not composable: codomain and domain differ")]
    NotComposable,
    #[error("maps do not share domain and codomain")]
    ShapeMismatch,
    #[error("the two maps do not form an adjoint pair")]
    NotAnAdjointPair,
    #[error("{0}")]
    NotAdjointable(NotAdjointable),
    #[error("image of {x} is {y}, outside the requested corestriction")]
    ImageEscapesCorestriction { x: usize, y: usize },
    #[error(transparent)]
    Core(#[from] ortho_core::OrthoError),
}
