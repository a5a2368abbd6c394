//! Exact finite-dimensional Hermitian spaces over involutive fields (the
//! rationals and the Gaussian rationals): positive-definite forms, canonical
//! subspaces, linear adjoints, morphism classification, direct sums, line
//! quotients, finite orthoset samples, and strict-square-root checks.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate.

pub mod format;
pub mod linmap;
pub mod lines;
pub mod matrix;
pub mod props;
pub mod scalar;
pub mod space;
pub mod sqrt;

pub use linmap::{classify_linear, is_adjoint_pair, LinearLabels, LinearMap};
pub use lines::{induced_line_map, lines_orthogonal, orthoset_sample, Line, OrthosetSample};
pub use matrix::Matrix;
pub use props::{scalar_property_tests, ScalarPropertyReport};
pub use scalar::{Gaussian, Rational, Scalar};
pub use space::{verify_orthomodular, HermitianSpace, OrthomodularReport, Subspace};
pub use sqrt::{strict_square_root_check, StrictSqrtReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HermitianError {
    #[error("cannot parse scalar: {0:?}")]
    ScalarParse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("Gram matrix is not Hermitian-symmetric")]
    NotHermitian,
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("{0} is not unitary")]
    NotUnitary(String),
    #[error("supplied map #{0} is not a projection")]
    NotAProjection(usize),
    #[error("zero vector does not span a line")]
    ZeroVectorLine,
    #[error("duplicate line in sample input")]
    DuplicateLine,
    #[error("unknown scalar field {0:?}; expected \"Q\" or \"Q(i)\"")]
    UnknownScalars(String),
}
