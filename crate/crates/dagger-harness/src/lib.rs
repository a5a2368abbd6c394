//! A harness for finite, explicitly-enumerated dagger categories of
//! orthosets or Hermitian spaces: categorical laws, dagger biproducts,
//! semiadditive structure, the hypotheses (H1)-(H5) and (H3'), and the
//! derived lemmas, all machine-checked at instance level.

pub mod acceptance;
pub mod biproduct;
pub mod format;
pub mod hypotheses;
pub mod instance;
pub mod laws;
pub mod lemmas;
pub mod runner;
pub mod semiadditive;

pub use biproduct::{
    mediators, oplus_candidates, oplus_map, verify_dagger_biproduct, BiproductReport,
    BiproductWitness,
};
pub use hypotheses::{
    check_h5, check_hypotheses_hermitian, check_hypotheses_orthoset, HypothesesReport,
    HypothesisStatus,
};
pub use instance::{Category, HermitianInstance, OrthosetInstance};
pub use laws::{verify_category_laws, verify_zero_object, CategoryLawReport, ZeroObjectReport};
pub use lemmas::{verify_derived_lemmas, DerivedLemmaReport, LemmaOutcome};
pub use semiadditive::{
    hermitian_sum_via_biproduct, orthoset_sum, verify_semiadditive_hermitian,
    verify_semiadditive_orthoset, OrthosetSumReport, SemiadditiveReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("object index {0} out of range")]
    BadObjectIndex(usize),
    #[error("hom-set enumeration between carriers of size {dom} and {cod} is too large")]
    EnumerationTooLarge { dom: usize, cod: usize },
    #[error("witness morphism is not in the instance hom-sets")]
    MorphismNotInInstance,
    #[error("required mediating morphism is absent; the instance is not closed")]
    MediatorMissing,
    #[error(transparent)]
    Core(#[from] ortho_core::OrthoError),
    #[error(transparent)]
    Map(#[from] ortho_maps::MapError),
    #[error(transparent)]
    Hermitian(#[from] hermitian::HermitianError),
}
