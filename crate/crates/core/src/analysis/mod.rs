//! Decision procedures and finite probes over semigroups and expansions.

mod cancel;
mod cover;
mod equidiv;
mod morphism;
mod retraction;
mod tower;

use thiserror::Error;

use crate::alphabet::AlphabetError;
use crate::budget::BudgetError;
use crate::hom::HomError;
use crate::kr::KrError;
use crate::semigroup::Element;

pub use cancel::{is_letter_super_cancellative, LscReport, LscWitness};
pub use cover::{check_identity_adjunction_preserves_cover, is_kr_cover, is_kr_cover_with, KrCoverReport};
pub use equidiv::{admits_refinement, distance_one_equidivisibility, is_equidivisible, EquidivisibilityReport, Quadruple};
pub use morphism::{is_aperiodic_morphism, is_v_morphism, FiberWitness, VMorphismReport};
pub use retraction::{cs_retraction, Retraction};
pub use tower::{
    check_absorption, check_tower_lsc, tower_coherence, AbsorptionReport, CoherenceReport, LevelAbsorption,
    LevelLsc,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Kr(#[from] KrError),
    #[error(transparent)]
    Budget(#[from] BudgetError),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("map is not onto: {0} has no preimage")]
    NotOnto(Element),
    #[error("fiber over idempotent {idempotent} is not aperiodic at {element}")]
    NotAMorphismOfRequiredKind { idempotent: Element, element: Element },
    #[error("subset is not a J-class subsemigroup: {0}")]
    NotAJClassSubsemigroup(String),
    #[error("retraction construction failed: {0}")]
    ConstructionFailed(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
}

impl AnalysisError {
    /// Budget exhaustion, possibly wrapped in an expansion error.
    pub fn is_budget(&self) -> bool {
        matches!(self, AnalysisError::Budget(_) | AnalysisError::Kr(KrError::Budget(_)))
    }
}
