//! Error type for classification.

use congruence_analysis::CongruenceError;
use thiserror::Error;

use crate::label::PetrovBase;

/// Errors from the type table and the subtype analysis.
#[derive(Debug, Error)]
pub enum ClassificationError {
    /// The type table applies only in an adapted tetrad, where the two
    /// highest Weyl coefficients vanish identically.
    #[error("coefficient {coefficient} is nonzero: the frame is not adapted")]
    FrameNotAdapted { coefficient: &'static str },
    /// Subtype decorations exist only for type D.
    #[error("expansion subtypes are defined for type D, found {found}")]
    NotTypeD { found: PetrovBase },
    /// A label would violate the decoration scheme (at most two marks, and
    /// only on the bases that admit them).
    #[error("base {base} admits at most {allowed} expansion marks, got {got}")]
    TooManyMarks {
        base: PetrovBase,
        allowed: usize,
        got: usize,
    },
    /// Failure in the congruence layer.
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}
