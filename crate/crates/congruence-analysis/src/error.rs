//! Error type for congruence and recurrence analysis.

use spinor_core::SpinorError;
use symkernel::KernelError;
use thiserror::Error;

/// Errors from congruence extraction, recurrence checking, and the
/// supporting spinor plumbing.
#[derive(Debug, Error)]
pub enum CongruenceError {
    /// A generator field must not be identically zero.
    #[error("spinor field is identically zero")]
    ZeroField,
    /// Regauging and the two-generator recurrence vector are defined only
    /// for nonexpanding congruences.
    #[error("operation requires a nonexpanding congruence")]
    ExpandingCongruence,
    /// An input object does not have the index structure the operation
    /// expects.
    #[error("expected index structure {expected}")]
    WrongShape { expected: &'static str },
    /// A vanishing curvature spinor admits no principal-spinor comparison.
    #[error("curvature spinor is identically zero but the spinor list is not empty")]
    ZeroCurvatureSpinor,
    /// Symbolic kernel failure.
    #[error(transparent)]
    Kernel(#[from] KernelError),
    /// Spinor index-structure failure.
    #[error(transparent)]
    Spinor(#[from] SpinorError),
}
