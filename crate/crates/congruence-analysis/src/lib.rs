//! Analysis of self-dual null-string congruences on Plebański metrics.
//!
//! The crate provides the first-order machinery layered on top of
//! `plebanski-geometry`: covariant derivatives of spinor fields of arbitrary
//! index structure, the null-string integrability test with its
//! Sommers-vector/expansion decomposition, conformal-recurrence checks for
//! the curvature spinors, the Killing equation for coordinate vector fields,
//! and Penrose principal-spinor decompositions.
//!
//! All checks are exact: a verdict of "zero" means identically zero as a
//! rational function of the coordinates (and of any opaque functions and
//! their derivatives), never a numerical approximation.

mod congruence;
mod derivative;
mod error;
mod field;
mod killing;
mod petrov;
mod recurrence;

pub use congruence::{recurrence_vector, string_check, CongruenceData};
pub use derivative::covariant_derivative;
pub use error::CongruenceError;
pub use field::{SpinorField, VectorField};
pub use killing::killing_check;
pub use petrov::petrov_decomposition_check;
pub use recurrence::{recurrence_check, traceless_ricci_recurrence_check, weyl_spinor};
