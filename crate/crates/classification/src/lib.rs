//! Petrov-Penrose classification of self-dual Weyl data.
//!
//! The base type is decided by an exact condition table on the five Weyl
//! coefficients of an adapted frame; type D is refined by expansion marks,
//! one per degenerate congruence family, and every label carries the
//! dotted-side [−] verdict with its own mark read from the curvature scalar.
//! All zero tests are identical-vanishing tests on exact expressions.

mod classify;
mod error;
mod label;

pub use classify::{asd_label, d_subtype, metric_petrov_type, petrov_type};
pub use error::ClassificationError;
pub use label::{AsdLabel, ExpansionMark, PetrovBase, PetrovLabel};
