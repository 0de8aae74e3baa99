//! Geometry of metrics in the adapted double-null form
//! ½ds² = −dp^Ȧ dq_Ȧ + Q^{ȦḂ} dq_Ȧ dq_Ḃ.
//!
//! Everything a metric of this shape carries is derived here from the three
//! functions Q^{ȦḂ}(q, p, x, y):
//!
//! * the null tetrad e¹…e⁴ and its dual vector fields ([`build_tetrad`]),
//! * the first-order operators ∂_Ȧ and ð_Ȧ and their raised forms
//!   ([`del`], [`eth`], [`spinor_derivative`]),
//! * the spinorial connection coefficients ([`connection`]),
//! * the full curvature: the five self-dual Weyl scalars C⁽¹⁾…C⁽⁵⁾, the
//!   scalar curvature R = 6C⁽³⁾, the anti-self-dual Weyl spinor C_{ȦḂĊḊ},
//!   and the traceless Ricci spinor C_{ABȦḂ} ([`curvature`]),
//! * the cubic ansatz solving C_{ȦḂĊḊ} = 0, with coefficient extraction and
//!   closed-form identities ([`ansatz_to_Q`], [`read_coefficients`],
//!   [`eth_q_closed_form`]),
//! * the shape-preserving coordinate freedom and the induced transformation
//!   laws of the ansatz coefficients ([`gauge_transform`],
//!   [`transform_coefficients`]),
//! * an independent coordinate-level Christoffel/Ricci oracle that shares no
//!   code with the spinorial pipeline ([`christoffel_oracle`]).
//!
//! All computation is exact over ℚ(√2); √2 enters only through the tetrad
//! normalisation and is asserted to cancel from every reported curvature
//! quantity.

mod ansatz;
mod connection;
mod curvature;
mod error;
mod gauge;
mod linalg;
mod metric;
mod operators;
mod oracle;
mod tetrad;

pub use ansatz::{
    ansatz_c3_closed_form, ansatz_to_Q, eth_q_closed_form, read_coefficients, AnsatzCoefficients,
};
pub use connection::{connection, Connection};
pub use curvature::{curvature, Curvature};
pub use error::GeometryError;
pub use gauge::{gauge_transform, pullback_matches, transform_coefficients, GaugeTransform};
pub use metric::{sks_check, KerrSchildClass, PlebanskiMetric};
pub use operators::{del, div_del_q, div_eth_q, eth, spinor_derivative};
pub use oracle::{christoffel_oracle, CoordinateCurvature};
pub use tetrad::{build_tetrad, Tetrad};
