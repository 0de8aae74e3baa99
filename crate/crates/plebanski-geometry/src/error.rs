//! Error type for geometry construction and transformation.

use symkernel::KernelError;
use thiserror::Error;

/// Errors raised while building metrics, coefficients, transforms, or the
/// coordinate-curvature oracle.
#[derive(Debug, Error)]
pub enum GeometryError {
    /// The symbol context must declare exactly four coordinates
    /// (q¹̇, q²̇, p¹̇, p²̇) for the adapted double-null form.
    #[error("expected a chart of exactly 4 coordinates, found {found}")]
    ChartSize { found: usize },

    /// The 4×4 coordinate matrix of the metric must have a nonzero constant
    /// determinant.
    #[error("metric is degenerate: coordinate determinant is {determinant}")]
    DegenerateMetric { determinant: String },

    /// Ansatz coefficients must be functions of the q-coordinates only.
    #[error("ansatz coefficient {component} depends on a p-coordinate")]
    CoefficientDependsOnP { component: String },

    /// A metric handed to `read_coefficients` that is not a cubic polynomial
    /// in the p-coordinates of the admissible shape.
    #[error("metric component {component} is not of the admissible cubic form")]
    NotAnsatzForm { component: String },

    /// The q-map of a coordinate transform must have Δ ≠ 0.
    #[error("coordinate transform is degenerate: Δ = 0 identically")]
    DegenerateTransform,

    /// The pieces of a coordinate transform (q-map, shift, inverse) must be
    /// functions of the q-coordinates only.
    #[error("transform component {piece} depends on a p-coordinate")]
    TransformDependsOnP { piece: String },

    /// The supplied inverse q-map does not invert the forward q-map.
    #[error("inverse q-map mismatch: {direction} composition is not the identity")]
    InverseMismatch { direction: &'static str },

    /// A metric and a transform (or two metrics) must share one coordinate
    /// chart.
    #[error("operands use different coordinate charts")]
    MismatchedCharts,

    /// The coordinate-curvature oracle requires an invertible metric matrix.
    #[error("oracle input matrix is singular (determinant is identically zero)")]
    SingularMetric,

    /// The coordinate-curvature oracle requires a symmetric metric matrix.
    #[error("oracle input matrix is not symmetric at entry ({row}, {col})")]
    AsymmetricMetric { row: usize, col: usize },

    /// A kernel operation failed (division by zero, invalid substitution, …).
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
