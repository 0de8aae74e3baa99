//! Field wrappers: rank-1 spinor generators and coordinate vector fields.

use spinor_core::{IndexSpec, SpinorObject};
use symkernel::Expr;

use crate::error::CongruenceError;

/// A nowhere-trivial rank-1 undotted lower spinor field m_A — the generator
/// of a candidate family of self-dual null strings.
#[derive(Debug, Clone)]
pub struct SpinorField {
    components: SpinorObject,
}

impl SpinorField {
    /// Builds the field from its two lower components (m_1, m_2). At least
    /// one component must not be identically zero.
    pub fn new(m1: Expr, m2: Expr) -> Result<Self, CongruenceError> {
        let components = SpinorObject::vector(IndexSpec::low(), m1, m2);
        if components.is_zero() {
            return Err(CongruenceError::ZeroField);
        }
        Ok(SpinorField { components })
    }

    /// The components as a rank-1 lower undotted object.
    pub fn components(&self) -> &SpinorObject {
        &self.components
    }

    /// Component m_A for A in {1, 2}.
    pub fn get(&self, a: u8) -> &Expr {
        self.components.get(&[a])
    }

    /// The raised field m^A = (−m_2, m_1).
    pub fn raised(&self) -> SpinorObject {
        self.components.raise_lower(0)
    }
}

/// A vector field written in coordinate components K = K^a ∂_a over a
/// four-coordinate chart.
#[derive(Debug, Clone)]
pub struct VectorField {
    components: [Expr; 4],
}

impl VectorField {
    /// Builds the field from its four coordinate components, in chart order.
    pub fn new(components: [Expr; 4]) -> Self {
        VectorField { components }
    }

    /// The coordinate components in chart order.
    pub fn components(&self) -> &[Expr; 4] {
        &self.components
    }

    /// Component K^a for a 0-based coordinate position.
    pub fn component(&self, a: usize) -> &Expr {
        &self.components[a]
    }
}
