//! Null-string integrability and the Sommers-vector/expansion split.

use plebanski_geometry::{spinor_derivative, PlebanskiMetric};
use spinor_core::{IndexSpec, SpinorObject, Variance};
use symkernel::Expr;

use crate::derivative::covariant_derivative;
use crate::error::CongruenceError;
use crate::field::SpinorField;

/// The first-order invariants of a congruence generator m_A: the unique
/// decomposition
///
/// ```text
/// ∇_{AṀ} m_B = Z_{AṀ} m_B + ε_{AB} M_Ṁ
/// ```
///
/// into a Sommers vector Z and an expansion covector M, together with the
/// two verdicts read off from it.
#[derive(Debug, Clone)]
pub struct CongruenceData {
    sommers: SpinorObject,
    expansion: SpinorObject,
    is_integrable: bool,
    is_nonexpanding: bool,
}

impl CongruenceData {
    /// The Sommers vector Z_{AṀ} (zero when the generator is not
    /// integrable).
    pub fn sommers(&self) -> &SpinorObject {
        &self.sommers
    }

    /// The expansion covector M_Ṁ (zero when the generator is not
    /// integrable).
    pub fn expansion(&self) -> &SpinorObject {
        &self.expansion
    }

    /// Whether the generator satisfies the null-string equations
    /// m^A m^B ∇_{AṀ} m_B ≡ 0.
    pub fn is_integrable(&self) -> bool {
        self.is_integrable
    }

    /// Whether the congruence is nonexpanding (M_Ṁ ≡ 0).
    pub fn is_nonexpanding(&self) -> bool {
        self.is_nonexpanding
    }

    /// Regauges the generator by the formal square root of `u`, which shifts
    /// the Sommers vector by ½ ∂_{AṀ} ln u while keeping every stored
    /// quantity rational. Only nonexpanding congruences may be regauged this
    /// way (an expansion would pick up the irrational factor itself; here it
    /// is zero).
    pub fn rescale_sq(
        &self,
        u: &Expr,
        m: &PlebanskiMetric,
    ) -> Result<CongruenceData, CongruenceError> {
        if !self.is_nonexpanding {
            return Err(CongruenceError::ExpandingCongruence);
        }
        let ln_u = u.ln()?;
        let shift = SpinorObject::from_fn(
            vec![IndexSpec::low(), IndexSpec::dlow()],
            |idx| spinor_derivative(&ln_u, m, idx[0], idx[1], Variance::Lower),
        )
        .scale(&Expr::ratio(1, 2));
        Ok(CongruenceData {
            sommers: self.sommers.add(&shift)?,
            expansion: self.expansion.clone(),
            is_integrable: self.is_integrable,
            is_nonexpanding: self.is_nonexpanding,
        })
    }
}

/// Checks the self-dual null-string equations for a generator field and,
/// when they hold, extracts the Sommers vector and expansion.
///
/// The generator is integrable exactly when m^A m^B ∇_{AṀ} m_B vanishes for
/// both Ṁ; in that case ∇_{AṀ} m_B = Z_{AṀ} m_B + ε_{AB} M_Ṁ has a unique
/// solution (m ≠ 0), found by contracting with the raised generator and
/// dividing by a nonvanishing component. For a non-integrable generator the
/// returned Z and M are zero and both verdicts are false.
pub fn string_check(
    s: &SpinorField,
    m: &PlebanskiMetric,
) -> Result<CongruenceData, CongruenceError> {
    let low = s.components();
    let up = s.raised();
    // X[B, A, Ṁ] = ∇_{AṀ} m_B.
    let x = covariant_derivative(low, m);

    let mut integrable = true;
    for mdot in 1..=2u8 {
        let mut total = Expr::zero();
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let prod = up.get(&[a]) * up.get(&[b]);
                if !prod.is_zero() {
                    total += prod * x.get(&[b, a, mdot]);
                }
            }
        }
        if !total.is_zero() {
            integrable = false;
        }
    }

    if !integrable {
        return Ok(CongruenceData {
            sommers: SpinorObject::zeros(vec![IndexSpec::low(), IndexSpec::dlow()]),
            expansion: SpinorObject::zeros(vec![IndexSpec::dlow()]),
            is_integrable: false,
            is_nonexpanding: false,
        });
    }

    // Pivot on a component of m that is not identically zero.
    let pivot: u8 = if !low.get(&[1]).is_zero() { 1 } else { 2 };
    let m_pivot = low.get(&[pivot]);

    // V_{AṀ} = m^B ∇_{AṀ} m_B must equal m_A M_Ṁ; solve M at the pivot.
    let v = up.outer(&x).contract(0, 1)?;
    let m1 = v.get(&[pivot, 1]).try_div(m_pivot)?;
    let m2 = v.get(&[pivot, 2]).try_div(m_pivot)?;
    let expansion = SpinorObject::vector(IndexSpec::dlow(), m1, m2);

    // Z_{AṀ} m_B = ∇_{AṀ} m_B − ε_{AB} M_Ṁ; solve Z at the pivot.
    let eps = SpinorObject::epsilon_lower(spinor_core::IndexFamily::Undotted);
    let mut sommers = SpinorObject::zeros(vec![IndexSpec::low(), IndexSpec::dlow()]);
    for a in 1..=2u8 {
        for mdot in 1..=2u8 {
            let y = x.get(&[pivot, a, mdot]) - &(eps.get(&[a, pivot]) * expansion.get(&[mdot]));
            sommers.set(&[a, mdot], y.try_div(m_pivot)?);
        }
    }

    // The decomposition must reproduce ∇m exactly; anything else is an
    // internal inconsistency, not a property of the input.
    for b in 1..=2u8 {
        for a in 1..=2u8 {
            for mdot in 1..=2u8 {
                let rebuilt = sommers.get(&[a, mdot]) * low.get(&[b])
                    + eps.get(&[a, b]) * expansion.get(&[mdot]);
                assert!(
                    x.get(&[b, a, mdot]).equivalent(&rebuilt),
                    "integrable generator failed to decompose at ({b},{a},{mdot})"
                );
            }
        }
    }

    let is_nonexpanding = expansion.is_zero();
    Ok(CongruenceData {
        sommers,
        expansion,
        is_integrable: true,
        is_nonexpanding,
    })
}

/// The recurrence candidate r_{AṀ} = 2 Z_{AṀ} + 2 S_{AṀ} built from two
/// nonexpanding congruences.
pub fn recurrence_vector(
    z: &CongruenceData,
    s: &CongruenceData,
) -> Result<SpinorObject, CongruenceError> {
    if !z.is_nonexpanding() || !s.is_nonexpanding() {
        return Err(CongruenceError::ExpandingCongruence);
    }
    let two = Expr::from_int(2);
    Ok(z.sommers().scale(&two).add(&s.sommers().scale(&two))?)
}
