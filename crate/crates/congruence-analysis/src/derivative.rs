//! Covariant differentiation of spinor fields of arbitrary index structure.

use plebanski_geometry::{connection, spinor_derivative, PlebanskiMetric};
use spinor_core::{IndexFamily, IndexSpec, SpinorObject, Variance};

/// Applies ∇_{AṀ} to a spinor field, appending one lower undotted and one
/// lower dotted index after the field's own indices:
///
/// ```text
/// (∇v)_{…AṀ} = ∂_{AṀ} v_… + (connection correction per index of v)
/// ```
///
/// A lower index B contributes −Γ^S_{BAṀ} v_{…S…}, an upper index B
/// contributes +Γ^B_{SAṀ} v^{…S…}; dotted indices use the dotted connection.
/// The rotation coefficients are the metric's own, so ∇ε ≡ 0 and
/// ∇_{AṀ} g ≡ 0 hold by construction (and are asserted in tests rather than
/// assumed).
pub fn covariant_derivative(s: &SpinorObject, m: &PlebanskiMetric) -> SpinorObject {
    let conn = connection(m);
    // Γ^S_{BAṀ} = ε^{RS} Γ_{RBAṀ} and its dotted counterpart.
    let gamma_undotted = conn.undotted().raise_lower(0);
    let gamma_dotted = conn.dotted().raise_lower(0);
    let rank = s.rank();
    let mut specs = s.specs().to_vec();
    specs.push(IndexSpec::low());
    specs.push(IndexSpec::dlow());
    SpinorObject::from_fn(specs, |full| {
        let (head, tail) = full.split_at(rank);
        let (a, mdot) = (tail[0], tail[1]);
        let mut val = spinor_derivative(s.get(head), m, a, mdot, Variance::Lower);
        let mut swapped = head.to_vec();
        for (pos, spec) in s.specs().iter().enumerate() {
            let gamma = match spec.family {
                IndexFamily::Undotted => &gamma_undotted,
                IndexFamily::Dotted => &gamma_dotted,
            };
            let b = head[pos];
            for sv in 1..=2u8 {
                swapped[pos] = sv;
                let coeff = match spec.variance {
                    Variance::Lower => -gamma.get(&[sv, b, a, mdot]),
                    Variance::Upper => gamma.get(&[b, sv, a, mdot]).clone(),
                };
                if !coeff.is_zero() {
                    val += coeff * s.get(&swapped);
                }
            }
            swapped[pos] = b;
        }
        val
    })
}
