//! Conformal recurrence of the curvature spinors: ∇_{AṀ} C_... = r_{AṀ} C_...

use plebanski_geometry::{curvature, Curvature, PlebanskiMetric};
use spinor_core::{IndexSpec, SpinorObject, Variance};

use crate::derivative::covariant_derivative;
use crate::error::CongruenceError;

/// Assembles the totally symmetric undotted Weyl spinor C_{ABCD} from the
/// five scalar components, keyed by how many of the four indices equal 1:
///
/// ```text
/// C_{1111} = C⁵/2   C_{1112} = −C⁴/2   C_{1122} = C³/2
/// C_{1222} = −C²/2  C_{2222} = C¹/2
/// ```
pub fn weyl_spinor(curv: &Curvature) -> SpinorObject {
    let half = symkernel::Expr::ratio(1, 2);
    let minus_half = symkernel::Expr::ratio(-1, 2);
    SpinorObject::from_fn(
        vec![IndexSpec::low(); 4],
        |idx| {
            let ones = idx.iter().filter(|&&i| i == 1).count();
            match ones {
                4 => &half * curv.c(5),
                3 => &minus_half * curv.c(4),
                2 => &half * curv.c(3),
                1 => &minus_half * curv.c(2),
                _ => &half * curv.c(1),
            }
        },
    )
    .with_symmetry(vec![0, 1, 2, 3])
}

fn spec_is(spec: &IndexSpec, family: spinor_core::IndexFamily, variance: Variance) -> bool {
    spec.family == family && spec.variance == variance
}

/// Validates that `r` has the index structure of a spinorial covector
/// r_{AṀ} (one lower undotted, one lower dotted index).
fn require_covector(r: &SpinorObject) -> Result<(), CongruenceError> {
    let ok = r.rank() == 2
        && spec_is(&r.specs()[0], spinor_core::IndexFamily::Undotted, Variance::Lower)
        && spec_is(&r.specs()[1], spinor_core::IndexFamily::Dotted, Variance::Lower);
    if ok {
        Ok(())
    } else {
        Err(CongruenceError::WrongShape {
            expected: "a rank-2 object with one lower undotted and one lower dotted index",
        })
    }
}

fn recurrence_residual_is_zero(
    field: &SpinorObject,
    m: &PlebanskiMetric,
    r: &SpinorObject,
) -> bool {
    let derivative = covariant_derivative(field, m);
    let rank = field.rank();
    for idx in spinor_core::index_range(rank + 2) {
        let head = &idx[..rank];
        let tail = &idx[rank..];
        let expected = r.get(tail) * field.get(head);
        if !derivative.get(&idx).equivalent(&expected) {
            return false;
        }
    }
    true
}

/// Whether the undotted Weyl spinor of `m` satisfies the recurrence
/// ∇_{AṀ} C_{BCDE} = r_{AṀ} C_{BCDE} for the given candidate covector.
pub fn recurrence_check(
    m: &PlebanskiMetric,
    r: &SpinorObject,
) -> Result<bool, CongruenceError> {
    require_covector(r)?;
    let c = weyl_spinor(&curvature(m));
    Ok(recurrence_residual_is_zero(&c, m, r))
}

/// Whether the traceless Ricci spinor C_{ABĊḊ} of `m` satisfies the
/// recurrence ∇_{AṀ} C_{BCĊḊ} = r_{AṀ} C_{BCĊḊ} for the given candidate.
pub fn traceless_ricci_recurrence_check(
    m: &PlebanskiMetric,
    r: &SpinorObject,
) -> Result<bool, CongruenceError> {
    require_covector(r)?;
    let curv = curvature(m);
    Ok(recurrence_residual_is_zero(curv.traceless_ricci(), m, r))
}
