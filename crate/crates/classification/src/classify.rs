//! The classification operations: the exact base-type condition table, the
//! D-subtype expansion marks, and the dotted-side label.

use congruence_analysis::{string_check, CongruenceData, SpinorField};
use plebanski_geometry::{curvature, div_eth_q, PlebanskiMetric};
use symkernel::Expr;

use crate::error::ClassificationError;
use crate::label::{AsdLabel, ExpansionMark, PetrovBase, PetrovLabel};

/// Applies the base-type condition table for a Weyl spinor given by its five
/// scalar coefficients in an adapted frame (so C⁵ and C⁴ must vanish
/// identically):
///
/// ```text
/// [II]  iff C³ ≠ 0 and 2(C²)² − 3C¹C³ ≠ 0
/// [D]   iff C³ ≠ 0 and 2(C²)² − 3C¹C³ ≡ 0
/// [III] iff C³ ≡ 0 and C² ≠ 0
/// [N]   iff C³ ≡ C² ≡ 0 and C¹ ≠ 0
/// [−]   iff C¹ ≡ C² ≡ C³ ≡ 0
/// ```
///
/// "≠ 0" always means "not identically zero"; pointwise vanishing loci are
/// deliberately not inspected here.
pub fn petrov_type(
    c1: &Expr,
    c2: &Expr,
    c3: &Expr,
    c4: &Expr,
    c5: &Expr,
) -> Result<PetrovBase, ClassificationError> {
    if !c5.is_zero() {
        return Err(ClassificationError::FrameNotAdapted { coefficient: "C5" });
    }
    if !c4.is_zero() {
        return Err(ClassificationError::FrameNotAdapted { coefficient: "C4" });
    }
    if !c3.is_zero() {
        let discriminant = Expr::from_int(2) * &(c2 * c2) - Expr::from_int(3) * &(c1 * c3);
        return Ok(if discriminant.is_zero() {
            PetrovBase::D
        } else {
            PetrovBase::II
        });
    }
    if !c2.is_zero() {
        return Ok(PetrovBase::III);
    }
    if !c1.is_zero() {
        return Ok(PetrovBase::N);
    }
    Ok(PetrovBase::Minus)
}

/// The base type of a metric's self-dual Weyl spinor (always computed in the
/// adapted frame the metric form provides, where C⁵ = C⁴ = 0).
pub fn metric_petrov_type(m: &PlebanskiMetric) -> Result<PetrovBase, ClassificationError> {
    let curv = curvature(m);
    petrov_type(curv.c(1), curv.c(2), curv.c(3), curv.c(4), curv.c(5))
}

fn mark_of(data: &CongruenceData) -> ExpansionMark {
    if data.is_nonexpanding() {
        ExpansionMark::Nonexpanding
    } else {
        ExpansionMark::Expanding
    }
}

/// The full label of a type-D metric: one expansion mark per degenerate
/// congruence family that exists.
///
/// The first family is generated by m = (0,1). The second family exists iff
/// the fully null connection component Γ₍₂₂₂Ḋ₎ — equivalently ð^ȦQ_{ȦḂ} —
/// vanishes identically; the metric form already normalizes the gauge so the
/// generator can then be taken as l = (1,0). When that test fails the label
/// carries a single mark.
///
/// Errors when the base type is not D.
pub fn d_subtype(m: &PlebanskiMetric) -> Result<PetrovLabel, ClassificationError> {
    let base = metric_petrov_type(m)?;
    if base != PetrovBase::D {
        return Err(ClassificationError::NotTypeD { found: base });
    }

    let mut marks = Vec::with_capacity(2);
    let first = string_check(&SpinorField::new(Expr::zero(), Expr::one())?, m)?;
    if first.is_integrable() {
        marks.push(mark_of(&first));
    }

    let eth = div_eth_q(m);
    if eth[0].is_zero() && eth[1].is_zero() {
        let second = string_check(&SpinorField::new(Expr::one(), Expr::zero())?, m)?;
        if second.is_integrable() {
            marks.push(mark_of(&second));
        }
    }

    PetrovLabel::new(PetrovBase::D, marks, asd_label(m))
}

/// The dotted-side label: `not-SD` when the dotted Weyl spinor does not
/// vanish identically; otherwise [−] marked `e` when the curvature scalar is
/// not identically zero and `n` when it is.
pub fn asd_label(m: &PlebanskiMetric) -> AsdLabel {
    let curv = curvature(m);
    if !curv.weyl_asd().is_zero() {
        return AsdLabel::NotSelfDual;
    }
    AsdLabel::Minus(if curv.scalar_curvature().is_zero() {
        ExpansionMark::Nonexpanding
    } else {
        ExpansionMark::Expanding
    })
}
