//! Penrose principal-spinor decompositions: C_{AB…D} ∝ a_{(A} b_B … d_{D)}.

use spinor_core::{index_range, IndexFamily, SpinorObject, Variance};

use crate::error::CongruenceError;

fn is_lower_undotted_vector(s: &SpinorObject) -> bool {
    s.rank() == 1
        && s.specs()[0].family == IndexFamily::Undotted
        && s.specs()[0].variance == Variance::Lower
}

/// Whether the totally symmetric spinor `c` equals the symmetrized outer
/// product of the given rank-1 spinors up to an overall scalar factor. The
/// scalar is solved from the first nonvanishing component of the product and
/// the full identity is then checked exactly.
///
/// A zero `c` with an empty spinor list is vacuously a product; a zero `c`
/// with a nonempty list is rejected as an error because no scalar can be
/// solved for.
pub fn petrov_decomposition_check(
    c: &SpinorObject,
    spinors: &[SpinorObject],
) -> Result<bool, CongruenceError> {
    if c.is_zero() {
        return if spinors.is_empty() {
            Ok(true)
        } else {
            Err(CongruenceError::ZeroCurvatureSpinor)
        };
    }
    if spinors.len() != c.rank() {
        return Err(CongruenceError::WrongShape {
            expected: "one rank-1 spinor per index of the decomposed object",
        });
    }
    for s in spinors {
        if !is_lower_undotted_vector(s) {
            return Err(CongruenceError::WrongShape {
                expected: "rank-1 spinors with one lower undotted index",
            });
        }
    }

    let mut product = spinors[0].clone();
    for s in &spinors[1..] {
        product = product.outer(s);
    }
    let all_positions: Vec<usize> = (0..c.rank()).collect();
    let product = product.symmetrize(&all_positions)?;
    if product.is_zero() {
        return Ok(false);
    }

    let pivot = index_range(c.rank())
        .find(|idx| !product.get(idx).is_zero())
        .expect("nonzero object has a nonzero component");
    let scale = c.get(&pivot).try_div(product.get(&pivot))?;
    Ok(c.equivalent(&product.scale(&scale))?)
}
