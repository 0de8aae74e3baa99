//! The Killing equation for coordinate vector fields: L_K g = 0.

use symkernel::{Expr, Symbol};

use crate::error::CongruenceError;
use crate::field::VectorField;

/// Whether `k` is a Killing vector of the metric `g` over the given chart:
/// every component of the Lie derivative
///
/// ```text
/// (L_K g)_{ab} = K^c ∂_c g_{ab} + g_{cb} ∂_a K^c + g_{ac} ∂_b K^c
/// ```
///
/// must vanish identically.
pub fn killing_check(
    k: &VectorField,
    g: &[[Expr; 4]; 4],
    chart: &[Symbol; 4],
) -> Result<bool, CongruenceError> {
    for a in 0..4 {
        for b in a..4 {
            let mut lie = Expr::zero();
            for c in 0..4 {
                lie += k.component(c) * g[a][b].differentiate(&chart[c])?;
                lie += &g[c][b] * k.component(c).differentiate(&chart[a])?;
                lie += &g[a][c] * k.component(c).differentiate(&chart[b])?;
            }
            if !lie.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
