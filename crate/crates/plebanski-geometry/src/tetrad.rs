//! Null tetrad adapted to the double-null metric form.
//!
//! In the chart (q, p, x, y) the four covector legs are
//!
//! ```text
//! e¹ = −dq
//! e² = −dy + Q^{1̇2̇} dp − Q^{2̇2̇} dq
//! e³ = dp
//! e⁴ = −dx + Q^{1̇1̇} dp − Q^{1̇2̇} dq
//! ```
//!
//! with dual vectors
//!
//! ```text
//! ∂₁ = −∂_q + Q^{1̇2̇} ∂_x + Q^{2̇2̇} ∂_y     (= ð^1̇ lifted to the frame)
//! ∂₂ = −∂_y
//! ∂₃ = ∂_p + Q^{1̇1̇} ∂_x + Q^{1̇2̇} ∂_y      (= ð^2̇ analogue)
//! ∂₄ = −∂_x
//! ```
//!
//! The metric is reconstructed as 2 e¹⊙e² + 2 e³⊙e⁴, and the frame is
//! adapted: (∂₂, ∂₄) span the first family of null strings, which is why the
//! ∂-operators are plain p-derivatives in this frame.

use symkernel::Expr;

use crate::metric::PlebanskiMetric;

/// Tetrad legs (covector components) and their dual vectors, both expressed
/// in chart components ordered (q, p, x, y). Legs are indexed 1..=4.
#[derive(Debug, Clone)]
pub struct Tetrad {
    one_forms: [[Expr; 4]; 4],
    vectors: [[Expr; 4]; 4],
}

/// Builds the adapted null tetrad of a metric.
pub fn build_tetrad(m: &PlebanskiMetric) -> Tetrad {
    let q11 = m.q_upper(1, 1);
    let q12 = m.q_upper(1, 2);
    let q22 = m.q_upper(2, 2);
    let zero = Expr::zero;
    let one = Expr::one;
    let one_forms = [
        // e¹ = −dq
        [-one(), zero(), zero(), zero()],
        // e² = −Q^{2̇2̇} dq + Q^{1̇2̇} dp − dy
        [-q22.clone(), q12.clone(), zero(), -one()],
        // e³ = dp
        [zero(), one(), zero(), zero()],
        // e⁴ = −Q^{1̇2̇} dq + Q^{1̇1̇} dp − dx
        [-q12.clone(), q11.clone(), -one(), zero()],
    ];
    let vectors = [
        // ∂₁ = −∂_q + Q^{1̇2̇} ∂_x + Q^{2̇2̇} ∂_y
        [-one(), zero(), q12.clone(), q22.clone()],
        // ∂₂ = −∂_y
        [zero(), zero(), zero(), -one()],
        // ∂₃ = ∂_p + Q^{1̇1̇} ∂_x + Q^{1̇2̇} ∂_y
        [zero(), one(), q11.clone(), q12.clone()],
        // ∂₄ = −∂_x
        [zero(), zero(), -one(), zero()],
    ];
    Tetrad { one_forms, vectors }
}

impl Tetrad {
    /// Covector components of leg `i` (1..=4) in chart order.
    pub fn one_form(&self, i: usize) -> &[Expr; 4] {
        &self.one_forms[i - 1]
    }

    /// Components of the dual vector ∂ᵢ (1..=4) in chart order.
    pub fn vector(&self, i: usize) -> &[Expr; 4] {
        &self.vectors[i - 1]
    }

    /// The pairing e^i(∂_j); equals δ^i_j for a well-formed tetrad.
    pub fn pairing(&self, i: usize, j: usize) -> Expr {
        (0..4)
            .map(|a| &self.one_forms[i - 1][a] * &self.vectors[j - 1][a])
            .sum()
    }

    /// The symmetric coordinate matrix 2 e¹⊙e² + 2 e³⊙e⁴ reconstructed from
    /// the legs; equals the metric matrix of the underlying metric.
    pub fn metric_from_forms(&self) -> [[Expr; 4]; 4] {
        let [e1, e2, e3, e4] = &self.one_forms;
        std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                &e1[a] * &e2[b] + &e1[b] * &e2[a] + &e3[a] * &e4[b] + &e3[b] * &e4[a]
            })
        })
    }

    /// Determinant of the 4×4 matrix whose rows are the tetrad legs; it is
    /// the constant −1 for every metric in this form (the tetrad volume
    /// element is unimodular).
    pub fn volume_determinant(&self) -> Expr {
        let rows: Vec<Vec<Expr>> = self.one_forms.iter().map(|r| r.to_vec()).collect();
        crate::linalg::determinant(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symkernel::Context;

    #[test]
    fn legs_and_vectors_are_mutually_dual() {
        let mut ctx = Context::new();
        ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
        let m = PlebanskiMetric::new(
            &ctx,
            ctx.parse("x^2 + q").unwrap(),
            ctx.parse("x*y*p").unwrap(),
            ctx.parse("y^3 - q*p").unwrap(),
        )
        .unwrap();
        let t = build_tetrad(&m);
        for i in 1..=4 {
            for j in 1..=4 {
                let expect = if i == j { Expr::one() } else { Expr::zero() };
                assert!(
                    t.pairing(i, j).equivalent(&expect),
                    "pairing e^{i}(∂_{j}) must be δ"
                );
            }
        }
    }
}
