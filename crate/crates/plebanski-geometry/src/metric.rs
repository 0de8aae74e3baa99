//! The adapted double-null metric form.
//!
//! A metric here is determined by three functions Q^{ȦḂ} = Q^{(ȦḂ)} of four
//! chart coordinates (q¹̇, q²̇, p¹̇, p²̇), canonically named (q, p, x, y).
//! The line element is
//!
//! ```text
//! (1/2) ds² = −dp^Ȧ dq_Ȧ + Q^{ȦḂ} dq_Ȧ dq_Ḃ
//! ```
//!
//! where dotted indices are lowered with the antisymmetric spinorial metric
//! (v_1̇ = v^2̇, v_2̇ = −v^1̇). Expanded in coordinates this gives the
//! symmetric matrix returned by [`PlebanskiMetric::metric_matrix`]; its
//! determinant is the constant 1 for every choice of Q, which is what the
//! nondegeneracy check in the constructor verifies.

use symkernel::{Context, Expr, Symbol};

use crate::error::GeometryError;
use crate::linalg::determinant;

/// Kerr–Schild class of a metric in adapted double-null form: the metric is
/// always flat up to two null-string corrections (`Double`); when the scalar
/// Q^{ȦḂ} Q_{ȦḂ} vanishes identically a single correction suffices
/// (`Single`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KerrSchildClass {
    /// Double Kerr–Schild: Q^{ȦḂ} Q_{ȦḂ} ≢ 0.
    Double,
    /// Single Kerr–Schild: Q^{ȦḂ} Q_{ȦḂ} ≡ 0.
    Single,
}

/// A metric in adapted double-null form: a chart (q, p, x, y) together with
/// the three independent components of the symmetric spinor Q^{ȦḂ}.
#[derive(Debug, Clone)]
pub struct PlebanskiMetric {
    ctx: Context,
    chart: [Symbol; 4],
    /// Q^{1̇1̇}, Q^{1̇2̇}, Q^{2̇2̇}.
    q: [Expr; 3],
}

impl PlebanskiMetric {
    /// Builds a metric from the three independent components of Q^{ȦḂ}.
    ///
    /// The context must declare exactly four coordinates, interpreted in
    /// declaration order as (q¹̇, q²̇, p¹̇, p²̇). The constructor verifies
    /// nondegeneracy: the determinant of the 4×4 coordinate matrix must be a
    /// nonzero constant (it is identically 1 for this metric form, so the
    /// check guards the construction itself rather than the input).
    pub fn new(ctx: &Context, q11: Expr, q12: Expr, q22: Expr) -> Result<Self, GeometryError> {
        let chart = ctx.chart();
        if chart.len() != 4 {
            return Err(GeometryError::ChartSize { found: chart.len() });
        }
        let chart = [
            chart[0].clone(),
            chart[1].clone(),
            chart[2].clone(),
            chart[3].clone(),
        ];
        let metric = Self {
            ctx: ctx.clone(),
            chart,
            q: [q11, q12, q22],
        };
        let rows: Vec<Vec<Expr>> = metric.metric_matrix().into_iter().map(Vec::from).collect();
        let det = determinant(&rows);
        match det.as_constant() {
            Some(c) if !c.is_zero() => Ok(metric),
            _ => Err(GeometryError::DegenerateMetric {
                determinant: det.to_string(),
            }),
        }
    }

    /// The flat metric: Q^{ȦḂ} = 0.
    pub fn flat(ctx: &Context) -> Result<Self, GeometryError> {
        Self::new(ctx, Expr::zero(), Expr::zero(), Expr::zero())
    }

    /// The symbol context the metric lives in.
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// Chart symbols in the order (q¹̇, q²̇, p¹̇, p²̇).
    pub fn chart(&self) -> &[Symbol; 4] {
        &self.chart
    }

    /// Component Q^{ȦḂ} for index values in {1, 2} (symmetric lookup).
    pub fn q_upper(&self, a: u8, b: u8) -> &Expr {
        match (a.min(b), a.max(b)) {
            (1, 1) => &self.q[0],
            (1, 2) => &self.q[1],
            (2, 2) => &self.q[2],
            _ => panic!("dotted index out of range: ({a}, {b})"),
        }
    }

    /// Component Q_{ȦḂ} with both indices lowered:
    /// Q_{1̇1̇} = Q^{2̇2̇}, Q_{1̇2̇} = −Q^{1̇2̇}, Q_{2̇2̇} = Q^{1̇1̇}.
    pub fn q_lower(&self, a: u8, b: u8) -> Expr {
        match (a.min(b), a.max(b)) {
            (1, 1) => self.q[2].clone(),
            (1, 2) => -&self.q[1],
            (2, 2) => self.q[0].clone(),
            _ => panic!("dotted index out of range: ({a}, {b})"),
        }
    }

    /// The symmetric 4×4 coordinate matrix of the line element, in chart
    /// order (q, p, x, y):
    ///
    /// ```text
    /// ds² = 2 Q^{2̇2̇} dq² − 4 Q^{1̇2̇} dq dp + 2 Q^{1̇1̇} dp²
    ///       + 2 dq dy − 2 dp dx
    /// ```
    pub fn metric_matrix(&self) -> [[Expr; 4]; 4] {
        let mut g = std::array::from_fn(|_| std::array::from_fn(|_| Expr::zero()));
        fill_metric_matrix(&mut g, &self.q[0], &self.q[1], &self.q[2]);
        g
    }

    /// Kerr–Schild class: `Single` iff Q^{ȦḂ} Q_{ȦḂ} = 2·det Q^{ȦḂ}
    /// vanishes identically.
    pub fn kerr_schild_class(&self) -> KerrSchildClass {
        let det_q = &self.q[0] * &self.q[2] - &self.q[1] * &self.q[1];
        if det_q.is_zero() {
            KerrSchildClass::Single
        } else {
            KerrSchildClass::Double
        }
    }
}

/// Writes the double-null pattern into a zeroed 4×4 matrix. Shared with the
/// gauge-transform pullback check, which needs the same pattern evaluated on
/// transformed components.
pub(crate) fn fill_metric_matrix(g: &mut [[Expr; 4]; 4], q11: &Expr, q12: &Expr, q22: &Expr) {
    let two = Expr::from_int(2);
    g[0][0] = &two * q22;
    g[1][1] = &two * q11;
    g[0][1] = -(&two * q12);
    g[1][0] = g[0][1].clone();
    g[0][3] = Expr::one();
    g[3][0] = Expr::one();
    g[1][2] = -Expr::one();
    g[2][1] = -Expr::one();
}

/// Kerr–Schild classification of a metric (see
/// [`PlebanskiMetric::kerr_schild_class`]).
pub fn sks_check(m: &PlebanskiMetric) -> KerrSchildClass {
    m.kerr_schild_class()
}
