//! Independent coordinate-level curvature computation.
//!
//! Everything else in this crate works through the null tetrad and the
//! ∂/ð operator calculus. This module ignores all of that and computes
//! curvature from a raw 4×4 metric matrix by the textbook coordinate
//! formulas
//!
//! ```text
//! Γ^a_{bc} = ½ g^{ad} (∂_b g_{dc} + ∂_c g_{db} − ∂_d g_{bc})
//! R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} − Γ^a_{de} Γ^e_{cb}
//! Ricci_{bd} = R^a_{bda},   R = g^{bd} Ricci_{bd}
//! ```
//!
//! so that agreement with the spinorial pipeline is a genuine cross-check
//! rather than a tautology. The Ricci tensor is the contraction of the
//! Riemann tensor on its *last* lower index; under this sign convention a
//! hyperbolic-plane block has positive scalar curvature, and the scalar
//! agrees with R = 6·C³ from the ð/∂ calculus. Indices are 0-based
//! positions into the coordinate list.

use symkernel::{Expr, Symbol};

use crate::error::GeometryError;
use crate::linalg::{adjugate, determinant};

/// Christoffel symbols, Riemann and Ricci tensors, and the scalar curvature
/// of a coordinate metric, computed exactly.
#[derive(Debug, Clone)]
pub struct CoordinateCurvature {
    christoffel: Vec<Vec<Vec<Expr>>>,
    riemann: Vec<Vec<Vec<Vec<Expr>>>>,
    ricci: Vec<Vec<Expr>>,
    scalar: Expr,
}

impl CoordinateCurvature {
    /// Γ^a_{bc} (0-based coordinate positions).
    pub fn christoffel(&self, a: usize, b: usize, c: usize) -> &Expr {
        &self.christoffel[a][b][c]
    }

    /// R^a_{bcd} (0-based coordinate positions).
    pub fn riemann(&self, a: usize, b: usize, c: usize, d: usize) -> &Expr {
        &self.riemann[a][b][c][d]
    }

    /// Ricci_{bd} = R^a_{bda} (0-based coordinate positions).
    pub fn ricci(&self, b: usize, d: usize) -> &Expr {
        &self.ricci[b][d]
    }

    /// The scalar curvature R = g^{bd} Ricci_{bd}.
    pub fn scalar_curvature(&self) -> &Expr {
        &self.scalar
    }
}

/// Computes [`CoordinateCurvature`] for a symmetric 4×4 metric matrix over
/// the given coordinates. The inverse metric is formed exactly as
/// adjugate/determinant.
///
/// Errors if the matrix is not symmetric entrywise or its determinant is
/// identically zero.
pub fn christoffel_oracle(
    g: &[[Expr; 4]; 4],
    coords: &[Symbol; 4],
) -> Result<CoordinateCurvature, GeometryError> {
    let n = 4usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if !g[i][j].equivalent(&g[j][i]) {
                return Err(GeometryError::AsymmetricMetric { row: i, col: j });
            }
        }
    }
    let rows: Vec<Vec<Expr>> = g.iter().map(|r| r.to_vec()).collect();
    let det = determinant(&rows);
    if det.is_zero() {
        return Err(GeometryError::SingularMetric);
    }
    let adj = adjugate(&rows);
    let mut inv = vec![vec![Expr::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            inv[i][j] = adj[i][j].try_div(&det)?;
        }
    }

    let d = |e: &Expr, k: usize| -> Result<Expr, GeometryError> {
        Ok(e.differentiate(&coords[k])?)
    };

    // Γ_{dbc} = ½ (∂_b g_{dc} + ∂_c g_{db} − ∂_d g_{bc}), then raise with g^{ad}.
    let half = Expr::ratio(1, 2);
    let mut lower = vec![vec![vec![Expr::zero(); n]; n]; n];
    for dd in 0..n {
        for b in 0..n {
            for c in 0..=b {
                let val = &half
                    * &(d(&g[dd][c], b)? + d(&g[dd][b], c)? - d(&g[b][c], dd)?);
                lower[dd][b][c] = val.clone();
                lower[dd][c][b] = val;
            }
        }
    }
    let mut christoffel = vec![vec![vec![Expr::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..=b {
                let mut sum = Expr::zero();
                for dd in 0..n {
                    if inv[a][dd].is_zero() || lower[dd][b][c].is_zero() {
                        continue;
                    }
                    sum += &inv[a][dd] * &lower[dd][b][c];
                }
                christoffel[a][b][c] = sum.clone();
                christoffel[a][c][b] = sum;
            }
        }
    }

    // R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} − Γ^a_{de} Γ^e_{cb},
    // antisymmetric in (c, d).
    let mut riemann = vec![vec![vec![vec![Expr::zero(); n]; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for dd in 0..c {
                    let mut val = d(&christoffel[a][dd][b], c)? - d(&christoffel[a][c][b], dd)?;
                    for e in 0..n {
                        if !christoffel[a][c][e].is_zero() && !christoffel[e][dd][b].is_zero() {
                            val += &christoffel[a][c][e] * &christoffel[e][dd][b];
                        }
                        if !christoffel[a][dd][e].is_zero() && !christoffel[e][c][b].is_zero() {
                            val -= &christoffel[a][dd][e] * &christoffel[e][c][b];
                        }
                    }
                    riemann[a][b][c][dd] = val.clone();
                    riemann[a][b][dd][c] = -val;
                }
            }
        }
    }

    // Ricci_{bd} = R^a_{bda}; symmetric for a Levi-Civita connection, so
    // computed for d ≤ b and mirrored.
    let mut ricci = vec![vec![Expr::zero(); n]; n];
    for b in 0..n {
        for dd in 0..=b {
            let mut sum = Expr::zero();
            for a in 0..n {
                sum += riemann[a][b][dd][a].clone();
            }
            ricci[b][dd] = sum.clone();
            ricci[dd][b] = sum;
        }
    }

    let mut scalar = Expr::zero();
    for b in 0..n {
        for dd in 0..n {
            if inv[b][dd].is_zero() || ricci[b][dd].is_zero() {
                continue;
            }
            scalar += &inv[b][dd] * &ricci[b][dd];
        }
    }

    Ok(CoordinateCurvature {
        christoffel,
        riemann,
        ricci,
        scalar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::PlebanskiMetric;
    use symkernel::Context;

    #[test]
    fn flat_double_null_metric_has_zero_curvature_oracle() {
        let mut ctx = Context::new();
        ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
        let m = PlebanskiMetric::flat(&ctx).unwrap();
        let g = m.metric_matrix();
        let chart = m.chart().clone();
        let cc = christoffel_oracle(&g, &chart).unwrap();
        assert!(
            cc.scalar_curvature().is_zero(),
            "flat metric must have zero scalar curvature"
        );
        for b in 0..4 {
            for d in 0..4 {
                assert!(cc.ricci(b, d).is_zero(), "flat Ricci component ({b},{d})");
            }
        }
    }

    #[test]
    fn hyperbolic_plane_block_pins_the_sign_convention() {
        // Product of a flat (q, p) block with the half-plane metric
        // y⁻²(dx² + dy²). The half-plane has Gauss curvature −1, so with
        // Ricci_{bd} = R^a_{bda} its scalar curvature is +2 and
        // Ricci = +(1/y²)·δ on the (x, y) block.
        let mut ctx = Context::new();
        ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
        let chart: [Symbol; 4] = ctx.chart().to_vec().try_into().unwrap();
        let y = Expr::var(&chart[3]);
        let conformal = Expr::one().try_div(&(&y * &y)).unwrap();
        let mut g = [
            [Expr::zero(), Expr::zero(), Expr::zero(), Expr::zero()],
            [Expr::zero(), Expr::zero(), Expr::zero(), Expr::zero()],
            [Expr::zero(), Expr::zero(), Expr::zero(), Expr::zero()],
            [Expr::zero(), Expr::zero(), Expr::zero(), Expr::zero()],
        ];
        g[0][0] = Expr::one();
        g[1][1] = Expr::one();
        g[2][2] = conformal.clone();
        g[3][3] = conformal.clone();
        let cc = christoffel_oracle(&g, &chart).unwrap();
        assert!(
            cc.scalar_curvature().equivalent(&Expr::from_int(2)),
            "half-plane block must have R = +2, got {}",
            cc.scalar_curvature()
        );
        assert!(
            cc.ricci(2, 2).equivalent(&conformal) && cc.ricci(3, 3).equivalent(&conformal),
            "half-plane Ricci block must equal +g restricted to (x, y)"
        );
        for b in 0..2 {
            for d in 0..4 {
                assert!(cc.ricci(b, d).is_zero(), "flat block Ricci ({b},{d})");
            }
        }
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let mut ctx = Context::new();
        ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
        let m = PlebanskiMetric::flat(&ctx).unwrap();
        let mut g = m.metric_matrix();
        g[0][1] = Expr::one();
        let err = christoffel_oracle(&g, &m.chart().clone()).unwrap_err();
        assert!(matches!(
            err,
            GeometryError::AsymmetricMetric { row: 0, col: 1 }
        ));
    }
}
