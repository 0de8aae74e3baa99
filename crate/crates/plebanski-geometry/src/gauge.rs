//! Coordinate freedom of the adapted double-null form.
//!
//! The metric shape is preserved by exactly the transformations
//!
//! ```text
//! q′_Ȧ = q′_Ȧ(q_Ḃ),      p′^Ȧ = D⁻¹_Ḃ^Ȧ p^Ḃ + σ^Ȧ(q_Ḃ)
//! ```
//!
//! with D_Ȧ^Ḃ := ∂q′_Ȧ/∂q_Ḃ and Δ := det(∂q′_Ȧ/∂q_Ḃ) ≠ 0. Under such a
//! transformation the metric functions pick up
//!
//! ```text
//! Q′^{ȦḂ} = D⁻¹_Ṙ^Ȧ D⁻¹_Ṡ^Ḃ Q^{ṘṠ} + D⁻¹_Ṙ^{(Ȧ} ∂p′^{Ḃ)}/∂q_Ṙ
//! ```
//!
//! and the fifteen coefficient functions of the cubic ansatz transform by
//! closed-form laws implemented in [`transform_coefficients`]. General
//! polynomial q-maps have no polynomial inverse the kernel could synthesise,
//! so a transform is constructed from the forward q-map *and* a
//! caller-supplied inverse, which is verified by composing both ways. The
//! new chart reuses the same four coordinate symbols, reinterpreted.

use std::collections::BTreeMap;

use spinor_core::{IndexSpec, SpinorObject};
use symkernel::{Context, Expr};

use crate::ansatz::AnsatzCoefficients;
use crate::error::GeometryError;
use crate::metric::PlebanskiMetric;

/// An invertible q-map together with a p-shift, plus everything derived from
/// them: the matrices D_Ȧ^Ḃ and D⁻¹_Ȧ^Ḃ, the determinant Δ, and the scalar
/// h̃ with 2h̃ := ∂σ^Ṙ/∂q′^Ṙ.
#[derive(Debug, Clone)]
pub struct GaugeTransform {
    ctx: Context,
    q_forward: [Expr; 2],
    sigma: [Expr; 2],
    q_inverse: [Expr; 2],
    d_low: [[Expr; 2]; 2],
    d_inv: [[Expr; 2]; 2],
    delta: Expr,
    h_tilde: Expr,
}

impl GaugeTransform {
    /// Builds a transform from the forward q-map q′^Ȧ(q), the shift σ^Ȧ(q),
    /// and the inverse q-map q^Ȧ(q′) written in the same two symbols
    /// (reinterpreted as the new chart).
    ///
    /// Verifies that all pieces are p-independent, that the two maps invert
    /// each other exactly both ways, and that Δ ≠ 0; asserts the identities
    /// Δ = ½ D_{ȦḂ}D^{ȦḂ} and D·D⁻¹ = 1.
    pub fn new(
        ctx: &Context,
        q_forward: [Expr; 2],
        sigma: [Expr; 2],
        q_inverse: [Expr; 2],
    ) -> Result<Self, GeometryError> {
        let chart = ctx.chart();
        if chart.len() != 4 {
            return Err(GeometryError::ChartSize { found: chart.len() });
        }
        let (qs, ps) = (&chart[0], &chart[1]);

        let pieces: [(&str, &Expr); 6] = [
            ("q′^1", &q_forward[0]),
            ("q′^2", &q_forward[1]),
            ("σ^1", &sigma[0]),
            ("σ^2", &sigma[1]),
            ("inverse q^1", &q_inverse[0]),
            ("inverse q^2", &q_inverse[1]),
        ];
        for (name, e) in pieces {
            for p_coord in &chart[2..4] {
                if !e.differentiate(p_coord)?.is_zero() {
                    return Err(GeometryError::TransformDependsOnP {
                        piece: name.to_string(),
                    });
                }
            }
        }

        // D_Ȧ^Ḃ = ∂q′_Ȧ/∂q_Ḃ in components: lowering v_1̇ = v^2̇, v_2̇ = −v^1̇
        // on both the map and the coordinates gives
        //   D_1̇^1̇ = ∂q′^2/∂p,  D_1̇^2̇ = −∂q′^2/∂q,
        //   D_2̇^1̇ = −∂q′^1/∂p, D_2̇^2̇ = ∂q′^1/∂q.
        let dq = |e: &Expr| -> Result<Expr, GeometryError> { Ok(e.differentiate(qs)?) };
        let dp = |e: &Expr| -> Result<Expr, GeometryError> { Ok(e.differentiate(ps)?) };
        let d_low = [
            [dp(&q_forward[1])?, -dq(&q_forward[1])?],
            [-dp(&q_forward[0])?, dq(&q_forward[0])?],
        ];
        let delta = &d_low[0][0] * &d_low[1][1] - &d_low[0][1] * &d_low[1][0];
        if delta.is_zero() {
            return Err(GeometryError::DegenerateTransform);
        }

        // Two-way composition check: each map undoes the other exactly.
        let compose = |outer: &[Expr; 2], inner: &[Expr; 2]| -> Result<[Expr; 2], GeometryError> {
            let mut bind = BTreeMap::new();
            bind.insert(qs.clone(), inner[0].clone());
            bind.insert(ps.clone(), inner[1].clone());
            Ok([outer[0].substitute(&bind)?, outer[1].substitute(&bind)?])
        };
        let id = [Expr::var(qs), Expr::var(ps)];
        let fwd_of_inv = compose(&q_forward, &q_inverse)?;
        if !fwd_of_inv[0].equivalent(&id[0]) || !fwd_of_inv[1].equivalent(&id[1]) {
            return Err(GeometryError::InverseMismatch {
                direction: "forward∘inverse",
            });
        }
        let inv_of_fwd = compose(&q_inverse, &q_forward)?;
        if !inv_of_fwd[0].equivalent(&id[0]) || !inv_of_fwd[1].equivalent(&id[1]) {
            return Err(GeometryError::InverseMismatch {
                direction: "inverse∘forward",
            });
        }

        // D⁻¹_Ȧ^Ḃ = Δ⁻¹ ∂q′^Ḃ/∂q^Ȧ.
        let d_inv = [
            [
                dq(&q_forward[0])?.try_div(&delta)?,
                dq(&q_forward[1])?.try_div(&delta)?,
            ],
            [
                dp(&q_forward[0])?.try_div(&delta)?,
                dp(&q_forward[1])?.try_div(&delta)?,
            ],
        ];
        for a in 0..2 {
            for c in 0..2 {
                let entry = &d_low[a][0] * &d_inv[0][c] + &d_low[a][1] * &d_inv[1][c];
                let expected = if a == c { Expr::one() } else { Expr::zero() };
                assert!(
                    entry.equivalent(&expected),
                    "D·D⁻¹ must be the identity at ({a}, {c})"
                );
            }
        }
        let d_low_s = SpinorObject::from_fn(vec![IndexSpec::dlow(), IndexSpec::dup()], |idx| {
            d_low[(idx[0] - 1) as usize][(idx[1] - 1) as usize].clone()
        });
        let d_all_up = d_low_s.raise_lower(0);
        let d_all_low = d_low_s.raise_lower(1);
        let pairing = d_all_low
            .outer(&d_all_up)
            .contract(0, 2)
            .and_then(|t| t.contract(0, 1))
            .expect("index families and variances are fixed by construction");
        assert!(
            (Expr::ratio(1, 2) * pairing.scalar_value())
                .equivalent(&delta),
            "Δ must equal ½ D_ȦḂ D^ȦḂ"
        );

        // 2h̃ = ∂σ^Ṙ/∂q′^Ṙ = Δ⁻¹ D_Ṙ^Ṡ ∂σ^Ṙ/∂q^Ṡ.
        let mut two_h = Expr::zero();
        two_h += &d_low[0][0] * &dq(&sigma[0])?;
        two_h += &d_low[0][1] * &dp(&sigma[0])?;
        two_h += &d_low[1][0] * &dq(&sigma[1])?;
        two_h += &d_low[1][1] * &dp(&sigma[1])?;
        let h_tilde = two_h.try_div(&(Expr::from_int(2) * &delta))?;

        Ok(Self {
            ctx: ctx.clone(),
            q_forward,
            sigma,
            q_inverse,
            d_low,
            d_inv,
            delta,
            h_tilde,
        })
    }

    /// The identity transform: q′ = q, σ = 0.
    pub fn identity(ctx: &Context) -> Result<Self, GeometryError> {
        let chart = ctx.chart();
        if chart.len() != 4 {
            return Err(GeometryError::ChartSize { found: chart.len() });
        }
        let id = [Expr::var(&chart[0]), Expr::var(&chart[1])];
        Self::new(ctx, id.clone(), [Expr::zero(), Expr::zero()], id)
    }

    /// The symbol context of the transform.
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// The forward q-map (q′^1̇, q′^2̇) as functions of the old chart.
    pub fn q_forward(&self) -> &[Expr; 2] {
        &self.q_forward
    }

    /// The p-shift (σ^1̇, σ^2̇) as functions of the old chart.
    pub fn sigma(&self) -> &[Expr; 2] {
        &self.sigma
    }

    /// The inverse q-map (q^1̇, q^2̇) written in the new chart's symbols.
    pub fn q_inverse(&self) -> &[Expr; 2] {
        &self.q_inverse
    }

    /// D_Ȧ^Ḃ (1-based dotted indices).
    pub fn d(&self, a: u8, b: u8) -> &Expr {
        &self.d_low[(a - 1) as usize][(b - 1) as usize]
    }

    /// D⁻¹_Ȧ^Ḃ (1-based dotted indices).
    pub fn d_inverse(&self, a: u8, b: u8) -> &Expr {
        &self.d_inv[(a - 1) as usize][(b - 1) as usize]
    }

    /// Δ = det(∂q′_Ȧ/∂q_Ḃ).
    pub fn delta(&self) -> &Expr {
        &self.delta
    }

    /// h̃ with 2h̃ = ∂σ^Ṙ/∂q′^Ṙ.
    pub fn h_tilde(&self) -> &Expr {
        &self.h_tilde
    }

    /// The full four-coordinate forward map (q′^1̇, q′^2̇, p′^1̇, p′^2̇) as
    /// functions of the old chart.
    pub fn forward_map(&self) -> [Expr; 4] {
        let chart = self.ctx.chart();
        let (x, y) = (Expr::var(&chart[2]), Expr::var(&chart[3]));
        let pprime = |a: usize| -> Expr {
            &self.d_inv[0][a] * &x + &self.d_inv[1][a] * &y + &self.sigma[a]
        };
        [
            self.q_forward[0].clone(),
            self.q_forward[1].clone(),
            pprime(0),
            pprime(1),
        ]
    }

    /// The full four-coordinate inverse map (q^1̇, q^2̇, p^1̇, p^2̇) as
    /// functions of the new chart: p^Ċ = D_Ȧ^Ċ (p′^Ȧ − σ^Ȧ) with D and σ
    /// re-expressed through the inverse q-map.
    pub fn inverse_map(&self) -> Result<[Expr; 4], GeometryError> {
        let chart = self.ctx.chart();
        let mut bind = BTreeMap::new();
        bind.insert(chart[0].clone(), self.q_inverse[0].clone());
        bind.insert(chart[1].clone(), self.q_inverse[1].clone());
        let reexpress = |e: &Expr| -> Result<Expr, GeometryError> { Ok(e.substitute(&bind)?) };
        let pv = [Expr::var(&chart[2]), Expr::var(&chart[3])];
        let mut diff = [Expr::zero(), Expr::zero()];
        for a in 0..2 {
            diff[a] = &pv[a] - &reexpress(&self.sigma[a])?;
        }
        let mut old_p = [Expr::zero(), Expr::zero()];
        for c in 0..2 {
            let mut sum = Expr::zero();
            for a in 0..2 {
                sum += reexpress(&self.d_low[a][c])? * &diff[a];
            }
            old_p[c] = sum;
        }
        Ok([
            self.q_inverse[0].clone(),
            self.q_inverse[1].clone(),
            old_p[0].clone(),
            old_p[1].clone(),
        ])
    }
}

fn check_same_chart(a: &Context, b: &Context) -> Result<(), GeometryError> {
    if a.chart() != b.chart() {
        return Err(GeometryError::MismatchedCharts);
    }
    Ok(())
}

/// Applies a [`GaugeTransform`] to a metric: computes
/// Q′^{ȦḂ} = D⁻¹_Ṙ^Ȧ D⁻¹_Ṡ^Ḃ Q^{ṘṠ} + D⁻¹_Ṙ^{(Ȧ} ∂p′^{Ḃ)}/∂q_Ṙ in the old
/// chart, then re-expresses the result in the new chart through the inverse
/// map. The derivative ∂/∂q_Ṙ acts as ∂/∂q_1̇ = ∂_p, ∂/∂q_2̇ = −∂_q at fixed
/// p^Ȧ.
pub fn gauge_transform(
    m: &PlebanskiMetric,
    t: &GaugeTransform,
) -> Result<PlebanskiMetric, GeometryError> {
    check_same_chart(m.context(), t.context())?;
    let chart = m.chart();
    let (qs, ps) = (&chart[0], &chart[1]);
    let forward = t.forward_map();
    let pprime = [&forward[2], &forward[3]];
    // ∂e/∂q_Ṙ for Ṙ = 1̇, 2̇ (1-based).
    let dql = |e: &Expr, r: usize| -> Result<Expr, GeometryError> {
        Ok(match r {
            1 => e.differentiate(ps)?,
            _ => -e.differentiate(qs)?,
        })
    };

    let mut q_old = [Expr::zero(), Expr::zero(), Expr::zero()];
    let slot = |a: usize, b: usize| a + b;
    for a in 0..2usize {
        for b in a..2usize {
            let mut val = Expr::zero();
            for r in 0..2 {
                for s in 0..2 {
                    let q = m.q_upper(r as u8 + 1, s as u8 + 1);
                    if q.is_zero() {
                        continue;
                    }
                    val += &(t.d_inv[r][a].clone() * &t.d_inv[s][b]) * q;
                }
            }
            let half = Expr::ratio(1, 2);
            for r in 0..2 {
                val += &half
                    * &(&t.d_inv[r][a] * &dql(pprime[b], r + 1)?
                        + &t.d_inv[r][b] * &dql(pprime[a], r + 1)?);
            }
            q_old[slot(a, b)] = val;
        }
    }

    let inverse = t.inverse_map()?;
    let mut bind = BTreeMap::new();
    for (sym, e) in chart.iter().zip(inverse.iter()) {
        bind.insert(sym.clone(), e.clone());
    }
    let q_new = [
        q_old[0].substitute(&bind)?,
        q_old[1].substitute(&bind)?,
        q_old[2].substitute(&bind)?,
    ];
    PlebanskiMetric::new(m.context(), q_new[0].clone(), q_new[1].clone(), q_new[2].clone())
}

/// Checks the defining property of the transformation: pulling the new
/// metric back along the forward coordinate map reproduces the old metric
/// matrix entrywise, Jᵀ G′(φ(x)) J = G(x).
pub fn pullback_matches(
    m: &PlebanskiMetric,
    t: &GaugeTransform,
) -> Result<bool, GeometryError> {
    let m_new = gauge_transform(m, t)?;
    let g_old = m.metric_matrix();
    let g_new = m_new.metric_matrix();
    let chart = m.chart();
    let phi = t.forward_map();
    let mut bind = BTreeMap::new();
    for (sym, e) in chart.iter().zip(phi.iter()) {
        bind.insert(sym.clone(), e.clone());
    }
    let mut g_new_at_phi = vec![vec![Expr::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            g_new_at_phi[i][j] = g_new[i][j].substitute(&bind)?;
        }
    }
    let mut jac = vec![vec![Expr::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            jac[i][j] = phi[i].differentiate(&chart[j])?;
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            let mut pulled = Expr::zero();
            for k in 0..4 {
                for l in 0..4 {
                    if jac[k][i].is_zero() || jac[l][j].is_zero() || g_new_at_phi[k][l].is_zero() {
                        continue;
                    }
                    pulled += &(&jac[k][i] * &g_new_at_phi[k][l]) * &jac[l][j];
                }
            }
            if !pulled.equivalent(&g_old[i][j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Applies the closed-form transformation laws of the fifteen ansatz
/// coefficient functions directly:
///
/// ```text
/// A′^Ṅ    = Δ D⁻¹_Ṁ^Ṅ A^Ṁ
/// B′      = B + 2 D_Ṅ^Ṁ σ^Ṅ A_Ṁ
/// Δ B′_{ṄẊ} = D_Ẋ^Ḃ D_Ṅ^Ṙ B_{ṘḂ} − 2Δ A_Ṙ σ_(Ẋ D_Ṅ)^Ṙ
/// C′^Ḃ    = D⁻¹_Ṡ^Ḃ C^Ṡ − ⅔ ∂lnΔ/∂q′_Ḃ − 2B′σ^Ḃ − 4⁄3 σ_Ṅ B′^{ṄḂ} + 8⁄3 A′_Ṅ σ^Ṅ σ^Ḃ
/// C′^{ȦḂṘ} = Δ D⁻¹D⁻¹D⁻¹ C + D⁻¹_Ṡ^{(Ȧ} D⁻¹_Ṁ^Ḃ ∂²q′^{Ṙ)}/∂q_Ṡ∂q_Ṁ − A′^{(Ȧ}σ^Ḃσ^{Ṙ)} − B′^{(ȦḂ}σ^{Ṙ)}
/// E′^{ȦḂ} = D⁻¹D⁻¹E + D⁻¹_Ṙ^{(Ȧ}∂σ^{Ḃ)}/∂q_Ṙ − C′^{(Ȧ}σ^{Ḃ)} − B′σ^Ȧσ^Ḃ
///           + A′_Ṅσ^Ṅ σ^Ȧσ^Ḃ − C′^{ṄȦḂ}σ_Ṅ − B′^{Ṅ(Ȧ}σ^{Ḃ)}σ_Ṅ
/// ```
///
/// (∂lnΔ/∂q′_Ḃ is expanded log-free as Δ⁻¹ D⁻¹_Ṡ^Ḃ ∂Δ/∂q_Ṡ.) Every law is
/// evaluated in the old chart and the result re-expressed in the new chart
/// through the inverse q-map. Transforming a metric and re-reading its
/// coefficients must agree with this function composed with the coordinate
/// change; that agreement is the correctness test for both paths.
pub fn transform_coefficients(
    c: &AnsatzCoefficients,
    t: &GaugeTransform,
) -> Result<AnsatzCoefficients, GeometryError> {
    check_same_chart(c.context(), t.context())?;
    let ctx = c.context();
    let chart = ctx.chart();
    let (qs, ps) = (&chart[0], &chart[1]);
    let lower = |v: &[Expr; 2]| -> [Expr; 2] { [v[1].clone(), -&v[0]] };
    let d_low = &t.d_low;
    let d_inv = &t.d_inv;
    let delta = &t.delta;
    let sigma = &t.sigma;
    let sigma_low = lower(sigma);

    let a_up = [c.a_spinor().get(&[1]).clone(), c.a_spinor().get(&[2]).clone()];
    let a_low = lower(&a_up);
    let c1_up = [
        c.c1_spinor().get(&[1]).clone(),
        c.c1_spinor().get(&[2]).clone(),
    ];
    let b2s = c.b2_spinor();
    let b_up = |n: usize, m: usize| -> Expr { b2s.get(&[n as u8 + 1, m as u8 + 1]).clone() };
    let e2s = c.e2_spinor();
    let e_up = |n: usize, m: usize| -> Expr { e2s.get(&[n as u8 + 1, m as u8 + 1]).clone() };
    // Double-lowered symmetric rank-2: X_{1̇1̇} = X^{2̇2̇}, X_{1̇2̇} = −X^{1̇2̇},
    // X_{2̇2̇} = X^{1̇1̇}.
    let b_low = |n: usize, m: usize| -> Expr {
        match (n, m) {
            (0, 0) => b_up(1, 1),
            (1, 1) => b_up(0, 0),
            _ => -b_up(0, 1),
        }
    };

    // (a) A′^Ṅ = Δ D⁻¹_Ṁ^Ṅ A^Ṁ.
    let mut a_prime = [Expr::zero(), Expr::zero()];
    for n in 0..2 {
        let mut sum = Expr::zero();
        for m in 0..2 {
            sum += &d_inv[m][n] * &a_up[m];
        }
        a_prime[n] = delta * &sum;
    }
    let a_prime_low = lower(&a_prime);

    // (b) B′ = B + 2 D_Ṅ^Ṁ σ^Ṅ A_Ṁ.
    let mut b_prime = c.b_scalar().clone();
    for n in 0..2 {
        for m in 0..2 {
            b_prime += Expr::from_int(2) * &(&d_low[n][m] * &(&sigma[n] * &a_low[m]));
        }
    }

    // (c) B′_{ṄẊ} = Δ⁻¹ D_Ṅ^Ṙ D_Ẋ^Ḃ B_{ṘḂ} − A_Ṙ (σ_Ẋ D_Ṅ^Ṙ + σ_Ṅ D_Ẋ^Ṙ).
    let ad: [Expr; 2] = {
        let mut out = [Expr::zero(), Expr::zero()];
        for n in 0..2 {
            let mut sum = Expr::zero();
            for r in 0..2 {
                sum += &d_low[n][r] * &a_low[r];
            }
            out[n] = sum;
        }
        out
    };
    let mut b_prime_low = [[Expr::zero(), Expr::zero()], [Expr::zero(), Expr::zero()]];
    for n in 0..2 {
        for x in n..2 {
            let mut m1 = Expr::zero();
            for r in 0..2 {
                for b in 0..2 {
                    m1 += &(&d_low[n][r] * &d_low[x][b]) * &b_low(r, b);
                }
            }
            let val = m1.try_div(delta)? - (&sigma_low[x] * &ad[n] + &sigma_low[n] * &ad[x]);
            b_prime_low[n][x] = val.clone();
            b_prime_low[x][n] = val;
        }
    }
    // Raise both indices: B′^{1̇1̇} = B′_{2̇2̇}, B′^{1̇2̇} = −B′_{1̇2̇}, B′^{2̇2̇} = B′_{1̇1̇}.
    let b2_prime = [
        b_prime_low[1][1].clone(),
        -&b_prime_low[0][1],
        b_prime_low[0][0].clone(),
    ];
    let b2_prime_up = |n: usize, m: usize| -> Expr { b2_prime[n + m].clone() };

    // (d) C′^Ḃ with ∂lnΔ/∂q′_Ḃ = Δ⁻¹ D⁻¹_Ṡ^Ḃ ∂Δ/∂q_Ṡ and
    // ∂/∂q_1̇ = ∂_p, ∂/∂q_2̇ = −∂_q.
    let d_delta_low = [delta.differentiate(ps)?, -delta.differentiate(qs)?];
    let a_prime_sigma = &a_prime_low[0] * &sigma[0] + &a_prime_low[1] * &sigma[1];
    let mut c1_prime = [Expr::zero(), Expr::zero()];
    for b in 0..2 {
        let mut val = Expr::zero();
        for s in 0..2 {
            val += &d_inv[s][b] * &c1_up[s];
            val -= Expr::ratio(2, 3) * &(&d_inv[s][b] * &d_delta_low[s]).try_div(delta)?;
            val -= Expr::ratio(4, 3) * &(&sigma_low[s] * &b2_prime_up(s, b));
        }
        val -= Expr::from_int(2) * &(&b_prime * &sigma[b]);
        val += Expr::ratio(8, 3) * &(&a_prime_sigma * &sigma[b]);
        c1_prime[b] = val;
    }

    // (e) C′^{ȦḂṘ}: built with explicit index algebra and symmetrised once.
    let dup = IndexSpec::dup;
    let d_inv_s = SpinorObject::from_fn(vec![IndexSpec::dlow(), dup()], |idx| {
        d_inv[(idx[0] - 1) as usize][(idx[1] - 1) as usize].clone()
    });
    let c3s = c.c3_spinor();
    let term1 = {
        let s1 = d_inv_s.outer(&c3s).contract(0, 2);
        let s2 = s1.and_then(|t1| d_inv_s.outer(&t1).contract(0, 3));
        let s3 = s2.and_then(|t2| d_inv_s.outer(&t2).contract(0, 4));
        s3.expect("cubic transformation contraction pattern is fixed")
            .scale(delta)
    };
    // Hessian ∂²q′^Ṙ/∂q_Ṡ∂q_Ṁ, all indices up (derivatives along lowered
    // coordinates carry upper valence).
    let dql = |e: &Expr, r: u8| -> Expr {
        match r {
            1 => e.differentiate(ps),
            _ => e.differentiate(qs).map(|d| -d),
        }
        .expect("q-coordinates are differentiable symbols")
    };
    let q_fwd = t.q_forward.clone();
    let hessian = SpinorObject::from_fn(vec![dup(), dup(), dup()], |idx| {
        dql(&dql(&q_fwd[(idx[0] - 1) as usize], idx[1]), idx[2])
    });
    let term2 = {
        let s1 = d_inv_s.outer(&hessian).contract(0, 3);
        s1.and_then(|t1| d_inv_s.outer(&t1).contract(0, 4))
            .expect("Hessian contraction pattern is fixed")
    };
    let sigma_s = SpinorObject::vector(dup(), sigma[0].clone(), sigma[1].clone());
    let a_prime_s = SpinorObject::vector(dup(), a_prime[0].clone(), a_prime[1].clone());
    let term3 = a_prime_s
        .outer(&sigma_s)
        .outer(&sigma_s)
        .scale(&Expr::from_int(-1));
    let b2_prime_s = SpinorObject::from_fn(vec![dup(), dup()], |idx| {
        b2_prime_up((idx[0] - 1) as usize, (idx[1] - 1) as usize)
    });
    let term4 = b2_prime_s.outer(&sigma_s).scale(&Expr::from_int(-1));
    let c3_prime_s = term1
        .add(&term2)
        .and_then(|s| s.add(&term3))
        .and_then(|s| s.add(&term4))
        .and_then(|s| s.symmetrize(&[0, 1, 2]))
        .expect("all cubic terms share the rank-3 upper dotted spec")
        .with_symmetry(vec![0, 1, 2]);
    let c3_prime = [
        c3_prime_s.get(&[1, 1, 1]).clone(),
        c3_prime_s.get(&[1, 1, 2]).clone(),
        c3_prime_s.get(&[1, 2, 2]).clone(),
        c3_prime_s.get(&[2, 2, 2]).clone(),
    ];

    // (f) E′^{ȦḂ}, term by term.
    let sigma_low_s = SpinorObject::vector(IndexSpec::dlow(), sigma_low[0].clone(), sigma_low[1].clone());
    let c3_sigma = c3_prime_s
        .outer(&sigma_low_s)
        .contract(0, 3)
        .expect("C′ has upper dotted indices to pair with σ_Ṅ");
    let mut e2_prime = [Expr::zero(), Expr::zero(), Expr::zero()];
    let mut g_vec = [Expr::zero(), Expr::zero()];
    for a in 0..2 {
        let mut sum = Expr::zero();
        for n in 0..2 {
            sum += &b2_prime_up(n, a) * &sigma_low[n];
        }
        g_vec[a] = sum;
    }
    for a in 0..2usize {
        for b in a..2usize {
            let mut val = Expr::zero();
            for r in 0..2 {
                for s in 0..2 {
                    val += &(&d_inv[r][a] * &d_inv[s][b]) * &e_up(r, s);
                }
            }
            let half = Expr::ratio(1, 2);
            for r in 0..2 {
                val += &half
                    * &(&d_inv[r][a] * &dql(&sigma[b], r as u8 + 1)
                        + &d_inv[r][b] * &dql(&sigma[a], r as u8 + 1));
            }
            val -= &half * &(&c1_prime[a] * &sigma[b] + &c1_prime[b] * &sigma[a]);
            val -= &b_prime * &(&sigma[a] * &sigma[b]);
            val += &a_prime_sigma * &(&sigma[a] * &sigma[b]);
            val -= c3_sigma.get(&[a as u8 + 1, b as u8 + 1]).clone();
            val -= &half * &(&g_vec[a] * &sigma[b] + &g_vec[b] * &sigma[a]);
            e2_prime[a + b] = val;
        }
    }

    // Re-express every coefficient in the new chart via the inverse q-map.
    let mut bind = BTreeMap::new();
    bind.insert(qs.clone(), t.q_inverse[0].clone());
    bind.insert(ps.clone(), t.q_inverse[1].clone());
    let re = |e: &Expr| -> Result<Expr, GeometryError> { Ok(e.substitute(&bind)?) };
    AnsatzCoefficients::new(
        ctx,
        [re(&a_prime[0])?, re(&a_prime[1])?],
        [re(&b2_prime[0])?, re(&b2_prime[1])?, re(&b2_prime[2])?],
        re(&b_prime)?,
        [
            re(&c3_prime[0])?,
            re(&c3_prime[1])?,
            re(&c3_prime[2])?,
            re(&c3_prime[3])?,
        ],
        [re(&c1_prime[0])?, re(&c1_prime[1])?],
        [re(&e2_prime[0])?, re(&e2_prime[1])?, re(&e2_prime[2])?],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> Context {
        let mut ctx = Context::new();
        ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
        ctx
    }

    #[test]
    fn identity_transform_has_unit_invariants() {
        let ctx = ctx4();
        let t = GaugeTransform::identity(&ctx).unwrap();
        assert!(t.delta().equivalent(&Expr::one()), "Δ = 1 for the identity");
        assert!(t.h_tilde().is_zero(), "h̃ = 0 for the identity");
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let expected = if a == b { Expr::one() } else { Expr::zero() };
                assert!(t.d(a, b).equivalent(&expected));
                assert!(t.d_inverse(a, b).equivalent(&expected));
            }
        }
    }

    #[test]
    fn wrong_inverse_is_rejected() {
        let ctx = ctx4();
        let q = ctx.parse("q").unwrap();
        let p = ctx.parse("p").unwrap();
        let two_q = ctx.parse("2*q").unwrap();
        let err = GaugeTransform::new(
            &ctx,
            [two_q, p.clone()],
            [Expr::zero(), Expr::zero()],
            [q, p],
        )
        .unwrap_err();
        assert!(matches!(err, GeometryError::InverseMismatch { .. }));
    }

    #[test]
    fn degenerate_q_map_is_rejected() {
        let ctx = ctx4();
        let q = ctx.parse("q").unwrap();
        let err = GaugeTransform::new(
            &ctx,
            [q.clone(), q.clone()],
            [Expr::zero(), Expr::zero()],
            [q.clone(), q],
        )
        .unwrap_err();
        assert!(matches!(err, GeometryError::DegenerateTransform));
    }
}
