//! Shared fixtures: the worked example metrics defined inline, plus seeded
//! random ansatz metrics.

#![allow(dead_code)]

use plebanski_geometry::{ansatz_to_Q, AnsatzCoefficients, PlebanskiMetric};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symkernel::{Context, Expr};

/// A fresh context with the canonical chart (q, p, x, y).
pub fn ctx4() -> Context {
    let mut ctx = Context::new();
    ctx.coordinates(&["q", "p", "x", "y"])
        .expect("canonical chart declares cleanly");
    ctx
}

/// The double Kerr-Schild example with scalar curvature R = 24x:
/// Q^{1̇1̇} = −x³ + xy + 3P₀x + 3⁄2 N₀, Q^{1̇2̇} = −x²y + ½y² + 3P₀y − ½M₀,
/// Q^{2̇2̇} = −xy² − M₀x − 3N₀y.
pub fn dks_metric() -> (Context, PlebanskiMetric) {
    let mut ctx = ctx4();
    ctx.parameter("M0").unwrap();
    ctx.parameter("N0").unwrap();
    ctx.parameter("P0").unwrap();
    let q11 = ctx.parse("-x^3 + x*y + 3*P0*x + (3/2)*N0").unwrap();
    let q12 = ctx.parse("-x^2*y + (1/2)*y^2 + 3*P0*y - (1/2)*M0").unwrap();
    let q22 = ctx.parse("-x*y^2 - M0*x - 3*N0*y").unwrap();
    let m = PlebanskiMetric::new(&ctx, q11, q12, q22).unwrap();
    (ctx, m)
}

/// The two-parameter non-Einstein family
/// Q^{1̇1̇} = −x³ + B₀x² + 3P₀x − 3P₀B₀, Q^{1̇2̇} = −x²y + 3P₀y,
/// Q^{2̇2̇} = −xy² − B₀y², with independent symbolic B₀, P₀.
pub fn two_parameter_metric() -> (Context, PlebanskiMetric) {
    let mut ctx = ctx4();
    ctx.parameter("B0").unwrap();
    ctx.parameter("P0").unwrap();
    let q11 = ctx.parse("-x^3 + B0*x^2 + 3*P0*x - 3*P0*B0").unwrap();
    let q12 = ctx.parse("-x^2*y + 3*P0*y").unwrap();
    let q22 = ctx.parse("-x*y^2 - B0*y^2").unwrap();
    let m = PlebanskiMetric::new(&ctx, q11, q12, q22).unwrap();
    (ctx, m)
}

/// The Einstein family with one free function f(p) and B₀ = Λ/3 ≠ 0:
/// Q^{1̇1̇} = B₀x² − fqx − (f²q³ + f′q²)y + B₀⁻¹(f²q² + f′q),
/// Q^{1̇2̇} = B₀xy + fqy − B₀⁻¹f, Q^{2̇2̇} = B₀y².
pub fn einstein_metric() -> (Context, PlebanskiMetric) {
    let mut ctx = ctx4();
    let p = ctx.chart()[1].clone();
    ctx.nonzero_parameter("B0").unwrap();
    let f_sym = ctx.opaque_function("f", &p).unwrap();
    let f = Expr::var(&f_sym);
    let fp = f.differentiate(&p).unwrap();
    let b0 = ctx.parse("B0").unwrap();
    let q = ctx.parse("q").unwrap();
    let x = ctx.parse("x").unwrap();
    let y = ctx.parse("y").unwrap();
    let f2 = &f * &f;
    let s_coeff = &f2 * &q.powi(3).unwrap() + &fp * &q.powi(2).unwrap();
    let e11 = (&f2 * &q.powi(2).unwrap() + &fp * &q).try_div(&b0).unwrap();
    let q11 = &b0 * &x.powi(2).unwrap() - &(&f * &q) * &x - &s_coeff * &y + e11;
    let q12 = &(&b0 * &x) * &y + &(&f * &q) * &y - f.try_div(&b0).unwrap();
    let q22 = &b0 * &y.powi(2).unwrap();
    let m = PlebanskiMetric::new(&ctx, q11, q12, q22).unwrap();
    (ctx, m)
}

/// The constant-curvature Einstein metric: Q^{ȦḂ} = (Λ/3) p^Ȧ p^Ḃ.
/// Returns the context, the metric, and Λ.
pub fn constant_curvature_metric() -> (Context, PlebanskiMetric, Expr) {
    let mut ctx = ctx4();
    ctx.nonzero_parameter("Lambda").unwrap();
    let q11 = ctx.parse("(1/3)*Lambda*x^2").unwrap();
    let q12 = ctx.parse("(1/3)*Lambda*x*y").unwrap();
    let q22 = ctx.parse("(1/3)*Lambda*y^2").unwrap();
    let lambda = ctx.parse("Lambda").unwrap();
    let m = PlebanskiMetric::new(&ctx, q11, q12, q22).unwrap();
    (ctx, m, lambda)
}

/// A random polynomial of degree ≤ 2 in the q-coordinates with coefficients
/// in −2..=2.
pub fn random_q_polynomial(ctx: &Context, rng: &mut ChaCha8Rng) -> Expr {
    let chart = ctx.chart();
    let (q, p) = (Expr::var(&chart[0]), Expr::var(&chart[1]));
    let monomials = [
        Expr::one(),
        q.clone(),
        p.clone(),
        &q * &q,
        &q * &p,
        &p * &p,
    ];
    let mut out = Expr::zero();
    for mono in &monomials {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            out += Expr::from_int(c) * mono;
        }
    }
    out
}

/// A random metric from the quadratic-in-fibres family: all fifteen
/// coefficient functions are degree ≤ 2 polynomials in the q-coordinates
/// with small integer coefficients.
pub fn random_ansatz_metric(ctx: &Context, rng: &mut ChaCha8Rng) -> PlebanskiMetric {
    let mut next = || random_q_polynomial(ctx, rng);
    let a = [next(), next()];
    let b2 = [next(), next(), next()];
    let b0 = next();
    let c3 = [next(), next(), next(), next()];
    let c1 = [next(), next()];
    let e2 = [next(), next(), next()];
    let coeffs = AnsatzCoefficients::new(ctx, a, b2, b0, c3, c1, e2)
        .expect("random coefficients are q-polynomials by construction");
    ansatz_to_Q(&coeffs).expect("ansatz expansion of polynomial coefficients")
}
