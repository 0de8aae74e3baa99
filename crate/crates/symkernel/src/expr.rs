//! Exact symbolic expressions: quotients of multivariate polynomials plus
//! top-level linear combinations of logarithms of rational arguments.
//!
//! # Normalization strategy
//!
//! Fractions are normalized **lazily**: after every operation the common
//! monomial content of numerator and denominator is cancelled and the
//! denominator is rescaled to leading coefficient one, but no multivariate
//! GCD is ever computed. Zero-testing ([`Expr::is_zero`]) instead clears
//! denominators and expands to canonical monomial form, which is an exact
//! decision procedure at any degree.
//!
//! # Logarithms
//!
//! [`Expr::ln`] builds the logarithm of a log-free expression; sums keep
//! logarithmic terms as `coefficient * ln(argument)` with canonicalized
//! rational arguments, merged by argument. Differentiation eliminates the
//! logarithm (`d ln u = du/u`). Products or quotients of two logarithmic
//! expressions are outside the supported algebra and panic; the checked
//! entry points ([`Expr::try_div`], [`Expr::ln`]) return errors instead
//! where the operation is merely invalid rather than a programming error.
//!
//! Zero-testing of logarithmic combinations compares canonicalized
//! arguments syntactically; arguments that are equal in value but arrive in
//! genuinely different rational forms (after monomial-content and scalar
//! normalization) would be treated as independent. No computation in this
//! crate's dependents constructs such a pair.

use crate::coeff::Coeff;
use crate::error::KernelError;
use crate::poly::Poly;
use crate::symbol::Symbol;
use num_rational::BigRational;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A quotient of polynomials, kept with nonzero denominator and lazy
/// (content-only) normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Rat {
    num: Poly,
    den: Poly,
}

impl Rat {
    fn zero() -> Self {
        Rat {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn one() -> Self {
        Rat {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    fn from_poly(p: Poly) -> Self {
        Rat {
            num: p,
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancel the common monomial content of numerator and denominator and
    /// scale the denominator to leading coefficient one. Value-preserving.
    fn normalize(mut self) -> Self {
        debug_assert!(!self.den.is_zero(), "denominator must be nonzero");
        if self.num.is_zero() {
            return Rat::zero();
        }
        if !self.den.is_one() {
            let (num, den) = Poly::unify(&self.num, &self.den);
            let mn = num.min_exponents();
            let md = den.min_exponents();
            let common: Vec<u16> = mn.iter().zip(&md).map(|(&a, &b)| a.min(b)).collect();
            if common.iter().any(|&e| e > 0) {
                self.num = num.divide_monomial(&common);
                self.den = den.divide_monomial(&common);
            } else {
                self.num = num;
                self.den = den;
            }
            let lc = self.den.leading_coeff();
            if !lc.is_one() {
                let inv = lc.inv();
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
        }
        self
    }

    fn add(&self, rhs: &Rat) -> Rat {
        let num;
        let den;
        if self.den.is_one() && rhs.den.is_one() {
            num = self.num.add(&rhs.num);
            den = Poly::one();
        } else if self.den == rhs.den {
            num = self.num.add(&rhs.num);
            den = self.den.clone();
        } else {
            num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            den = self.den.mul(&rhs.den);
        }
        Rat { num, den }.normalize()
    }

    fn neg(&self) -> Rat {
        Rat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Rat) -> Rat {
        Rat {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
        .normalize()
    }

    /// Reciprocal; caller guarantees nonzero numerator.
    fn recip(&self) -> Rat {
        debug_assert!(!self.num.is_zero());
        Rat {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalize()
    }

    fn fmt_with_parens(&self) -> String {
        if self.den.is_one() {
            format!("{}", self.num)
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

/// One logarithmic term `coeff * ln(arg)`.
#[derive(Debug, Clone)]
struct LogTerm {
    coeff: Rat,
    arg: Rat,
}

/// An exact symbolic expression.
#[derive(Debug, Clone)]
pub struct Expr {
    rat: Rat,
    logs: Vec<LogTerm>,
}

impl Expr {
    // ----- constructors ---------------------------------------------------

    /// The zero expression.
    pub fn zero() -> Self {
        Expr {
            rat: Rat::zero(),
            logs: Vec::new(),
        }
    }

    /// The unit expression.
    pub fn one() -> Self {
        Expr {
            rat: Rat::one(),
            logs: Vec::new(),
        }
    }

    /// An integer constant.
    pub fn from_int(n: i64) -> Self {
        Expr::constant(Coeff::from_int(n))
    }

    /// The exact fraction `n / d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Expr::constant(Coeff::from_ratio(n, d))
    }

    /// A coefficient constant.
    pub fn constant(c: Coeff) -> Self {
        Expr {
            rat: Rat::from_poly(Poly::constant(c)),
            logs: Vec::new(),
        }
    }

    /// The formal square root of two.
    pub fn sqrt2() -> Self {
        Expr::constant(Coeff::sqrt2())
    }

    /// A declared symbol as an expression.
    pub fn var(sym: &Symbol) -> Self {
        Expr {
            rat: Rat::from_poly(Poly::var(sym)),
            logs: Vec::new(),
        }
    }

    fn from_rat(rat: Rat) -> Self {
        Expr {
            rat,
            logs: Vec::new(),
        }
    }

    /// The natural logarithm of a log-free, nonzero expression. The
    /// argument is canonicalized; `ln` of (syntactic) one is zero.
    pub fn ln(&self) -> Result<Expr, KernelError> {
        if !self.logs.is_empty() {
            return Err(KernelError::NestedLog);
        }
        if self.rat.is_zero() {
            return Err(KernelError::LogOfZero);
        }
        let arg = self.rat.clone().normalize();
        if arg.num == arg.den {
            return Ok(Expr::zero());
        }
        Ok(Expr {
            rat: Rat::zero(),
            logs: vec![LogTerm {
                coeff: Rat::one(),
                arg,
            }],
        })
    }

    // ----- inspection -----------------------------------------------------

    /// Decides whether the expression is identically zero.
    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.logs.is_empty()
    }

    /// Decides whether `self` and `other` denote the same function.
    pub fn equivalent(&self, other: &Expr) -> bool {
        (self - other).is_zero()
    }

    /// True when logarithmic terms are present.
    pub fn has_logs(&self) -> bool {
        !self.logs.is_empty()
    }

    /// Numerator of the rational part.
    pub fn numerator(&self) -> &Poly {
        &self.rat.num
    }

    /// Denominator of the rational part.
    pub fn denominator(&self) -> &Poly {
        &self.rat.den
    }

    /// `Some(c)` iff the expression is the constant `c` (no symbols, no
    /// logarithms).
    pub fn as_constant(&self) -> Option<Coeff> {
        if !self.logs.is_empty() || !self.rat.den.is_one() {
            return None;
        }
        self.rat.num.as_constant()
    }

    /// Every symbol occurring anywhere in the expression.
    pub fn free_symbols(&self) -> BTreeSet<Symbol> {
        let mut out = self.rat.num.free_symbols();
        out.extend(self.rat.den.free_symbols());
        for lt in &self.logs {
            out.extend(lt.coeff.num.free_symbols());
            out.extend(lt.coeff.den.free_symbols());
            out.extend(lt.arg.num.free_symbols());
            out.extend(lt.arg.den.free_symbols());
        }
        out
    }

    /// True iff no coefficient anywhere carries the quadratic unit; used to
    /// assert that final geometric quantities are sqrt2-free.
    pub fn is_sqrt2_free(&self) -> bool {
        self.rat.num.is_sqrt2_free()
            && self.rat.den.is_sqrt2_free()
            && self.logs.iter().all(|lt| {
                lt.coeff.num.is_sqrt2_free()
                    && lt.coeff.den.is_sqrt2_free()
                    && lt.arg.num.is_sqrt2_free()
                    && lt.arg.den.is_sqrt2_free()
            })
    }

    // ----- arithmetic -----------------------------------------------------

    fn add_impl(&self, rhs: &Expr) -> Expr {
        let rat = self.rat.add(&rhs.rat);
        let mut logs = self.logs.clone();
        for lt in &rhs.logs {
            if let Some(existing) = logs.iter_mut().find(|e| {
                e.arg.num == lt.arg.num && e.arg.den == lt.arg.den
            }) {
                existing.coeff = existing.coeff.add(&lt.coeff);
            } else {
                logs.push(lt.clone());
            }
        }
        logs.retain(|lt| !lt.coeff.is_zero());
        logs.sort_by(|a, b| {
            a.arg
                .fmt_with_parens()
                .cmp(&b.arg.fmt_with_parens())
        });
        Expr { rat, logs }
    }

    fn mul_impl(&self, rhs: &Expr) -> Expr {
        if !self.logs.is_empty() && !rhs.logs.is_empty() {
            panic!("product of two logarithmic expressions is outside the supported algebra");
        }
        let (logful, ratside) = if self.logs.is_empty() {
            (rhs, &self.rat)
        } else {
            (self, &rhs.rat)
        };
        let rat = logful.rat.mul(ratside);
        let mut logs: Vec<LogTerm> = logful
            .logs
            .iter()
            .map(|lt| LogTerm {
                coeff: lt.coeff.mul(ratside),
                arg: lt.arg.clone(),
            })
            .collect();
        logs.retain(|lt| !lt.coeff.is_zero());
        Expr { rat, logs }
    }

    /// Exact division; errors on an identically-zero divisor. The divisor
    /// must be log-free (dividing *by* a logarithm is unsupported and
    /// panics).
    pub fn try_div(&self, rhs: &Expr) -> Result<Expr, KernelError> {
        if !rhs.logs.is_empty() {
            panic!("division by a logarithmic expression is outside the supported algebra");
        }
        if rhs.rat.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let inv = Expr::from_rat(rhs.rat.recip());
        Ok(self.mul_impl(&inv))
    }

    /// Integer power. Negative exponents require a nonzero log-free base;
    /// positive exponents above one require a log-free base.
    pub fn powi(&self, n: i32) -> Result<Expr, KernelError> {
        if n == 0 {
            return Ok(Expr::one());
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if !self.logs.is_empty() {
            panic!("powers of logarithmic expressions are outside the supported algebra");
        }
        let mag = n.unsigned_abs();
        let pos = Expr::from_rat(
            Rat {
                num: self.rat.num.pow(mag),
                den: self.rat.den.pow(mag),
            }
            .normalize(),
        );
        if n > 0 {
            Ok(pos)
        } else {
            Expr::one().try_div(&pos)
        }
    }

    // ----- calculus -------------------------------------------------------

    /// Partial derivative with respect to a coordinate. Logarithms
    /// differentiate away: `d(c ln u) = dc ln u + c du/u`.
    pub fn differentiate(&self, v: &Symbol) -> Result<Expr, KernelError> {
        if !v.is_coordinate() {
            return Err(KernelError::NotACoordinate(v.name().to_string()));
        }
        let mut out = Expr::from_rat(diff_rat(&self.rat, v));
        for lt in &self.logs {
            // c' * ln(arg)
            let dc = diff_rat(&lt.coeff, v);
            if !dc.is_zero() {
                out = out.add_impl(&Expr {
                    rat: Rat::zero(),
                    logs: vec![LogTerm {
                        coeff: dc,
                        arg: lt.arg.clone(),
                    }],
                });
            }
            // c * (ln arg)' = c * (n'd - nd')/(nd)
            let n = &lt.arg.num;
            let d = &lt.arg.den;
            let dn = n.derivative(v);
            let dd = d.derivative(v);
            let dlog = Rat {
                num: dn.mul(d).sub(&n.mul(&dd)),
                den: n.mul(d),
            }
            .normalize();
            out = out.add_impl(&Expr::from_rat(lt.coeff.mul(&dlog)));
        }
        Ok(out)
    }

    // ----- substitution ---------------------------------------------------

    /// Simultaneous substitution. Keys may be coordinates, parameters, or
    /// order-0 opaque function symbols; binding a function replaces its
    /// whole derivative chain (`f⁽ᵏ⁾` becomes the `k`-th derivative of the
    /// binding with respect to the function's argument, with the remaining
    /// non-function bindings applied to that body). Binding a coordinate
    /// that serves as some unbound function's argument is rejected.
    pub fn substitute(&self, bindings: &BTreeMap<Symbol, Expr>) -> Result<Expr, KernelError> {
        for (k, val) in bindings {
            if let Some(order) = k.opaque_order() {
                if order > 0 {
                    return Err(KernelError::BindDerivative(k.to_string()));
                }
            }
            if val.has_logs() {
                return Err(KernelError::LogInBinding(k.to_string()));
            }
        }
        // Reject binding an opaque function's argument without the function.
        for sym in self.free_symbols() {
            if let (Some(arg), Some(base)) = (sym.opaque_arg(), sym.opaque_base()) {
                if bindings.contains_key(&arg) && !bindings.contains_key(&base) {
                    return Err(KernelError::UnboundOpaqueArgument {
                        function: base.to_string(),
                        arg: arg.name().to_string(),
                    });
                }
            }
        }
        let non_fn: BTreeMap<Symbol, Expr> = bindings
            .iter()
            .filter(|(k, _)| !k.is_opaque())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let mut cache: BTreeMap<(String, u32), Expr> = BTreeMap::new();
        let mut sub_rat = |r: &Rat| -> Result<(Expr, Expr), KernelError> {
            let n = subst_poly(&r.num, bindings, &non_fn, &mut cache)?;
            let d = subst_poly(&r.den, bindings, &non_fn, &mut cache)?;
            Ok((n, d))
        };

        let (num_e, den_e) = sub_rat(&self.rat)?;
        if den_e.is_zero() {
            return Err(KernelError::SubstitutionZeroDenominator {
                bindings: fmt_bindings(bindings),
                denominator: self.rat.den.to_string(),
            });
        }
        let mut out = num_e.try_div(&den_e).expect("nonzero checked above");

        for lt in &self.logs {
            let (cn, cd) = sub_rat(&lt.coeff)?;
            if cd.is_zero() {
                return Err(KernelError::SubstitutionZeroDenominator {
                    bindings: fmt_bindings(bindings),
                    denominator: lt.coeff.den.to_string(),
                });
            }
            let coeff = cn.try_div(&cd).expect("nonzero checked above");
            let (an, ad) = sub_rat(&lt.arg)?;
            if ad.is_zero() {
                return Err(KernelError::SubstitutionZeroDenominator {
                    bindings: fmt_bindings(bindings),
                    denominator: lt.arg.den.to_string(),
                });
            }
            if an.is_zero() {
                return Err(KernelError::SubstitutionZeroLogArgument {
                    bindings: fmt_bindings(bindings),
                });
            }
            let arg = an.try_div(&ad).expect("nonzero checked above");
            out = out.add_impl(&coeff.mul_impl(&arg.ln()?));
        }
        Ok(out)
    }

    // ----- evaluation -----------------------------------------------------

    /// Exact rational evaluation at a point assigning every symbol. Errors
    /// on logarithmic terms, unassigned symbols (opaque function symbols
    /// can never be assigned), vanishing denominators, and values with a
    /// surviving sqrt2 component.
    pub fn eval_rational(
        &self,
        point: &BTreeMap<Symbol, BigRational>,
    ) -> Result<BigRational, KernelError> {
        if !self.logs.is_empty() {
            return Err(KernelError::LogPresent);
        }
        let n = self.rat.num.eval(point)?;
        let d = self.rat.den.eval(point)?;
        if d.is_zero() {
            return Err(KernelError::Pole);
        }
        let v = n / d;
        if !v.is_rational() {
            return Err(KernelError::Sqrt2Remains);
        }
        Ok(v.rational_part().clone())
    }
}

/// Quotient rule on a bare rational pair.
fn diff_rat(r: &Rat, v: &Symbol) -> Rat {
    let dn = r.num.derivative(v);
    if r.den.is_one() {
        return Rat::from_poly(dn);
    }
    let dd = r.den.derivative(v);
    if dd.is_zero() {
        return Rat {
            num: dn,
            den: r.den.clone(),
        }
        .normalize();
    }
    Rat {
        num: dn.mul(&r.den).sub(&r.num.mul(&dd)),
        den: r.den.mul(&r.den),
    }
    .normalize()
}

/// Substitute into a polynomial, producing an expression.
fn subst_poly(
    p: &Poly,
    bindings: &BTreeMap<Symbol, Expr>,
    non_fn: &BTreeMap<Symbol, Expr>,
    cache: &mut BTreeMap<(String, u32), Expr>,
) -> Result<Expr, KernelError> {
    // Fast path: nothing to substitute.
    let touched = p.free_symbols().iter().any(|s| {
        bindings.contains_key(s)
            || s.opaque_base()
                .map(|b| bindings.contains_key(&b))
                .unwrap_or(false)
    });
    if !touched {
        return Ok(Expr::from_rat(Rat::from_poly(p.clone())));
    }
    let vars = p.vars();
    let mut total = Expr::zero();
    for t in p.terms() {
        let mut term = Expr::constant(t.coeff.clone());
        for (i, &e) in t.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let sym = &vars[i];
            let factor = factor_value(sym, bindings, non_fn, cache)?;
            term = term.mul_impl(&factor.powi(e as i32)?);
        }
        total = total.add_impl(&term);
    }
    Ok(total)
}

/// The replacement value of one variable under the binding set.
fn factor_value(
    sym: &Symbol,
    bindings: &BTreeMap<Symbol, Expr>,
    non_fn: &BTreeMap<Symbol, Expr>,
    cache: &mut BTreeMap<(String, u32), Expr>,
) -> Result<Expr, KernelError> {
    if sym.is_opaque() {
        let base = sym.opaque_base().expect("opaque symbol has a base");
        if let Some(body) = bindings.get(&base) {
            let order = sym.opaque_order().unwrap_or(0);
            let key = (base.name().to_string(), order);
            if let Some(hit) = cache.get(&key) {
                return Ok(hit.clone());
            }
            let arg = sym.opaque_arg().expect("opaque symbol has an argument");
            let mut dk = body.clone();
            for _ in 0..order {
                dk = dk.differentiate(&arg)?;
            }
            let dk = if non_fn.is_empty() {
                dk
            } else {
                dk.substitute(non_fn)?
            };
            cache.insert(key, dk.clone());
            return Ok(dk);
        }
        return Ok(Expr::var(sym));
    }
    if let Some(v) = bindings.get(sym) {
        return Ok(v.clone());
    }
    Ok(Expr::var(sym))
}

fn fmt_bindings(bindings: &BTreeMap<Symbol, Expr>) -> String {
    bindings
        .iter()
        .map(|(k, v)| format!("{k} -> {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

// ----- operator impls ------------------------------------------------------

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        self.add_impl(rhs)
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        self.add_impl(&rhs.clone().neg())
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        self.mul_impl(rhs)
    }
}

impl Div for &Expr {
    /// Panics on an identically-zero divisor; use [`Expr::try_div`] for the
    /// checked form.
    type Output = Expr;
    fn div(self, rhs: &Expr) -> Expr {
        self.try_div(rhs)
            .expect("division by identically-zero expression")
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr {
            rat: self.rat.neg(),
            logs: self
                .logs
                .into_iter()
                .map(|lt| LogTerm {
                    coeff: lt.coeff.neg(),
                    arg: lt.arg,
                })
                .collect(),
        }
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                (&self).$method(rhs)
            }
        }
        impl $trait<Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl AddAssign<Expr> for Expr {
    fn add_assign(&mut self, rhs: Expr) {
        *self = (&*self).add_impl(&rhs);
    }
}

impl SubAssign<Expr> for Expr {
    fn sub_assign(&mut self, rhs: Expr) {
        *self = (&*self).add_impl(&(-rhs));
    }
}

impl MulAssign<Expr> for Expr {
    fn mul_assign(&mut self, rhs: Expr) {
        *self = (&*self).mul_impl(&rhs);
    }
}

impl Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        iter.fold(Expr::zero(), |acc, e| acc + e)
    }
}

impl fmt::Display for Expr {
    /// Deterministic canonical rendering; logarithmic terms follow the
    /// rational part as `+ (coeff)*ln(arg)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if !self.rat.is_zero() || self.logs.is_empty() {
            pieces.push(self.rat.fmt_with_parens());
        }
        for lt in &self.logs {
            let arg = if lt.arg.den.is_one() {
                format!("ln({})", lt.arg.num)
            } else {
                format!("ln(({})/({}))", lt.arg.num, lt.arg.den)
            };
            let coeff = &lt.coeff;
            let piece = if coeff.den.is_one() && coeff.num.is_one() {
                arg
            } else if coeff.den.is_one() && coeff.num == Poly::one().neg() {
                format!("-{arg}")
            } else {
                format!("({})*{arg}", coeff.fmt_with_parens())
            };
            pieces.push(piece);
        }
        let mut out = String::new();
        for (i, p) in pieces.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}
