//! Multivariate polynomials over Q(sqrt2) in canonical graded-lex form.
//!
//! Terms are kept sorted in descending graded-lexicographic order with
//! respect to the polynomial's own sorted variable list (coordinates in
//! chart order first, then other symbols alphabetically). Zero coefficients
//! are pruned eagerly, so structural equality of aligned term lists is value
//! equality — this is what makes `is_zero` on expanded differences a
//! decision procedure.
//!
//! Differentiation knows two kinds of variables: coordinates (`dv/dv = 1`)
//! and opaque function derivatives, whose chain rule `d f⁽ᵏ⁾/dv = f⁽ᵏ⁺¹⁾`
//! fires exactly when `v` is the function's declared argument.

use crate::coeff::Coeff;
use crate::error::KernelError;
use crate::symbol::Symbol;
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// A single term: exponent vector aligned with the owning polynomial's
/// variable list, plus a nonzero coefficient.
#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub exps: Vec<u16>,
    pub coeff: Coeff,
}

/// A multivariate polynomial in canonical form.
#[derive(Debug, Clone)]
pub struct Poly {
    vars: Arc<Vec<Symbol>>,
    terms: Vec<Term>,
}

/// Descending graded-lex: higher total degree first; ties broken
/// lexicographically with earlier variables taking precedence.
fn grlex_desc(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl Poly {
    // ----- construction -------------------------------------------------

    /// The zero polynomial (no variables).
    pub fn zero() -> Self {
        Poly {
            vars: Arc::new(Vec::new()),
            terms: Vec::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(c: Coeff) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: Arc::new(Vec::new()),
            terms: vec![Term {
                exps: Vec::new(),
                coeff: c,
            }],
        }
    }

    /// The polynomial `1`.
    pub fn one() -> Self {
        Poly::constant(Coeff::one())
    }

    /// A single variable.
    pub fn var(sym: &Symbol) -> Self {
        Poly {
            vars: Arc::new(vec![sym.clone()]),
            terms: vec![Term {
                exps: vec![1],
                coeff: Coeff::one(),
            }],
        }
    }

    /// Build from raw terms (unsorted, possibly with duplicates or zeros);
    /// the term exponent vectors must align with `vars`, which must be
    /// sorted and duplicate-free.
    pub(crate) fn from_terms(vars: Arc<Vec<Symbol>>, terms: Vec<Term>) -> Self {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]), "vars must be sorted");
        let mut map: BTreeMap<Vec<u16>, Coeff> = BTreeMap::new();
        for t in terms {
            debug_assert_eq!(t.exps.len(), vars.len());
            match map.entry(t.exps) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(t.coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += t.coeff;
                }
            }
        }
        let mut out: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        out.sort_by(|x, y| grlex_desc(&x.exps, &y.exps));
        Poly { vars, terms: out }
    }

    // ----- inspection ---------------------------------------------------

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.terms.is_empty() {
            return Some(Coeff::zero());
        }
        if self.terms.len() == 1 && self.terms[0].exps.iter().all(|&e| e == 0) {
            return Some(self.terms[0].coeff.clone());
        }
        None
    }

    /// True iff the polynomial is the constant one.
    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Leading (graded-lex greatest) coefficient; zero for the zero poly.
    pub fn leading_coeff(&self) -> Coeff {
        self.terms
            .first()
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Coeff::zero)
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.exps.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// The distinct symbols that actually occur (nonzero exponent).
    pub fn free_symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        for t in &self.terms {
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    out.insert(self.vars[i].clone());
                }
            }
        }
        out
    }

    /// True iff every coefficient lies in Q (no sqrt2 component).
    pub fn is_sqrt2_free(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_rational())
    }

    // ----- variable alignment -------------------------------------------

    /// Remap this polynomial onto a superset variable list.
    fn remap(&self, vars: &Arc<Vec<Symbol>>) -> Poly {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return Poly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            };
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("remap target must be a superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u16; vars.len()];
                for (i, &e) in t.exps.iter().enumerate() {
                    exps[idx[i]] = e;
                }
                Term {
                    exps,
                    coeff: t.coeff.clone(),
                }
            })
            .collect();
        // Remapping onto a sorted superset preserves graded-lex order only
        // up to the new columns; re-sort to stay canonical.
        let mut out = Poly {
            vars: vars.clone(),
            terms,
        };
        out.terms.sort_by(|x, y| grlex_desc(&x.exps, &y.exps));
        out
    }

    /// Align two polynomials on the union of their variable lists.
    pub(crate) fn unify(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if Arc::ptr_eq(&a.vars, &b.vars) || *a.vars == *b.vars {
            return (a.clone(), b.remap(&a.vars));
        }
        let mut merged: Vec<Symbol> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        merged.sort();
        merged.dedup();
        let vars = Arc::new(merged);
        (a.remap(&vars), b.remap(&vars))
    }

    // ----- arithmetic ----------------------------------------------------

    /// Sum.
    pub fn add(&self, rhs: &Poly) -> Poly {
        let (a, b) = Poly::unify(self, rhs);
        let mut terms = a.terms;
        terms.extend(b.terms);
        Poly::from_terms(a.vars, terms)
    }

    /// Difference.
    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: -t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Product.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, b) = Poly::unify(self, rhs);
        let mut map: BTreeMap<Vec<u16>, Coeff> = BTreeMap::new();
        for ta in &a.terms {
            for tb in &b.terms {
                let exps: Vec<u16> = ta
                    .exps
                    .iter()
                    .zip(&tb.exps)
                    .map(|(&x, &y)| {
                        x.checked_add(y)
                            .expect("monomial exponent overflow (degree > 65535)")
                    })
                    .collect();
                let c = &ta.coeff * &tb.coeff;
                match map.entry(exps) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        terms.sort_by(|x, y| grlex_desc(&x.exps, &y.exps));
        Poly {
            vars: a.vars,
            terms,
        }
    }

    /// Non-negative integer power by binary exponentiation.
    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    // ----- calculus -------------------------------------------------------

    /// Partial derivative with respect to the coordinate `v`, with the
    /// opaque chain rule `d f⁽ᵏ⁾(v)/dv = f⁽ᵏ⁺¹⁾(v)`.
    pub fn derivative(&self, v: &Symbol) -> Poly {
        let mut acc = Poly::zero();
        for (i, var) in self.vars.iter().enumerate() {
            let direct = var == v;
            let chained = var.is_opaque() && var.opaque_arg_name() == Some(v.name());
            if !direct && !chained {
                continue;
            }
            let mut pieces: Vec<Term> = Vec::new();
            for t in &self.terms {
                let e = t.exps[i];
                if e == 0 {
                    continue;
                }
                let mut exps = t.exps.clone();
                exps[i] = e - 1;
                pieces.push(Term {
                    exps,
                    coeff: &t.coeff * &Coeff::from_int(e as i64),
                });
            }
            if pieces.is_empty() {
                continue;
            }
            let piece = Poly::from_terms(self.vars.clone(), pieces);
            let piece = if chained {
                piece.mul(&Poly::var(&var.opaque_derivative()))
            } else {
                piece
            };
            acc = acc.add(&piece);
        }
        acc
    }

    /// Exact evaluation at a rational point. The value is computed in
    /// Q(sqrt2) (coefficients may carry the quadratic unit); the caller
    /// decides whether a sqrt2 component is acceptable.
    pub fn eval(&self, point: &BTreeMap<Symbol, BigRational>) -> Result<Coeff, KernelError> {
        let mut total = Coeff::zero();
        for t in &self.terms {
            let mut prod = t.coeff.clone();
            for (i, &e) in t.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = point
                    .get(&self.vars[i])
                    .ok_or_else(|| KernelError::Unassigned(self.vars[i].to_string()))?;
                let base = Coeff::from_rational(v.clone());
                let mut p = Coeff::one();
                for _ in 0..e {
                    p *= base.clone();
                }
                prod *= p;
            }
            total += prod;
        }
        Ok(total)
    }

    // ----- content normalization ------------------------------------------

    /// Per-variable minimum exponent over all terms (the monomial content),
    /// on this polynomial's own variable list. Zero polynomial yields all
    /// zeros.
    pub(crate) fn min_exponents(&self) -> Vec<u16> {
        if self.terms.is_empty() {
            return vec![0; self.vars.len()];
        }
        let mut mins = self.terms[0].exps.clone();
        for t in &self.terms[1..] {
            for (m, &e) in mins.iter_mut().zip(&t.exps) {
                if e < *m {
                    *m = e;
                }
            }
        }
        mins
    }

    /// Divide by the monomial with the given exponents (must divide every
    /// term).
    pub(crate) fn divide_monomial(&self, exps: &[u16]) -> Poly {
        debug_assert_eq!(exps.len(), self.vars.len());
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t
                        .exps
                        .iter()
                        .zip(exps)
                        .map(|(&e, &m)| {
                            debug_assert!(e >= m);
                            e - m
                        })
                        .collect(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub(crate) fn vars(&self) -> &Arc<Vec<Symbol>> {
        &self.vars
    }

    pub(crate) fn terms(&self) -> &[Term] {
        &self.terms
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Poly::unify(self, other);
        if a.terms.len() != b.terms.len() {
            return false;
        }
        a.terms
            .iter()
            .zip(&b.terms)
            .all(|(x, y)| x.exps == y.exps && x.coeff == y.coeff)
    }
}

impl Eq for Poly {}

impl fmt::Display for Poly {
    /// Canonical rendering: terms in descending graded-lex order, earlier
    /// chart coordinates first inside each monomial, explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let mono: Vec<String> = t
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].to_string()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let negative = t.coeff.is_display_negative();
            let abs = if negative {
                -t.coeff.clone()
            } else {
                t.coeff.clone()
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
