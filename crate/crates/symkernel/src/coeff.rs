//! Coefficient arithmetic in the quadratic field Q(sqrt2).
//!
//! Every polynomial coefficient is an element `a + b*sqrt2` with exact
//! rational `a`, `b`. Keeping the quadratic unit inside the coefficient
//! field (rather than as a polynomial variable subject to an ideal) makes
//! zero-testing trivial (`a = b = 0`), keeps division exact (conjugation:
//! `a^2 - 2 b^2` never vanishes for rational `a, b` not both zero), and lets
//! callers assert that a final quantity is sqrt2-free by inspecting the
//! `b` part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An exact element `a + b*sqrt2` of Q(sqrt2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    a: BigRational,
    b: BigRational,
}

impl Coeff {
    /// The additive identity.
    pub fn zero() -> Self {
        Coeff {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        Coeff {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    /// The formal square root of two.
    pub fn sqrt2() -> Self {
        Coeff {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// An integer as a coefficient.
    pub fn from_int(n: i64) -> Self {
        Coeff {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
        }
    }

    /// The exact fraction `n / d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator in rational constant");
        Coeff {
            a: BigRational::new(BigInt::from(n), BigInt::from(d)),
            b: BigRational::zero(),
        }
    }

    /// A rational number as a coefficient.
    pub fn from_rational(r: BigRational) -> Self {
        Coeff {
            a: r,
            b: BigRational::zero(),
        }
    }

    /// The rational part `a` of `a + b*sqrt2`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// The coefficient `b` of `sqrt2` in `a + b*sqrt2`.
    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    /// True iff the element is zero (both parts vanish).
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True iff the element equals one.
    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True iff the element lies in Q (no sqrt2 component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplicative inverse via conjugation:
    /// `1/(a + b*sqrt2) = (a - b*sqrt2) / (a^2 - 2 b^2)`.
    ///
    /// Panics on zero; for nonzero rational `a`, `b` the norm `a^2 - 2 b^2`
    /// cannot vanish (sqrt2 is irrational), so the inverse always exists.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        let norm = &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
        debug_assert!(!norm.is_zero());
        Coeff {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        }
    }

    /// Sign used for canonical printing: the sign of `a` if nonzero, else of
    /// `b`. Returns true when the leading printed sign would be `-`.
    pub fn is_display_negative(&self) -> bool {
        if !self.a.is_zero() {
            self.a.is_negative()
        } else {
            self.b.is_negative()
        }
    }

    fn two() -> BigRational {
        BigRational::from_integer(BigInt::from(2))
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        Coeff {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for Coeff {
    fn add_assign(&mut self, rhs: Coeff) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        Coeff {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl SubAssign for Coeff {
    fn sub_assign(&mut self, rhs: Coeff) {
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s
        let a = &self.a * &rhs.a + Coeff::two() * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        Coeff { a, b }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &'a Coeff) -> Coeff {
        self.clone() * rhs.clone()
    }
}

impl MulAssign for Coeff {
    fn mul_assign(&mut self, rhs: Coeff) {
        *self = self.clone() * rhs;
    }
}

impl Div for Coeff {
    type Output = Coeff;
    fn div(self, rhs: Coeff) -> Coeff {
        self * rhs.inv()
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    /// Canonical rendering: `a`, `b*sqrt2`, or `(a + b*sqrt2)`. The mixed
    /// case is parenthesized so the result can be juxtaposed with a monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => fmt_rational(&self.a, f),
            (true, false) => {
                if self.b.is_one() {
                    write!(f, "sqrt2")
                } else if (-&self.b).is_one() {
                    write!(f, "-sqrt2")
                } else {
                    fmt_rational(&self.b, f)?;
                    write!(f, "*sqrt2")
                }
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_rational(&self.a, f)?;
                if self.b.is_negative() {
                    write!(f, " - ")?;
                    let nb = -&self.b;
                    if nb.is_one() {
                        write!(f, "sqrt2")?;
                    } else {
                        fmt_rational(&nb, f)?;
                        write!(f, "*sqrt2")?;
                    }
                } else {
                    write!(f, " + ")?;
                    if self.b.is_one() {
                        write!(f, "sqrt2")?;
                    } else {
                        fmt_rational(&self.b, f)?;
                        write!(f, "*sqrt2")?;
                    }
                }
                write!(f, ")")
            }
        }
    }
}
