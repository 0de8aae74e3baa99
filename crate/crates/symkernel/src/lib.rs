//! Exact symbolic scalar arithmetic.
//!
//! This crate is the computational substrate for the geometry layers above
//! it: multivariate rational functions over the quadratic field Q(sqrt2),
//! with symbolic parameters, opaque univariate function symbols carrying
//! formal derivative chains, logarithms of rational arguments, exact
//! differentiation and substitution, and a decidable zero test.
//!
//! Design highlights:
//!
//! * **Everything is exact.** Coefficients are arbitrary-precision
//!   rationals paired into `a + b*sqrt2`; there is no floating point and no
//!   numeric tolerance anywhere.
//! * **Zero-testing is a decision procedure.** [`Expr::is_zero`] clears
//!   denominators and expands to canonical monomial form; an identity check
//!   can therefore be trusted at face value.
//! * **Normalization is lazy.** Quotients cancel only monomial content and
//!   a scalar; no multivariate GCD is computed. This trades smaller
//!   intermediate forms for implementation transparency without giving up
//!   exactness.
//! * **Opaque functions.** A symbol such as `f(p)` denotes an undetermined
//!   univariate function; differentiation produces `f'(p)`, `f''(p)`, …
//!   on demand, and substitution can later bind the whole chain to a
//!   concrete expression.
//!
//! Expressions are immutable; all operations are pure functions, so values
//! can be shared freely across threads.

mod coeff;
mod error;
mod expr;
mod parse;
mod poly;
mod symbol;

pub use coeff::Coeff;
pub use error::{KernelError, ParseError, ParseErrorKind};
pub use expr::Expr;
pub use poly::Poly;
pub use symbol::{Context, Symbol, SymbolKind};
