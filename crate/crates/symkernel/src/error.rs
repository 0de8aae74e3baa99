//! Error types for the symbolic kernel.

use thiserror::Error;

/// Errors raised by kernel operations (construction, substitution,
/// evaluation, differentiation).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    /// A quotient with an identically-zero denominator was requested.
    #[error("division by an identically-zero expression")]
    DivisionByZero,

    /// A symbol name was declared twice in the same workspace.
    #[error("symbol `{0}` is already declared")]
    DuplicateSymbol(String),

    /// `sqrt2` is a built-in constant and cannot be declared.
    #[error("`{0}` is a reserved name")]
    ReservedName(String),

    /// Differentiation variable is not a coordinate.
    #[error("`{0}` is not a coordinate; differentiation is with respect to coordinates only")]
    NotACoordinate(String),

    /// A substitution binding used a derivative symbol as key; bindings must
    /// target the base (order-0) function.
    #[error("cannot bind derivative symbol `{0}` directly; bind the base function instead")]
    BindDerivative(String),

    /// A coordinate serving as an opaque function's argument was bound
    /// without simultaneously binding the function itself.
    #[error("coordinate `{arg}` is the argument of `{function}`, which is not bound in the same substitution")]
    UnboundOpaqueArgument { function: String, arg: String },

    /// A substitution produced a zero denominator.
    #[error("substitution {{{bindings}}} maps a denominator `{denominator}` to zero")]
    SubstitutionZeroDenominator {
        bindings: String,
        denominator: String,
    },

    /// A substitution produced a zero logarithm argument.
    #[error("substitution {{{bindings}}} maps a logarithm argument to zero")]
    SubstitutionZeroLogArgument { bindings: String },

    /// Substitution bindings may not contain logarithms.
    #[error("binding for `{0}` contains a logarithm; only rational bindings are supported")]
    LogInBinding(String),

    /// The logarithm of an identically-zero expression was requested.
    #[error("logarithm of an identically-zero expression")]
    LogOfZero,

    /// The logarithm of an expression already containing logarithms was
    /// requested; nested logarithms are unsupported.
    #[error("nested logarithms are not supported")]
    NestedLog,

    /// Rational evaluation hit a vanishing denominator.
    #[error("pole: a denominator evaluates to zero at the given point")]
    Pole,

    /// Rational evaluation found a symbol without an assigned value.
    #[error("no value assigned for symbol `{0}`")]
    Unassigned(String),

    /// Rational evaluation is undefined on logarithmic terms.
    #[error("expression contains a logarithm; rational evaluation is undefined")]
    LogPresent,

    /// The value is irrational: a nonzero sqrt2 component survived.
    #[error("value has a nonzero sqrt2 component; not a rational number")]
    Sqrt2Remains,
}

/// A syntax or resolution error from the expression parser, with the byte
/// offset into the source text where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

/// What went wrong during parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected}, found `{found}`")]
    Unexpected { expected: String, found: String },
    #[error("undeclared identifier `{0}`")]
    Undeclared(String),
    #[error("`{0}` is a function symbol and must be applied to its argument")]
    MissingArgument(String),
    #[error("`{0}` is not a function symbol and cannot be applied")]
    NotAFunction(String),
    #[error("function `{function}` takes argument `{expected}`, not `{found}`")]
    WrongArgument {
        function: String,
        expected: String,
        found: String,
    },
    #[error("primes are only meaningful on function symbols, not on `{0}`")]
    PrimeOnNonFunction(String),
    #[error("exponent out of range")]
    ExponentRange,
    #[error("division by zero")]
    DivisionByZero,
}
