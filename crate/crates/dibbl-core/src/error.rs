//! Error types shared by the numeric kernel and the evaluation engine.

use thiserror::Error;

/// Errors produced by dual arithmetic, expression evaluation, and the
/// slope/oracle operations built on top of them.
///
/// Results are kept finite by construction: any operation whose IEEE result
/// would be non-finite reports [`MathError::NotFinite`] instead of storing it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    /// An arithmetic result overflowed to infinity or NaN.
    #[error("arithmetic range error: result is not finite")]
    NotFinite,

    /// Division where the denominator's real part is exactly zero.
    #[error("division by zero real part")]
    DivisionByZero,

    /// The operand lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// An expression referenced a variable other than the declared one.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// Secant endpoints coincide; the two-point quotient is undefined.
    #[error("secant endpoints coincide")]
    CoincidentPoints,

    /// Leading quadratic coefficient is zero.
    #[error("leading coefficient is zero: not a quadratic")]
    NotQuadratic,

    /// A step argument that must be nonzero was zero.
    #[error("step must be nonzero")]
    ZeroStep,

    /// A step argument that must be positive was zero or negative.
    #[error("step must be positive")]
    NonPositiveStep,

    /// An integer argument fell outside its supported range.
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),

    /// A sampling range was empty or inverted.
    #[error("bad range: require from < to and step > 0")]
    BadRange,
}
