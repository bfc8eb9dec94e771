//! Single-variable expression trees: grammar, parser, printer, evaluator.
//!
//! The language covers constants, one named variable, `+ - * /`, unary
//! minus, powers with rational-literal exponents, and `sin`/`cos` with
//! parenthesized arguments. Precedence from tightest to loosest:
//! power, unary minus, `* /`, `+ -`. A numeric literal immediately followed
//! by a name multiplies, so `5x^17` reads as `5*(x^17)`; every other product
//! needs an explicit `*`.
//!
//! Integer and decimal literals are kept as exact rationals (falling back to
//! floating point only when they overflow 64-bit numerator/denominator), so
//! coefficients like `1/7` survive exactly wherever the evaluation path is
//! closed under rationals.

mod eval;
mod parse;

pub use eval::eval_numeric;
pub use parse::parse;

use num_rational::Rational64;
use std::fmt;
use thiserror::Error;

/// A parsed constant: exact rational when it fits, floating point otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Number {
    Rational(Rational64),
    Float(f64),
}

impl Number {
    pub fn to_f64(self) -> f64 {
        match self {
            Number::Rational(r) => crate::dual::rational_to_f64(r),
            Number::Float(f) => f,
        }
    }
}

/// An immutable expression tree over one variable.
///
/// Exponents are rational literals, not subtrees, so variable exponents are
/// unrepresentable by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(Number),
    Variable(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational64),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
}

/// A parse failure: where it happened (character offset) and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl Expr {
    pub fn constant(n: i64) -> Expr {
        Expr::Constant(Number::Rational(Rational64::from_integer(n)))
    }

    pub fn rational(numer: i64, denom: i64) -> Expr {
        Expr::Constant(Number::Rational(Rational64::new(numer, denom)))
    }

    pub fn variable(name: &str) -> Expr {
        Expr::Variable(name.to_string())
    }

    /// Render the tree as a string that parses back to a structurally
    /// identical tree.
    pub fn unparse(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    // Binding strength, used to decide where the printer needs parentheses.
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Constant(..) | Expr::Variable(..) | Expr::Sin(..) | Expr::Cos(..) => 5,
        }
    }

    fn write(&self, out: &mut String) {
        match self {
            Expr::Constant(n) => write_constant(*n, out),
            Expr::Variable(name) => out.push_str(name),
            Expr::Add(l, r) => {
                l.write_child(out, 1);
                out.push('+');
                r.write_child(out, 2);
            }
            Expr::Sub(l, r) => {
                l.write_child(out, 1);
                out.push('-');
                r.write_child(out, 2);
            }
            Expr::Neg(e) => {
                out.push('-');
                e.write_child(out, 3);
            }
            Expr::Mul(l, r) => {
                l.write_child(out, 2);
                out.push('*');
                r.write_child(out, 4);
            }
            Expr::Div(l, r) => {
                l.write_child(out, 2);
                out.push('/');
                r.write_child(out, 4);
            }
            Expr::Pow(base, exponent) => {
                base.write_child(out, 5);
                out.push('^');
                write_exponent(*exponent, out);
            }
            Expr::Sin(e) => {
                out.push_str("sin(");
                e.write(out);
                out.push(')');
            }
            Expr::Cos(e) => {
                out.push_str("cos(");
                e.write(out);
                out.push(')');
            }
        }
    }

    fn write_child(&self, out: &mut String, min_precedence: u8) {
        if self.precedence() < min_precedence {
            out.push('(');
            self.write(out);
            out.push(')');
        } else {
            self.write(out);
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.unparse())
    }
}

fn write_constant(n: Number, out: &mut String) {
    match n {
        Number::Rational(r) => {
            if r.is_integer() && *r.numer() >= 0 {
                out.push_str(&r.numer().to_string());
            } else if r.is_integer() {
                // Parenthesized so the sign binds to the literal in any context.
                out.push('(');
                out.push_str(&r.numer().to_string());
                out.push(')');
            } else {
                out.push('(');
                out.push_str(&r.numer().to_string());
                out.push('/');
                out.push_str(&r.denom().to_string());
                out.push(')');
            }
        }
        Number::Float(f) => {
            if f >= 0.0 {
                out.push_str(&f.to_string());
            } else {
                out.push('(');
                out.push_str(&f.to_string());
                out.push(')');
            }
        }
    }
}

fn write_exponent(p: Rational64, out: &mut String) {
    if p.is_integer() && !p.numer().is_negative() {
        out.push_str(&p.numer().to_string());
    } else if p.is_integer() {
        out.push('(');
        out.push_str(&p.numer().to_string());
        out.push(')');
    } else {
        out.push('(');
        out.push_str(&p.numer().to_string());
        out.push('/');
        out.push_str(&p.denom().to_string());
        out.push(')');
    }
}
