//! Plain numeric evaluation of expression trees.

use super::{Expr, Number};
use crate::angle::AngleUnit;
use crate::dual::pow_value;
use crate::error::MathError;

/// Evaluate `e` at `var = x`, interpreting trigonometric arguments in `unit`.
///
/// Performs the same scalar operations, in the same order, as the real parts
/// of the dual evaluator, so the two paths agree bit for bit.
pub fn eval_numeric(e: &Expr, var: &str, x: f64, unit: AngleUnit) -> Result<f64, MathError> {
    let value = match e {
        Expr::Constant(Number::Rational(r)) => crate::dual::rational_to_f64(*r),
        Expr::Constant(Number::Float(f)) => *f,
        Expr::Variable(name) => {
            if name == var {
                x
            } else {
                return Err(MathError::UnknownVariable(name.clone()));
            }
        }
        Expr::Add(l, r) => eval_numeric(l, var, x, unit)? + eval_numeric(r, var, x, unit)?,
        Expr::Sub(l, r) => eval_numeric(l, var, x, unit)? - eval_numeric(r, var, x, unit)?,
        Expr::Neg(inner) => -eval_numeric(inner, var, x, unit)?,
        Expr::Mul(l, r) => eval_numeric(l, var, x, unit)? * eval_numeric(r, var, x, unit)?,
        Expr::Div(l, r) => {
            let numer = eval_numeric(l, var, x, unit)?;
            let denom = eval_numeric(r, var, x, unit)?;
            if denom == 0.0 {
                return Err(MathError::DivisionByZero);
            }
            numer / denom
        }
        Expr::Pow(base, p) => pow_value(eval_numeric(base, var, x, unit)?, *p)?,
        Expr::Sin(inner) => unit.to_radians(eval_numeric(inner, var, x, unit)?).sin(),
        Expr::Cos(inner) => unit.to_radians(eval_numeric(inner, var, x, unit)?).cos(),
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(MathError::NotFinite)
    }
}
