//! Exact rational counterpart of the dual kernel.
//!
//! Expression trees whose constants are rational and whose exponents are
//! integers evaluate exactly over arbitrary-precision rationals. The tangent
//! command uses this to print coefficients like `-128/7` as fractions, and
//! the binomial oracle uses it to compare expansion coefficients without
//! rounding.

use crate::error::MathError;
use crate::expr::{Expr, Number};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

/// A dual number over arbitrary-precision rationals: `real + dibbl·dx`
/// with `dx² = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactDual {
    pub real: BigRational,
    pub dibbl: BigRational,
}

impl ExactDual {
    pub fn new(real: BigRational, dibbl: BigRational) -> Self {
        ExactDual { real, dibbl }
    }

    pub fn constant(value: BigRational) -> Self {
        ExactDual::new(value, BigRational::zero())
    }

    pub fn variable(value: BigRational) -> Self {
        ExactDual::new(value, BigRational::one())
    }

    pub fn add(&self, rhs: &ExactDual) -> ExactDual {
        ExactDual::new(&self.real + &rhs.real, &self.dibbl + &rhs.dibbl)
    }

    pub fn sub(&self, rhs: &ExactDual) -> ExactDual {
        ExactDual::new(&self.real - &rhs.real, &self.dibbl - &rhs.dibbl)
    }

    pub fn neg(&self) -> ExactDual {
        ExactDual::new(-&self.real, -&self.dibbl)
    }

    pub fn mul(&self, rhs: &ExactDual) -> ExactDual {
        ExactDual::new(
            &self.real * &rhs.real,
            &self.real * &rhs.dibbl + &self.dibbl * &rhs.real,
        )
    }

    pub fn div(&self, rhs: &ExactDual) -> Result<ExactDual, MathError> {
        if rhs.real.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let real = &self.real / &rhs.real;
        let dibbl =
            (&self.dibbl * &rhs.real - &self.real * &rhs.dibbl) / (&rhs.real * &rhs.real);
        Ok(ExactDual::new(real, dibbl))
    }

    /// Integer power with the same zero-base rules as the floating kernel.
    pub fn powi(&self, n: i32) -> Result<ExactDual, MathError> {
        if self.real.is_zero() {
            if n < 1 {
                return Err(MathError::Domain("zero base requires exponent >= 1"));
            }
            if n == 1 {
                return Ok(self.clone());
            }
            return Ok(ExactDual::constant(BigRational::zero()));
        }
        let value = rational_pow(&self.real, n);
        let slope = BigRational::from_integer(BigInt::from(n))
            * rational_pow(&self.real, n - 1)
            * &self.dibbl;
        Ok(ExactDual::new(value, slope))
    }
}

fn rational_pow(base: &BigRational, n: i32) -> BigRational {
    if n >= 0 {
        base.pow(n)
    } else {
        BigRational::one() / base.pow(-n)
    }
}

pub fn big_rational(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Evaluate a tree over exact rationals at the given dual seed.
///
/// Returns `Ok(None)` when the tree leaves the rational domain (trig nodes,
/// floating constants, fractional or oversized exponents); real arithmetic
/// errors such as division by zero surface as `Err`.
pub fn eval_dual_exact(
    e: &Expr,
    var: &str,
    seed: &ExactDual,
) -> Result<Option<ExactDual>, MathError> {
    let result = match e {
        Expr::Constant(Number::Rational(r)) => ExactDual::constant(big_rational(*r)),
        Expr::Constant(Number::Float(_)) => return Ok(None),
        Expr::Variable(name) => {
            if name == var {
                seed.clone()
            } else {
                return Err(MathError::UnknownVariable(name.clone()));
            }
        }
        Expr::Add(l, r) => match (
            eval_dual_exact(l, var, seed)?,
            eval_dual_exact(r, var, seed)?,
        ) {
            (Some(a), Some(b)) => a.add(&b),
            _ => return Ok(None),
        },
        Expr::Sub(l, r) => match (
            eval_dual_exact(l, var, seed)?,
            eval_dual_exact(r, var, seed)?,
        ) {
            (Some(a), Some(b)) => a.sub(&b),
            _ => return Ok(None),
        },
        Expr::Neg(inner) => match eval_dual_exact(inner, var, seed)? {
            Some(a) => a.neg(),
            None => return Ok(None),
        },
        Expr::Mul(l, r) => match (
            eval_dual_exact(l, var, seed)?,
            eval_dual_exact(r, var, seed)?,
        ) {
            (Some(a), Some(b)) => a.mul(&b),
            _ => return Ok(None),
        },
        Expr::Div(l, r) => match (
            eval_dual_exact(l, var, seed)?,
            eval_dual_exact(r, var, seed)?,
        ) {
            (Some(a), Some(b)) => a.div(&b)?,
            _ => return Ok(None),
        },
        Expr::Pow(base, p) => {
            if !p.is_integer() {
                return Ok(None);
            }
            // Cap the exact path; enormous integer exponents fall back to
            // floating point rather than building million-digit rationals.
            let n = match i32::try_from(*p.numer()) {
                Ok(n) if n.unsigned_abs() <= 4096 => n,
                _ => return Ok(None),
            };
            match eval_dual_exact(base, var, seed)? {
                Some(b) => b.powi(n)?,
                None => return Ok(None),
            }
        }
        Expr::Sin(_) | Expr::Cos(_) => return Ok(None),
    };
    Ok(Some(result))
}
