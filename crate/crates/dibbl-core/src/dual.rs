//! Dual numbers: the arithmetic of an infinitesimal whose square is zero.
//!
//! A [`Dual`] is a pair `a + b·dx` where the increment `dx` satisfies
//! `dx·dx = 0` identically. The `real` field carries the value `a`, the
//! `dibbl` field carries the coefficient `b` of the increment. Because the
//! square of the increment vanishes algebraically, multiplying two duals
//! keeps only the cross terms:
//!
//! `(a + b·dx)(c + d·dx) = ac + (ad + bc)·dx`
//!
//! Seeding an input as `(x, 1)` and pushing it through a computation yields
//! the function value in `real` and the derivative in `dibbl` — no limits,
//! no symbolic rewriting. The increment is stored as a coefficient, not a
//! magnitude, so `dx² = 0` is an identity rather than an approximation.
//!
//! All operations keep both fields finite: a result that would overflow to
//! infinity or NaN is reported as [`MathError::NotFinite`].

use crate::angle::AngleUnit;
use crate::error::MathError;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive};

/// A value together with the coefficient of an infinitesimal increment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual {
    /// The value part, in the caller's units.
    pub real: f64,
    /// The coefficient of `dx`: value units per unit of the seed variable.
    pub dibbl: f64,
}

// Fallible kernel methods deliberately reuse the operator names; the std
// traits cannot carry the Result return type.
#[allow(clippy::should_implement_trait)]
impl Dual {
    /// Pair a value with an increment coefficient. Both must be finite.
    pub fn new(real: f64, dibbl: f64) -> Self {
        debug_assert!(real.is_finite() && dibbl.is_finite());
        Dual { real, dibbl }
    }

    /// A constant: zero increment coefficient.
    pub fn constant(value: f64) -> Self {
        Dual::new(value, 0.0)
    }

    /// The differentiation variable: unit increment coefficient.
    pub fn variable(value: f64) -> Self {
        Dual::new(value, 1.0)
    }

    fn finite(real: f64, dibbl: f64) -> Result<Dual, MathError> {
        if real.is_finite() && dibbl.is_finite() {
            Ok(Dual { real, dibbl })
        } else {
            Err(MathError::NotFinite)
        }
    }

    /// Componentwise sum.
    pub fn add(self, rhs: Dual) -> Result<Dual, MathError> {
        Dual::finite(self.real + rhs.real, self.dibbl + rhs.dibbl)
    }

    /// Componentwise difference.
    pub fn sub(self, rhs: Dual) -> Result<Dual, MathError> {
        Dual::finite(self.real - rhs.real, self.dibbl - rhs.dibbl)
    }

    /// Componentwise negation. Cannot overflow.
    pub fn neg(self) -> Dual {
        Dual {
            real: -self.real,
            dibbl: -self.dibbl,
        }
    }

    /// Product with the `dx·dx` cross term dropped:
    /// `(a + b·dx)(c + d·dx) = ac + (ad + bc)·dx`.
    pub fn mul(self, rhs: Dual) -> Result<Dual, MathError> {
        Dual::finite(
            self.real * rhs.real,
            self.real * rhs.dibbl + self.dibbl * rhs.real,
        )
    }

    /// Quotient. The denominator's real part must be nonzero; a dual with
    /// zero real part has no reciprocal, so this is an error rather than a
    /// value — division by zero stays undefined here.
    pub fn div(self, rhs: Dual) -> Result<Dual, MathError> {
        if rhs.real == 0.0 {
            return Err(MathError::DivisionByZero);
        }
        Dual::finite(
            self.real / rhs.real,
            (self.dibbl * rhs.real - self.real * rhs.dibbl) / (rhs.real * rhs.real),
        )
    }

    /// Rational power: `(a + b·dx)^p = a^p + p·a^(p−1)·b·dx`.
    ///
    /// For non-negative integer `p` this agrees with repeated [`Dual::mul`].
    /// Non-integer exponents require a positive base; a zero base requires
    /// `p ≥ 1` (the slope coefficient would otherwise blow up).
    pub fn powr(self, p: Rational64) -> Result<Dual, MathError> {
        if self.real == 0.0 {
            if p < Rational64::one() {
                return Err(MathError::Domain("zero base requires exponent >= 1"));
            }
            if p == Rational64::one() {
                return Ok(Dual::new(0.0, self.dibbl));
            }
            return Ok(Dual::new(0.0, 0.0));
        }
        let value = pow_value(self.real, p)?;
        let slope_factor = pow_value(self.real, p - Rational64::one())?;
        Dual::finite(value, rational_to_f64(p) * slope_factor * self.dibbl)
    }

    /// Sine of an angle quoted in `unit`:
    /// value `sin(A·a)`, slope coefficient `A·cos(A·a)·b` with `A` the
    /// radians-per-unit scale. At `(0, 1)` in radians this is exactly
    /// `(0, 1)`: the sine of an infinitesimal angle is the angle itself.
    pub fn sin(self, unit: AngleUnit) -> Result<Dual, MathError> {
        let theta = unit.to_radians(self.real);
        Dual::finite(theta.sin(), unit.scale() * theta.cos() * self.dibbl)
    }

    /// Cosine of an angle quoted in `unit`:
    /// value `cos(A·a)`, slope coefficient `−A·sin(A·a)·b`. At `(0, 1)` this
    /// is exactly `(1, 0)`: the cosine of an infinitesimal angle is 1.
    pub fn cos(self, unit: AngleUnit) -> Result<Dual, MathError> {
        let theta = unit.to_radians(self.real);
        Dual::finite(theta.cos(), -(unit.scale() * theta.sin() * self.dibbl))
    }
}

/// Scalar rational power with the same domain rules the dual kernel uses.
///
/// Integer exponents go through exact binary exponentiation and accept
/// negative bases; fractional exponents require a positive base. A zero base
/// requires `p ≥ 1` and yields 0.
pub(crate) fn pow_value(base: f64, p: Rational64) -> Result<f64, MathError> {
    if base == 0.0 {
        if p < Rational64::one() {
            return Err(MathError::Domain("zero base requires exponent >= 1"));
        }
        return Ok(0.0);
    }
    if base < 0.0 && !p.is_integer() {
        return Err(MathError::Domain(
            "negative base requires an integer exponent",
        ));
    }
    let value = if p.is_integer() {
        let n = *p.numer();
        match i32::try_from(n) {
            Ok(n) => base.powi(n),
            // Exponent magnitude beyond i32: compute through the magnitude and
            // restore the sign from exponent parity.
            Err(_) => {
                let magnitude = base.abs().powf(n as f64);
                if base < 0.0 && n % 2 != 0 {
                    -magnitude
                } else {
                    magnitude
                }
            }
        }
    } else {
        base.powf(rational_to_f64(p))
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(MathError::NotFinite)
    }
}

pub(crate) fn rational_to_f64(r: Rational64) -> f64 {
    // Exact for the small exponents the grammar admits; falls back to the
    // correctly rounded quotient otherwise.
    r.to_f64().unwrap_or(*r.numer() as f64 / *r.denom() as f64)
}
