//! Slope operations built on the dual kernel: derivative and secant
//! evaluation, tangent lines, quadratic vertex and roots, the unit-scale
//! estimator, and the Pythagorean residual.

use crate::angle::AngleUnit;
use crate::dual::{rational_to_f64, Dual};
use crate::error::MathError;
use crate::exact::{self, ExactDual};
use crate::expr::{eval_numeric, Expr, Number};
use num_rational::{BigRational, Rational64};
use num_traits::One;

/// The line `y = intercept + slope·x` matching a curve's value and slope at
/// one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentLine {
    pub intercept: f64,
    pub slope: f64,
}

/// Real roots of a quadratic, ascending, with the discriminant that decided
/// how many there are.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticRoots {
    pub discriminant: f64,
    pub roots: Vec<f64>,
}

/// Stationary point of a quadratic: the time of zero slope and the value
/// attained there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub t_m: f64,
    pub value: f64,
}

/// Evaluate a tree over duals: each node maps onto the corresponding dual
/// operation, so the result carries the value in `real` and the directional
/// derivative (scaled by the seed's `dibbl`) alongside it.
pub fn eval_dual(e: &Expr, var: &str, seed: Dual, unit: AngleUnit) -> Result<Dual, MathError> {
    match e {
        Expr::Constant(Number::Rational(r)) => Ok(Dual::constant(rational_to_f64(*r))),
        Expr::Constant(Number::Float(f)) => Ok(Dual::constant(*f)),
        Expr::Variable(name) => {
            if name == var {
                Ok(seed)
            } else {
                Err(MathError::UnknownVariable(name.clone()))
            }
        }
        Expr::Add(l, r) => eval_dual(l, var, seed, unit)?.add(eval_dual(r, var, seed, unit)?),
        Expr::Sub(l, r) => eval_dual(l, var, seed, unit)?.sub(eval_dual(r, var, seed, unit)?),
        Expr::Neg(inner) => Ok(eval_dual(inner, var, seed, unit)?.neg()),
        Expr::Mul(l, r) => eval_dual(l, var, seed, unit)?.mul(eval_dual(r, var, seed, unit)?),
        Expr::Div(l, r) => eval_dual(l, var, seed, unit)?.div(eval_dual(r, var, seed, unit)?),
        Expr::Pow(base, p) => eval_dual(base, var, seed, unit)?.powr(*p),
        Expr::Sin(inner) => eval_dual(inner, var, seed, unit)?.sin(unit),
        Expr::Cos(inner) => eval_dual(inner, var, seed, unit)?.cos(unit),
    }
}

/// The slope of `e` at `var = x0`: evaluate over the seed `(x0, 1)` and read
/// off the increment coefficient.
pub fn derivative_at(e: &Expr, var: &str, x0: f64, unit: AngleUnit) -> Result<f64, MathError> {
    Ok(eval_dual(e, var, Dual::variable(x0), unit)?.dibbl)
}

/// Two-point rise over run between `x1` and `x2`.
pub fn secant_slope(
    e: &Expr,
    var: &str,
    x1: f64,
    x2: f64,
    unit: AngleUnit,
) -> Result<f64, MathError> {
    if x1 == x2 {
        return Err(MathError::CoincidentPoints);
    }
    let y1 = eval_numeric(e, var, x1, unit)?;
    let y2 = eval_numeric(e, var, x2, unit)?;
    let slope = (y2 - y1) / (x2 - x1);
    if slope.is_finite() {
        Ok(slope)
    } else {
        Err(MathError::NotFinite)
    }
}

/// The tangent line at `x0`: slope from the dual evaluation, intercept from
/// matching the curve's value at the point of tangency.
pub fn tangent_line(
    e: &Expr,
    var: &str,
    x0: f64,
    unit: AngleUnit,
) -> Result<TangentLine, MathError> {
    let at_point = eval_dual(e, var, Dual::variable(x0), unit)?;
    let slope = at_point.dibbl;
    let intercept = at_point.real - slope * x0;
    if intercept.is_finite() {
        Ok(TangentLine { intercept, slope })
    } else {
        Err(MathError::NotFinite)
    }
}

/// Exact-rational tangent line, available when the tree stays inside the
/// rational domain at a rational point: coefficients like `-128/7` come out
/// as fractions, not rounded decimals. `Ok(None)` means the expression or
/// exponents force the floating path.
pub fn tangent_line_exact(
    e: &Expr,
    var: &str,
    x0: &BigRational,
) -> Result<Option<(BigRational, BigRational)>, MathError> {
    let seed = ExactDual::variable(x0.clone());
    match exact::eval_dual_exact(e, var, &seed)? {
        Some(d) => {
            let intercept = &d.real - &d.dibbl * x0;
            Ok(Some((intercept, d.dibbl)))
        }
        None => Ok(None),
    }
}

/// Symbolic slope of the monomial `c·x^n`: coefficient `c·n`, exponent `n−1`.
pub fn power_rule(c: Rational64, n: Rational64) -> (Rational64, Rational64) {
    (c * n, n - Rational64::one())
}

/// Real roots of `a·t² + b·t + c`, computed in the cancellation-free form:
/// the larger-magnitude root first from `q = −(b + sign(b)·√disc)/2`, the
/// other as `c/q`.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Result<QuadraticRoots, MathError> {
    if a == 0.0 {
        return Err(MathError::NotQuadratic);
    }
    let discriminant = b * b - 4.0 * a * c;
    if !discriminant.is_finite() {
        return Err(MathError::NotFinite);
    }
    let roots = if discriminant < 0.0 {
        Vec::new()
    } else if discriminant == 0.0 {
        vec![-b / (2.0 * a)]
    } else {
        let q = -0.5 * (b + b.signum() * discriminant.sqrt());
        let mut pair = [q / a, c / q];
        if pair[0] > pair[1] {
            pair.swap(0, 1);
        }
        pair.to_vec()
    };
    if roots.iter().any(|r| !r.is_finite()) {
        return Err(MathError::NotFinite);
    }
    Ok(QuadraticRoots {
        discriminant,
        roots,
    })
}

/// Stationary point of `p0 + p1·t + p2·t²`: `t_m = −p1/(2·p2)` and the value
/// there.
pub fn quadratic_vertex(p0: f64, p1: f64, p2: f64) -> Result<Vertex, MathError> {
    if p2 == 0.0 {
        return Err(MathError::NotQuadratic);
    }
    let t_m = -p1 / (2.0 * p2);
    let value = p0 + p1 * t_m + p2 * t_m * t_m;
    if t_m.is_finite() && value.is_finite() {
        Ok(Vertex { t_m, value })
    } else {
        Err(MathError::NotFinite)
    }
}

/// Estimate the radians-per-unit scale of `unit` from the finite slope of
/// sine at zero: `sin(step in unit)/step`. Converges to [`AngleUnit::scale`]
/// as the step shrinks.
pub fn estimate_scale(unit: AngleUnit, step: f64) -> Result<f64, MathError> {
    if step == 0.0 {
        return Err(MathError::ZeroStep);
    }
    let estimate = unit.to_radians(step).sin() / step;
    if estimate.is_finite() {
        Ok(estimate)
    } else {
        Err(MathError::NotFinite)
    }
}

/// Evaluate `sin²θ + cos²θ − 1` over the dual seed `(θ, 1)` and return both
/// residual components. The value residual restates the Pythagorean
/// identity; the increment residual is `2(sinθ·sin′θ + cosθ·cos′θ)`, the
/// differential equation the identity forces, and vanishes in every unit.
pub fn pythagorean_residual(theta: f64, unit: AngleUnit) -> Result<(f64, f64), MathError> {
    let seed = Dual::variable(theta);
    let s = seed.sin(unit)?;
    let c = seed.cos(unit)?;
    let sum = s.mul(s)?.add(c.mul(c)?)?;
    let residual = sum.sub(Dual::new(1.0, 0.0))?;
    Ok((residual.real, residual.dibbl))
}
