//! Independent checks on the dual kernel: finite differences, convergence
//! order, and a brute-force binomial expansion truncated at the increment.
//!
//! Nothing here goes through the dual arithmetic being verified. The
//! difference quotients use plain numeric evaluation, and the binomial
//! expansion enumerates monomials literally, so agreement between the two
//! routes is evidence rather than tautology.

use crate::angle::AngleUnit;
use crate::engine::derivative_at;
use crate::error::MathError;
use crate::expr::{eval_numeric, Expr};

/// Which difference quotient produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffScheme {
    /// One-sided quotient `(f(x+h) − f(x))/h`, first-order accurate.
    Forward,
    /// Symmetric quotient `(f(x+h) − f(x−h))/(2h)`, second-order accurate.
    Central,
}

/// A finite-difference derivative estimate and the step that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffEstimate {
    pub value: f64,
    pub step: f64,
    pub scheme: DiffScheme,
}

/// Sentinel returned by [`convergence_order`] when the refined step already
/// reproduces the reference derivative exactly, leaving no error to halve.
pub const EXACT_AGREEMENT: f64 = f64::INFINITY;

/// Central difference quotient of `e` at `x0` with step `h > 0`.
pub fn central_difference(
    e: &Expr,
    var: &str,
    x0: f64,
    h: f64,
    unit: AngleUnit,
) -> Result<DiffEstimate, MathError> {
    if h <= 0.0 {
        return Err(MathError::NonPositiveStep);
    }
    let above = eval_numeric(e, var, x0 + h, unit)?;
    let below = eval_numeric(e, var, x0 - h, unit)?;
    let value = (above - below) / (2.0 * h);
    if !value.is_finite() {
        return Err(MathError::NotFinite);
    }
    Ok(DiffEstimate {
        value,
        step: h,
        scheme: DiffScheme::Central,
    })
}

/// Estimate the order `p` with which the central difference converges to the
/// dual derivative: `p = log2(err(h0)/err(h0/2))`. For the central scheme on
/// smooth functions this sits near 2. Returns [`EXACT_AGREEMENT`] when the
/// halved step has zero error.
pub fn convergence_order(
    e: &Expr,
    var: &str,
    x0: f64,
    h0: f64,
    unit: AngleUnit,
) -> Result<f64, MathError> {
    if h0 <= 0.0 {
        return Err(MathError::NonPositiveStep);
    }
    let reference = derivative_at(e, var, x0, unit)?;
    let coarse = (central_difference(e, var, x0, h0, unit)?.value - reference).abs();
    let fine = (central_difference(e, var, x0, h0 / 2.0, unit)?.value - reference).abs();
    if fine == 0.0 {
        return Ok(EXACT_AGREEMENT);
    }
    Ok((coarse / fine).log2())
}

/// The two terms of `(x + dx)^n` that survive `dx² = 0`, found by literally
/// expanding the n-fold product and discarding every monomial with two or
/// more increment factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialResult {
    /// Count of all-`x` monomials (always 1: one way to pick every `x`).
    pub value_coefficient: u64,
    /// Power of `x` on the surviving value term: `n`.
    pub value_power: u32,
    /// Count of single-increment monomials: `n`, one per factor position.
    pub dibbl_coefficient: u64,
    /// Power of `x` on the increment term: `n − 1`.
    pub dibbl_power: u32,
    /// Monomials discarded for carrying `dx²` or higher: `2^n − n − 1`.
    pub dropped: u64,
}

/// Expand `(x + dx)^n` by enumerating all `2^n` factor choices, for
/// `1 <= n <= 20`.
pub fn binomial_expand_mod_dibbl(n: u32) -> Result<BinomialResult, MathError> {
    if !(1..=20).contains(&n) {
        return Err(MathError::OutOfRange("binomial power must be in 1..=20"));
    }
    let mut value_coefficient = 0u64;
    let mut dibbl_coefficient = 0u64;
    let mut dropped = 0u64;
    for choice in 0u64..(1u64 << n) {
        match choice.count_ones() {
            0 => value_coefficient += 1,
            1 => dibbl_coefficient += 1,
            _ => dropped += 1,
        }
    }
    Ok(BinomialResult {
        value_coefficient,
        value_power: n,
        dibbl_coefficient,
        dibbl_power: n - 1,
        dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    const RAD: AngleUnit = AngleUnit::Radians;

    #[test]
    fn fourth_power_slope_by_central_difference() {
        let e = parse("x^4").unwrap();
        let est = central_difference(&e, "x", 3.0, 1e-4, RAD).unwrap();
        assert!((est.value - 108.0).abs() < 1e-4);
        assert_eq!(est.scheme, DiffScheme::Central);
        assert_eq!(est.step, 1e-4);
    }

    #[test]
    fn central_difference_is_exact_on_lines() {
        let e = parse("3+2*x").unwrap();
        // dyadic steps keep every intermediate exactly representable
        for h in [1.0, 0.5, 0.25] {
            assert_eq!(central_difference(&e, "x", 1.0, h, RAD).unwrap().value, 2.0);
        }
        // otherwise exact up to rounding of the endpoint evaluations
        let est = central_difference(&e, "x", 1.0, 1e-3, RAD).unwrap();
        assert!((est.value - 2.0).abs() < 1e-11);
    }

    #[test]
    fn sine_slope_at_zero_is_one() {
        let e = parse("sin(x)").unwrap();
        let est = central_difference(&e, "x", 0.0, 1e-3, RAD).unwrap();
        assert!((est.value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn square_root_slope_matches_dual_result() {
        let e = parse("x^(1/2)").unwrap();
        let est = central_difference(&e, "x", 4.0, 1e-5, RAD).unwrap();
        assert!((est.value - 0.25).abs() < 1e-7);
    }

    #[test]
    fn step_must_be_positive() {
        let e = parse("x").unwrap();
        assert_eq!(
            central_difference(&e, "x", 0.0, 0.0, RAD),
            Err(MathError::NonPositiveStep)
        );
        assert_eq!(
            central_difference(&e, "x", 0.0, -1e-3, RAD),
            Err(MathError::NonPositiveStep)
        );
    }

    #[test]
    fn central_scheme_is_second_order() {
        let quartic = parse("x^4").unwrap();
        let p = convergence_order(&quartic, "x", 3.0, 1e-2, RAD).unwrap();
        assert!((1.8..=2.2).contains(&p), "order {p}");
        let sine = parse("sin(x)").unwrap();
        let p = convergence_order(&sine, "x", 1.0, 1e-2, RAD).unwrap();
        assert!((1.8..=2.2).contains(&p), "order {p}");
    }

    #[test]
    fn quadratics_agree_exactly_at_dyadic_steps() {
        // All arithmetic below is exact in binary floating point, so the
        // central difference reproduces the slope with zero error.
        let e = parse("1+3*t+2*t^2").unwrap();
        let p = convergence_order(&e, "t", 3.0, 1.0, RAD).unwrap();
        assert_eq!(p, EXACT_AGREEMENT);
    }

    #[test]
    fn binomial_smallest_cases() {
        let two = binomial_expand_mod_dibbl(2).unwrap();
        assert_eq!(two.value_power, 2);
        assert_eq!(two.dibbl_coefficient, 2);
        assert_eq!(two.dibbl_power, 1);
        assert_eq!(two.dropped, 1);

        let one = binomial_expand_mod_dibbl(1).unwrap();
        assert_eq!(one.dibbl_coefficient, 1);
        assert_eq!(one.dropped, 0);

        let four = binomial_expand_mod_dibbl(4).unwrap();
        assert_eq!(four.value_coefficient, 1);
        assert_eq!(four.dibbl_coefficient, 4);
        assert_eq!(four.dropped, 11);
    }

    #[test]
    fn binomial_range_is_enforced() {
        assert!(binomial_expand_mod_dibbl(0).is_err());
        assert!(binomial_expand_mod_dibbl(21).is_err());
        assert!(binomial_expand_mod_dibbl(20).is_ok());
    }

    #[test]
    fn dropped_count_formula_holds_across_the_range() {
        for n in 1..=20u32 {
            let r = binomial_expand_mod_dibbl(n).unwrap();
            assert_eq!(r.dropped, (1u64 << n) - u64::from(n) - 1);
            assert_eq!(r.value_coefficient, 1);
            assert_eq!(r.dibbl_coefficient, u64::from(n));
        }
    }
}
