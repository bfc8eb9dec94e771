//! Helpers shared by the integration test targets: seeded random inputs and
//! closeness predicates.

#![allow(dead_code)]

use dibbl_core::{Expr, Number};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::Rng;

/// |a − b| scaled by max(1, |a|, |b|).
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

pub fn assert_rel_close(a: f64, b: f64, tol: f64, what: &str) {
    let err = rel_err(a, b);
    assert!(err <= tol, "{what}: {a} vs {b} (rel err {err:e} > {tol:e})");
}

/// A random expression that is total on the whole real line: constants, the
/// variable, sums, differences, products, small non-negative integer powers,
/// and sines/cosines. No division and no fractional powers, so evaluation
/// can only fail by overflow, which the callers skip.
pub fn random_smooth_expr(rng: &mut StdRng, depth: u32, var: &str) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.4) {
            let numer = rng.gen_range(-5i64..=5);
            let denom = rng.gen_range(1i64..=4);
            Expr::Constant(Number::Rational(Rational64::new(numer, denom)))
        } else {
            Expr::Variable(var.to_string())
        };
    }
    match rng.gen_range(0..6) {
        0 => Expr::Add(
            Box::new(random_smooth_expr(rng, depth - 1, var)),
            Box::new(random_smooth_expr(rng, depth - 1, var)),
        ),
        1 => Expr::Sub(
            Box::new(random_smooth_expr(rng, depth - 1, var)),
            Box::new(random_smooth_expr(rng, depth - 1, var)),
        ),
        2 => Expr::Mul(
            Box::new(random_smooth_expr(rng, depth - 1, var)),
            Box::new(random_smooth_expr(rng, depth - 1, var)),
        ),
        3 => Expr::Pow(
            Box::new(random_smooth_expr(rng, depth - 1, var)),
            Rational64::from_integer(rng.gen_range(0..=4)),
        ),
        4 => Expr::Sin(Box::new(random_smooth_expr(rng, depth - 1, var))),
        _ => Expr::Cos(Box::new(random_smooth_expr(rng, depth - 1, var))),
    }
}
