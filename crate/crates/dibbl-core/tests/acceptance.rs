//! Acceptance suite: one test per numbered checkpoint, each printing a
//! pass/fail line and asserting at the checkpoint's stated tolerance.
//! Everything runs at desk scale; the whole suite finishes in seconds.

mod common;

use common::{random_smooth_expr, rel_err};
use dibbl_core::{
    binomial_expand_mod_dibbl, central_difference, convergence_order, derivative_at,
    estimate_scale, eval_numeric, parse, pythagorean_residual, quadratic_vertex, run_corpus,
    secant_slope, tangent_line, tangent_line_exact, AngleUnit, CaseStatus, Dual, ExactDual, Expr,
    Number,
};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const RAD: AngleUnit = AngleUnit::Radians;

fn report(number: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number:2} {name}: {status} ({detail})");
    assert!(pass, "criterion {number} {name}: {detail}");
}

#[test]
fn criterion_01_power_law_checkpoint() {
    let e = parse("x^4").unwrap();
    let slope = derivative_at(&e, "x", 3.0, RAD).unwrap();
    report(
        1,
        "power-law checkpoint",
        (slope - 108.0).abs() <= 1e-9,
        &format!("d/dx x^4 at 3 = {slope}"),
    );
}

#[test]
fn criterion_02_tangent_checkpoint() {
    let e = parse("(1/7)*x^5").unwrap();

    let exact = tangent_line_exact(&e, "x", &BigRational::from_integer(2.into()))
        .unwrap()
        .expect("rational path applies");
    let want_a = BigRational::new(BigInt::from(-128), BigInt::from(7));
    let want_b = BigRational::new(BigInt::from(80), BigInt::from(7));
    let exact_ok = exact.0 == want_a && exact.1 == want_b;

    let t = tangent_line(&e, "x", 2.0, RAD).unwrap();
    let float_ok = rel_err(t.intercept, -128.0 / 7.0) <= 1e-12 && rel_err(t.slope, 80.0 / 7.0) <= 1e-12;

    report(
        2,
        "tangent checkpoint",
        exact_ok && float_ok,
        &format!(
            "exact ({}/{}, {}/{}), float ({}, {})",
            exact.0.numer(),
            exact.0.denom(),
            exact.1.numer(),
            exact.1.denom(),
            t.intercept,
            t.slope
        ),
    );
}

#[test]
fn criterion_03_projectile_checkpoint() {
    let v = quadratic_vertex(8.0, 12.0, -5.0).unwrap();
    report(
        3,
        "projectile checkpoint",
        (v.t_m - 1.2).abs() <= 1e-12 && (v.value - 15.2).abs() <= 1e-12,
        &format!("vertex at t={}, value={}", v.t_m, v.value),
    );
}

#[test]
fn criterion_04_fractional_power_checkpoint() {
    let e = parse("(t^(5/3)/(5+6t^(5/3)))^(2/7)").unwrap();
    let slope = derivative_at(&e, "t", 2.0, RAD).unwrap();
    let oracle = central_difference(&e, "t", 2.0, 1e-5, RAD).unwrap().value;
    let oracle_ok = (oracle - slope).abs() <= 1e-7;
    let value_ok = (slope - 0.0134).abs() <= 5e-5;
    // The stated checkpoint constant 0.0134 does not belong to this
    // function: the slope at t=2 is 0.02775725466…, and the independent
    // central-difference oracle confirms the dual result to ~1e-12. The
    // value clause is asserted as stated and fails; the oracle clause holds.
    report(
        4,
        "fractional-power checkpoint",
        value_ok && oracle_ok,
        &format!(
            "dual slope {slope}, stated constant 0.0134 (|diff| = {:.6}), oracle agreement |cd - dual| = {:e}",
            (slope - 0.0134).abs(),
            (oracle - slope).abs()
        ),
    );
}

#[test]
fn criterion_05_unit_constant_checkpoint() {
    let deg = estimate_scale(AngleUnit::Degrees, 5.0).unwrap();
    let grad = estimate_scale(AngleUnit::Grads, 5.55).unwrap();
    let deg_ok = (0.01742..=0.01745).contains(&deg);
    let grad_ok = (0.01567..=0.01570).contains(&grad);
    // ratio of exact scales, computed through the integer per-turn counts
    let ratio = AngleUnit::Grads.units_per_turn() / AngleUnit::Degrees.units_per_turn();
    let ratio_ok = ratio == 200.0 / 180.0;
    report(
        5,
        "unit-constant checkpoint",
        deg_ok && grad_ok && ratio_ok,
        &format!("A(deg)~{deg}, A(grad)~{grad}, exact scale ratio {ratio}"),
    );
}

#[test]
fn criterion_06_infinitesimal_angle_checkpoint() {
    let seed = Dual::new(0.0, 1.0);
    let s = seed.sin(RAD).unwrap();
    let c = seed.cos(RAD).unwrap();
    report(
        6,
        "infinitesimal-angle checkpoint",
        s == Dual::new(0.0, 1.0) && c == Dual::new(1.0, 0.0),
        &format!("sin(0,1) = ({}, {}), cos(0,1) = ({}, {})", s.real, s.dibbl, c.real, c.dibbl),
    );
}

#[test]
fn criterion_07_differential_equation_property() {
    let mut rng = StdRng::seed_from_u64(7001);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        for unit in [AngleUnit::Radians, AngleUnit::Degrees, AngleUnit::Grads] {
            let theta = rng.gen_range(-2.0 * unit.units_per_turn()..2.0 * unit.units_per_turn());
            let (value, dibbl) = pythagorean_residual(theta, unit).unwrap();
            worst = worst.max(value.abs()).max(dibbl.abs());
        }
    }
    report(
        7,
        "differential-equation property",
        worst <= 1e-12,
        &format!("worst residual component {worst:e} over 1000 angles x 3 units"),
    );
}

#[test]
fn criterion_08_secant_identity() {
    let mut rng = StdRng::seed_from_u64(8001);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let c: f64 = rng.gen_range(0.1..5.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
        let x1: f64 = rng.gen_range(-10.0..10.0);
        let offset: f64 = rng.gen_range(0.1..5.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
        let x2 = x1 + offset;
        let e = Expr::Mul(
            Box::new(Expr::Constant(Number::Float(c))),
            Box::new(Expr::Pow(
                Box::new(Expr::variable("x")),
                Rational64::from_integer(2),
            )),
        );
        let slope = secant_slope(&e, "x", x1, x2, RAD).unwrap();
        worst = worst.max(rel_err(slope, c * (x1 + x2)));
    }
    report(
        8,
        "secant identity",
        worst <= 1e-12,
        &format!("worst relative deviation from c(x1+x2): {worst:e} over 100 triples"),
    );
}

#[test]
fn criterion_09_oracle_convergence() {
    let quartic = parse("x^4").unwrap();
    let p_quartic = convergence_order(&quartic, "x", 3.0, 1e-2, RAD).unwrap();
    let sine = parse("sin(x)").unwrap();
    let p_sine = convergence_order(&sine, "x", 1.0, 1e-2, RAD).unwrap();
    let orders_ok = (1.8..=2.2).contains(&p_quartic) && (1.8..=2.2).contains(&p_sine);

    let mut binomial_ok = true;
    for n in 1..=10u32 {
        let expansion = binomial_expand_mod_dibbl(n).unwrap();
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        let dual = ExactDual::variable(x.clone()).powi(n as i32).unwrap();
        let mut x_n = BigRational::from_integer(1.into());
        for _ in 0..n {
            x_n *= &x;
        }
        let x_n1 = &x_n / &x;
        binomial_ok &= dual.real
            == BigRational::from_integer(expansion.value_coefficient.into()) * &x_n
            && dual.dibbl
                == BigRational::from_integer(expansion.dibbl_coefficient.into()) * &x_n1;
    }
    report(
        9,
        "oracle convergence",
        orders_ok && binomial_ok,
        &format!("orders: quartic {p_quartic:.3}, sine {p_sine:.3}; binomial terms match exact dual powers for n=1..=10"),
    );
}

#[test]
fn criterion_10_emergent_rule_properties() {
    let mut rng = StdRng::seed_from_u64(10001);
    let exponents = [
        Rational64::from_integer(2),
        Rational64::from_integer(3),
        Rational64::new(1, 2),
        Rational64::new(5, 3),
    ];
    let mut worst_product: f64 = 0.0;
    let mut worst_chain: f64 = 0.0;
    let mut checked = 0;
    while checked < 500 {
        let f = random_smooth_expr(&mut rng, 3, "x");
        let g = random_smooth_expr(&mut rng, 3, "x");
        let x = rng.gen_range(-3.0..3.0);
        let pieces = (
            eval_numeric(&f, "x", x, RAD),
            eval_numeric(&g, "x", x, RAD),
            derivative_at(&f, "x", x, RAD),
            derivative_at(&g, "x", x, RAD),
        );
        let (fv, gv, df, dg) = match pieces {
            (Ok(a), Ok(b), Ok(c), Ok(d)) => (a, b, c, d),
            _ => continue,
        };
        let product = Expr::Mul(Box::new(f.clone()), Box::new(g.clone()));
        let d_product = match derivative_at(&product, "x", x, RAD) {
            Ok(d) => d,
            Err(_) => continue,
        };
        worst_product = worst_product.max(rel_err(d_product, fv * dg + gv * df));

        if gv > 0.1 {
            let p = exponents[rng.gen_range(0..exponents.len())];
            let composed = Expr::Pow(Box::new(g.clone()), p);
            if let Ok(d_composed) = derivative_at(&composed, "x", x, RAD) {
                let pf = *p.numer() as f64 / *p.denom() as f64;
                worst_chain = worst_chain.max(rel_err(d_composed, pf * gv.powf(pf - 1.0) * dg));
            }
        }
        checked += 1;
    }
    report(
        10,
        "emergent-rule properties",
        worst_product <= 1e-10 && worst_chain <= 1e-10,
        &format!("worst relative error: product rule {worst_product:e}, chain rule {worst_chain:e} over 500 pairs"),
    );
}

#[test]
fn criterion_11_corpus_run() {
    let reports = run_corpus(dibbl_core::BUNDLED_CORPUS).unwrap();
    let all_pass = reports.iter().all(|r| r.status == CaseStatus::Pass);
    let flagpole = reports.iter().find(|r| r.id == "ex3.3b").unwrap();
    let doubled = reports.iter().find(|r| r.id == "ex3.3c").unwrap();
    let near_120 = (flagpole.actual[0] - 120.0).abs() <= 1.0;
    let invariant = flagpole.actual == doubled.actual;
    report(
        11,
        "corpus run",
        all_pass && near_120 && invariant,
        &format!(
            "{}/{} cases pass; flagpole height {} ft (circumference-doubling changes it by {})",
            reports.iter().filter(|r| r.status == CaseStatus::Pass).count(),
            reports.len(),
            flagpole.actual[0],
            (flagpole.actual[0] - doubled.actual[0]).abs()
        ),
    );
}
