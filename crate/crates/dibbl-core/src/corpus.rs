//! Exercise corpus: JSON fixtures that replay worked answers through the
//! engine and report pass/fail per case.
//!
//! A corpus file is a UTF-8 JSON array of cases. Unknown fields are ignored,
//! `unit` defaults to radians, and angles are stored with their unit tags
//! rather than pre-converted, since several cases are specifically about
//! units. A malformed individual case degrades to an error report; the rest
//! of the run continues.

use crate::angle::AngleUnit;
use crate::engine::{
    derivative_at, estimate_scale, pythagorean_residual, quadratic_roots, quadratic_vertex,
    tangent_line,
};
use crate::error::MathError;
use crate::expr::{eval_numeric, parse, Expr};
use serde::Deserialize;
use std::fmt;

/// The bundled corpus shipped with the crate.
pub const BUNDLED_CORPUS: &str = include_str!("../corpus/exercises.json");

/// What a case asks the engine to do. The kind fixes the arity of `points`
/// and of `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum CaseKind {
    /// Evaluate `expression` at `points[0]`; scalar expected.
    #[serde(rename = "eval")]
    Eval,
    /// Slope of `expression` at `points[0]`; scalar expected.
    #[serde(rename = "derivative")]
    Derivative,
    /// Tangent line at `points[0]`; expected pair `[intercept, slope]`.
    #[serde(rename = "tangent")]
    Tangent,
    /// Vertex of the quadratic `expression`; expected pair `[t_m, value]`.
    #[serde(rename = "vertex")]
    Vertex,
    /// Unit-scale estimate with step `points[0]`; scalar expected.
    #[serde(rename = "estimate_A")]
    EstimateA,
    /// Pythagorean residual at angle `points[0]`; expected pair.
    #[serde(rename = "residual")]
    Residual,
    /// Largest real root of `points = [a, b, c]`; scalar expected.
    #[serde(rename = "roots")]
    Roots,
}

/// One corpus entry.
#[derive(Debug, Clone, Deserialize)]
pub struct ExerciseCase {
    pub id: String,
    pub kind: CaseKind,
    #[serde(default)]
    pub expression: String,
    #[serde(default = "default_variable")]
    pub variable: String,
    #[serde(default)]
    pub points: Vec<f64>,
    #[serde(default)]
    pub unit: AngleUnit,
    pub expected: Expected,
    pub tolerance: f64,
    #[serde(default)]
    pub provenance: String,
}

fn default_variable() -> String {
    "x".to_string()
}

/// Expected value: a scalar or a pair, depending on the kind.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Scalar(f64),
    Pair([f64; 2]),
}

impl Expected {
    fn values(self) -> Vec<f64> {
        match self {
            Expected::Scalar(v) => vec![v],
            Expected::Pair(p) => p.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseStatus::Pass => "PASS",
            CaseStatus::Fail => "FAIL",
            CaseStatus::Error => "ERROR",
        })
    }
}

/// Outcome of one case: computed values against expectations, with the
/// largest componentwise deviation.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub id: String,
    pub status: CaseStatus,
    pub actual: Vec<f64>,
    pub expected: Vec<f64>,
    pub delta: f64,
    pub message: Option<String>,
}

impl CaseReport {
    fn error(id: &str, message: String) -> CaseReport {
        CaseReport {
            id: id.to_string(),
            status: CaseStatus::Error,
            actual: Vec::new(),
            expected: Vec::new(),
            delta: f64::NAN,
            message: Some(message),
        }
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.id)?;
        if self.status == CaseStatus::Error {
            if let Some(msg) = &self.message {
                write!(f, " ({msg})")?;
            }
            return Ok(());
        }
        write!(
            f,
            " expected={} actual={} delta={}",
            join(&self.expected),
            join(&self.actual),
            self.delta
        )
    }
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Run every case in a corpus document, in file order.
///
/// A document that is not a JSON array fails outright; individual cases that
/// do not deserialize or whose arity is wrong produce error reports.
pub fn run_corpus(json: &str) -> Result<Vec<CaseReport>, serde_json::Error> {
    let raw: Vec<serde_json::Value> = serde_json::from_str(json)?;
    let reports = raw
        .iter()
        .enumerate()
        .map(|(index, value)| match serde_json::from_value::<ExerciseCase>(value.clone()) {
            Ok(case) => run_case(&case),
            Err(err) => {
                let id = value
                    .get("id")
                    .and_then(|v| v.as_str())
                    .map(str::to_string)
                    .unwrap_or_else(|| format!("case[{index}]"));
                CaseReport::error(&id, format!("malformed case: {err}"))
            }
        })
        .collect();
    Ok(reports)
}

/// Execute one case and compare against its expectation, componentwise, at
/// its stated absolute tolerance.
pub fn run_case(case: &ExerciseCase) -> CaseReport {
    if case.tolerance.is_nan() || case.tolerance <= 0.0 {
        return CaseReport::error(&case.id, "tolerance must be positive".to_string());
    }
    match compute_actual(case) {
        Ok(actual) => {
            let expected = case.expected.values();
            if actual.len() != expected.len() {
                return CaseReport::error(
                    &case.id,
                    format!(
                        "expected {} component(s), computed {}",
                        expected.len(),
                        actual.len()
                    ),
                );
            }
            let delta = actual
                .iter()
                .zip(&expected)
                .map(|(a, e)| (a - e).abs())
                .fold(0.0f64, f64::max);
            let status = if delta <= case.tolerance {
                CaseStatus::Pass
            } else {
                CaseStatus::Fail
            };
            CaseReport {
                id: case.id.clone(),
                status,
                actual,
                expected,
                delta,
                message: None,
            }
        }
        Err(message) => CaseReport::error(&case.id, message),
    }
}

fn compute_actual(case: &ExerciseCase) -> Result<Vec<f64>, String> {
    if case.points.iter().any(|p| !p.is_finite()) {
        return Err("points must be finite".to_string());
    }
    let point = |index: usize| -> Result<f64, String> {
        case.points
            .get(index)
            .copied()
            .ok_or_else(|| format!("kind needs at least {} point(s)", index + 1))
    };
    match case.kind {
        CaseKind::Eval => {
            let e = parse_case_expr(case)?;
            let v = eval_numeric(&e, &case.variable, point(0)?, case.unit).map_err(stringify)?;
            Ok(vec![v])
        }
        CaseKind::Derivative => {
            let e = parse_case_expr(case)?;
            let d = derivative_at(&e, &case.variable, point(0)?, case.unit).map_err(stringify)?;
            Ok(vec![d])
        }
        CaseKind::Tangent => {
            let e = parse_case_expr(case)?;
            let t = tangent_line(&e, &case.variable, point(0)?, case.unit).map_err(stringify)?;
            Ok(vec![t.intercept, t.slope])
        }
        CaseKind::Vertex => {
            let e = parse_case_expr(case)?;
            let (p0, p1, p2) = quadratic_coefficients(&e, case)?;
            let v = quadratic_vertex(p0, p1, p2).map_err(stringify)?;
            Ok(vec![v.t_m, v.value])
        }
        CaseKind::EstimateA => {
            let a = estimate_scale(case.unit, point(0)?).map_err(stringify)?;
            Ok(vec![a])
        }
        CaseKind::Residual => {
            let (value, dibbl) = pythagorean_residual(point(0)?, case.unit).map_err(stringify)?;
            Ok(vec![value, dibbl])
        }
        CaseKind::Roots => {
            if case.points.len() != 3 {
                return Err("roots kind needs points = [a, b, c]".to_string());
            }
            let r = quadratic_roots(case.points[0], case.points[1], case.points[2])
                .map_err(stringify)?;
            match r.roots.last() {
                Some(root) => Ok(vec![*root]),
                None => Err("quadratic has no real roots".to_string()),
            }
        }
    }
}

fn parse_case_expr(case: &ExerciseCase) -> Result<Expr, String> {
    if case.expression.is_empty() {
        return Err("case has no expression".to_string());
    }
    parse(&case.expression).map_err(|e| e.to_string())
}

/// Recover `p0 + p1·t + p2·t²` from any quadratic expression by sampling at
/// 0, 1, and −1; exact for polynomials of degree at most two.
fn quadratic_coefficients(e: &Expr, case: &ExerciseCase) -> Result<(f64, f64, f64), String> {
    let at = |x: f64| eval_numeric(e, &case.variable, x, case.unit).map_err(stringify);
    let f0 = at(0.0)?;
    let f1 = at(1.0)?;
    let f_neg1 = at(-1.0)?;
    let p1 = (f1 - f_neg1) / 2.0;
    let p2 = (f1 + f_neg1 - 2.0 * f0) / 2.0;
    Ok((f0, p1, p2))
}

fn stringify(err: MathError) -> String {
    err.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_parses_and_passes() {
        let reports = run_corpus(BUNDLED_CORPUS).unwrap();
        assert!(!reports.is_empty());
        for report in &reports {
            assert_eq!(report.status, CaseStatus::Pass, "{report}");
        }
    }

    #[test]
    fn apex_case_expects_the_textbook_height() {
        let reports = run_corpus(BUNDLED_CORPUS).unwrap();
        let apex = reports.iter().find(|r| r.id == "ex2.8e").unwrap();
        assert_eq!(apex.expected, vec![1.2, 15.2]);
        assert_eq!(apex.status, CaseStatus::Pass);
    }

    #[test]
    fn flagpole_ignores_the_circumference() {
        let reports = run_corpus(BUNDLED_CORPUS).unwrap();
        let single = reports.iter().find(|r| r.id == "ex3.3b").unwrap();
        let doubled = reports.iter().find(|r| r.id == "ex3.3c").unwrap();
        assert_eq!(single.actual, doubled.actual);
        assert!((single.actual[0] - 120.0).abs() <= 1.0);
    }

    #[test]
    fn malformed_case_degrades_to_an_error_report() {
        let json = r#"[
            {"id": "good", "kind": "eval", "expression": "x", "points": [1], "expected": 1, "tolerance": 1e-12},
            {"id": "bad", "kind": "no-such-kind", "expected": 0, "tolerance": 1},
            {"id": "unparsable", "kind": "eval", "expression": "1+", "points": [0], "expected": 0, "tolerance": 1}
        ]"#;
        let reports = run_corpus(json).unwrap();
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].status, CaseStatus::Pass);
        assert_eq!(reports[1].status, CaseStatus::Error);
        assert_eq!(reports[2].status, CaseStatus::Error);
    }

    #[test]
    fn malformed_document_is_a_hard_error() {
        assert!(run_corpus("{not json").is_err());
        assert!(run_corpus(r#"{"id": "not-an-array"}"#).is_err());
    }

    #[test]
    fn unknown_fields_are_ignored() {
        let json = r#"[{"id": "w", "kind": "eval", "expression": "x", "points": [2],
                        "expected": 2, "tolerance": 1e-12, "w": 99, "note": "extra"}]"#;
        let reports = run_corpus(json).unwrap();
        assert_eq!(reports[0].status, CaseStatus::Pass);
    }

    #[test]
    fn nonpositive_tolerance_is_rejected() {
        let json = r#"[{"id": "t", "kind": "eval", "expression": "x", "points": [1],
                        "expected": 1, "tolerance": 0}]"#;
        let reports = run_corpus(json).unwrap();
        assert_eq!(reports[0].status, CaseStatus::Error);
    }

    #[test]
    fn failing_case_reports_fail_not_error() {
        let json = r#"[{"id": "off", "kind": "eval", "expression": "x", "points": [1],
                        "expected": 2, "tolerance": 1e-6}]"#;
        let reports = run_corpus(json).unwrap();
        assert_eq!(reports[0].status, CaseStatus::Fail);
        assert_eq!(reports[0].delta, 1.0);
    }
}
