//! Sampled function tables: (x, value, slope) rows for plotting or export.

use crate::angle::AngleUnit;
use crate::engine::derivative_at;
use crate::error::MathError;
use crate::expr::{eval_numeric, Expr};
use serde::Serialize;

/// One sample: the point, the function value, and the slope there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub x: f64,
    pub value: f64,
    pub slope: f64,
}

/// Sample `e` at `from, from+step, …` up to and including `to`
/// (with half-ulp slack so accumulated rounding cannot drop the last row).
pub fn sample_table(
    e: &Expr,
    var: &str,
    from: f64,
    to: f64,
    step: f64,
    unit: AngleUnit,
) -> Result<Vec<TableRow>, MathError> {
    if !(step > 0.0 && from < to) || !from.is_finite() || !to.is_finite() {
        return Err(MathError::BadRange);
    }
    let limit = to + step * 1e-9;
    let mut rows = Vec::new();
    for i in 0.. {
        let x = from + i as f64 * step;
        if x > limit {
            break;
        }
        rows.push(TableRow {
            x,
            value: eval_numeric(e, var, x, unit)?,
            slope: derivative_at(e, var, x, unit)?,
        });
    }
    Ok(rows)
}

/// Render rows as CSV: `x,value,slope` header, dot decimal separator, LF
/// line ends, shortest round-trip float formatting.
pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("x,value,slope\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.x, row.value, row.slope));
    }
    out
}

/// Render rows as a JSON array of `{x, value, slope}` objects.
pub fn to_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table rows always serialize")
}
