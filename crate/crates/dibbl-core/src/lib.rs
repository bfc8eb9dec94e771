//! Forward-mode differentiation built on a nilpotent infinitesimal.
//!
//! The kernel is [`Dual`]: a value paired with the coefficient of an
//! increment `dx` whose square is exactly zero, so slopes fall out of plain
//! arithmetic. On top of it sit a small single-variable expression language
//! ([`Expr`]), slope operations (derivatives, secants, tangent lines,
//! quadratic vertex and roots), angular units with their derivative scales,
//! an independent finite-difference oracle, and a JSON exercise corpus
//! runner used as a verification harness.
//!
//! ```
//! use dibbl_core::{derivative_at, parse, AngleUnit};
//!
//! let e = parse("x^4").unwrap();
//! let slope = derivative_at(&e, "x", 3.0, AngleUnit::Radians).unwrap();
//! assert_eq!(slope, 108.0);
//! ```

pub mod angle;
pub mod corpus;
pub mod dual;
pub mod engine;
pub mod error;
pub mod exact;
pub mod expr;
pub mod oracle;
pub mod table;

pub use angle::AngleUnit;
pub use corpus::{run_case, run_corpus, CaseKind, CaseReport, CaseStatus, ExerciseCase, BUNDLED_CORPUS};
pub use dual::Dual;
pub use engine::{
    derivative_at, estimate_scale, eval_dual, pythagorean_residual, power_rule, quadratic_roots,
    quadratic_vertex, secant_slope, tangent_line, tangent_line_exact, QuadraticRoots, TangentLine,
    Vertex,
};
pub use error::MathError;
pub use exact::ExactDual;
pub use expr::{eval_numeric, parse, Expr, Number, ParseError};
pub use oracle::{
    binomial_expand_mod_dibbl, central_difference, convergence_order, BinomialResult,
    DiffEstimate, DiffScheme, EXACT_AGREEMENT,
};
pub use table::{sample_table, to_csv, to_json, TableRow};
