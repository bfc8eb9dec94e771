//! `dibbl` — a desk calculator for values, slopes, and tangent lines.
//!
//! Exit codes: 0 success, 1 corpus verification failed, 2 usage or parse
//! errors, 3 math domain errors.

mod format;

use clap::{Parser, Subcommand, ValueEnum};
use dibbl_core::{
    corpus, derivative_at, estimate_scale, eval_numeric, parse, sample_table, tangent_line,
    tangent_line_exact, to_csv, to_json, AngleUnit, CaseStatus, MathError, ParseError,
};
use format::fmt_sig;
use num_rational::BigRational;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "dibbl", version, about = "Evaluate, differentiate, and tabulate single-variable expressions using an infinitesimal whose square is zero")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum UnitArg {
    Rad,
    Deg,
    Grad,
}

impl From<UnitArg> for AngleUnit {
    fn from(unit: UnitArg) -> AngleUnit {
        match unit {
            UnitArg::Rad => AngleUnit::Radians,
            UnitArg::Deg => AngleUnit::Degrees,
            UnitArg::Grad => AngleUnit::Grads,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression at a point
    Eval {
        expr: String,
        /// Point to evaluate at
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        at: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::Rad)]
        unit: UnitArg,
        /// Name of the independent variable
        #[arg(long, default_value = "x")]
        var: String,
    },
    /// Slope of an expression at a point
    Deriv {
        expr: String,
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        at: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::Rad)]
        unit: UnitArg,
        #[arg(long, default_value = "x")]
        var: String,
    },
    /// Tangent line at a point, printed as "intercept slope"
    Tangent {
        expr: String,
        /// Point of tangency; decimals and fractions like 5/3 stay exact
        /// when the expression allows it
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = UnitArg::Rad)]
        unit: UnitArg,
        #[arg(long, default_value = "x")]
        var: String,
    },
    /// Sample x, value, and slope over a range
    Table {
        expr: String,
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        step: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::Rad)]
        unit: UnitArg,
        #[arg(long, default_value = "x")]
        var: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Angular-unit utilities
    Units {
        /// Estimate the radians-per-unit scale A from the slope of sine at 0
        #[arg(long = "estimate-A", required = true)]
        estimate_a: bool,
        /// Secant step, in the chosen unit
        #[arg(long, value_parser = finite_f64, allow_hyphen_values = true)]
        step: f64,
        #[arg(long, value_enum, default_value_t = UnitArg::Rad)]
        unit: UnitArg,
    },
    /// Run an exercise corpus and report each case
    Verify {
        /// Corpus JSON path; the bundled corpus when omitted
        corpus: Option<PathBuf>,
    },
}

fn finite_f64(s: &str) -> Result<f64, String> {
    let v = f64::from_str(s).map_err(|e| e.to_string())?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("value must be finite".to_string())
    }
}

enum CliError {
    Parse(ParseError),
    Math(MathError),
    Usage(String),
    CasesFailed,
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<MathError> for CliError {
    fn from(e: MathError) -> Self {
        CliError::Math(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(e)) => {
            eprintln!("error: {e}");
            match e {
                MathError::ZeroStep
                | MathError::NonPositiveStep
                | MathError::BadRange
                | MathError::OutOfRange(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
        Err(CliError::CasesFailed) => ExitCode::from(1),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eval { expr, at, unit, var } => {
            let e = parse(&expr)?;
            let value = eval_numeric(&e, &var, at, unit.into())?;
            println!("{}", fmt_sig(value, 12, true));
            Ok(())
        }
        Command::Deriv { expr, at, unit, var } => {
            let e = parse(&expr)?;
            let slope = derivative_at(&e, &var, at, unit.into())?;
            println!("{}", fmt_sig(slope, 12, true));
            Ok(())
        }
        Command::Tangent { expr, at, unit, var } => {
            let e = parse(&expr)?;
            if let Some(x0) = parse_exact_point(&at) {
                if let Some((intercept, slope)) = tangent_line_exact(&e, &var, &x0)? {
                    println!("{} {}", fmt_rational(&intercept), fmt_rational(&slope));
                    return Ok(());
                }
            }
            let x0 = finite_f64(&at).map_err(|msg| CliError::Usage(format!("--at: {msg}")))?;
            let t = tangent_line(&e, &var, x0, unit.into())?;
            println!("{} {}", fmt_sig(t.intercept, 12, true), fmt_sig(t.slope, 12, true));
            Ok(())
        }
        Command::Table { expr, from, to, step, unit, var, format } => {
            let e = parse(&expr)?;
            let rows = sample_table(&e, &var, from, to, step, unit.into())?;
            match format {
                TableFormat::Csv => print!("{}", to_csv(&rows)),
                TableFormat::Json => println!("{}", to_json(&rows)),
            }
            Ok(())
        }
        Command::Units { estimate_a: _, step, unit } => {
            let estimate = estimate_scale(unit.into(), step)?;
            println!("{}", fmt_sig(estimate, 6, false));
            Ok(())
        }
        Command::Verify { corpus: path } => {
            let text = match &path {
                Some(p) => std::fs::read_to_string(p)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?,
                None => corpus::BUNDLED_CORPUS.to_string(),
            };
            let reports = corpus::run_corpus(&text)
                .map_err(|e| CliError::Usage(format!("malformed corpus: {e}")))?;
            let mut passed = 0usize;
            let mut failed = 0usize;
            let mut errored = 0usize;
            for report in &reports {
                println!("{report}");
                match report.status {
                    CaseStatus::Pass => passed += 1,
                    CaseStatus::Fail => failed += 1,
                    CaseStatus::Error => errored += 1,
                }
            }
            println!(
                "{} passed, {} failed, {} errored ({} cases)",
                passed,
                failed,
                errored,
                reports.len()
            );
            if failed == 0 && errored == 0 {
                Ok(())
            } else {
                Err(CliError::CasesFailed)
            }
        }
    }
}

/// Read a point given as an integer, decimal, or `a/b` fraction into an
/// exact rational. Anything else (including non-finite spellings) returns
/// None and the caller falls back to floating point.
fn parse_exact_point(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (sign, magnitude) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, text),
    };
    let parse_decimal = |s: &str| -> Option<BigRational> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit() || c == '.') {
            return None;
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let digits: String = format!("{int_part}{frac_part}");
        let numer: num_bigint::BigInt = digits.parse().ok()?;
        let denom = num_bigint::BigInt::from(10u32).pow(frac_part.len() as u32);
        Some(BigRational::new(numer, denom))
    };
    let value = match magnitude.split_once('/') {
        Some((n, d)) => {
            let numer = parse_decimal(n)?;
            let denom = parse_decimal(d)?;
            if denom == BigRational::from_integer(0.into()) {
                return None;
            }
            numer / denom
        }
        None => parse_decimal(magnitude)?,
    };
    Some(if sign < 0 { -value } else { value })
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
