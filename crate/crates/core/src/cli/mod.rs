//! Command-line front end.
//!
//! Exit codes: 0 success, 2 bad input, 3 a failed internal consistency check.

pub mod parse;
pub mod report;
pub mod strata;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bernstein::{table1_row, Table1Case};
use crate::branch::{puiseux, BranchEquation, Parameterization};
use crate::differentials::{dim_lower_bound, lambda_set};
use crate::error::{Error, Result};
use crate::semigroup::NumSemigroup;

use report::{build_report, AnalysisReport, SemigroupBlock, Source, Table1Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "planebranch", version, about = "Analytic invariants of plane branches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semigroup data from generators or characteristic exponents.
    Semigroup(SemigroupArgs),
    /// Full analysis of a parameterization or an equation.
    Analyze(AnalyzeArgs),
    /// Sweep a family of equations over coefficient tuples.
    Strata(StrataArgs),
    /// One row of the classification table for empty G.
    Table1(Table1Args),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct SemigroupArgs {
    /// Minimal generators, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "beta", required_unless_present = "beta")]
    gens: Vec<u64>,
    /// Characteristic exponents, comma separated.
    #[arg(long, value_delimiter = ',')]
    beta: Vec<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long, requires = "x2", conflicts_with = "poly")]
    v0: Option<u64>,
    /// Series in T, e.g. "T^7 + T^9".
    #[arg(long, requires = "v0")]
    x2: Option<String>,
    /// Polynomial in X1, X2, e.g. "X2^6 + X1^7 + X1^5*X2^2".
    #[arg(long, required_unless_present = "v0")]
    poly: Option<String>,
    /// Series precision; raised to the minimum the computation needs.
    #[arg(long)]
    precision: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct StrataArgs {
    /// `v0-v1`, e.g. `6-7`.
    #[arg(long)]
    family: String,
    /// A CSV file of coefficient tuples, or a grid `list;list;...` of
    /// comma-separated rationals, one list per coefficient.
    #[arg(long)]
    coeffs: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct Table1Args {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    #[arg(long)]
    v0: Option<u64>,
    #[arg(long)]
    v1: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    v2: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// How a branch is given to [`analyze`].
#[derive(Clone, Debug)]
pub enum BranchInput {
    Parameterization { v0: u64, x2: String },
    Equation { poly: String },
}

/// Runs the full analysis. Warnings (such as a raised precision) go into the
/// report; inconsistencies go into `meta.failed_checks`.
pub fn analyze(input: &BranchInput, precision: Option<usize>) -> Result<AnalysisReport> {
    let mut warnings = Vec::new();
    let mut floor = |needed: usize, default: usize| match precision {
        Some(p) if p < needed => {
            warnings.push(format!("precision {p} is below the minimum {needed}; using {needed}"));
            needed
        }
        Some(p) => p,
        None => default,
    };
    match input {
        BranchInput::Parameterization { v0, x2 } => {
            let terms: Vec<_> = parse::parse_series(x2)?.into_iter().collect();
            let probe = Parameterization::from_terms(*v0, &terms, None)?;
            let prec = floor(probe.required_precision(), probe.default_precision());
            let p = Parameterization::from_terms(*v0, &terms, Some(prec))?;
            let l = lambda_set(&p)?;
            let src = Source { v0: Some(*v0), x2: Some(x2), poly: None, equation: None };
            Ok(build_report(src, &p, &l, warnings))
        }
        BranchInput::Equation { poly } => {
            let f = parse::parse_poly(poly)?;
            let eq = BranchEquation::from_poly(&f)?;
            let needed = eq.default_precision() - 1;
            let prec = floor(needed, eq.default_precision());
            let p = puiseux(&eq, prec)?;
            let l = lambda_set(&p)?;
            let src = Source { v0: None, x2: None, poly: Some(poly), equation: Some(&eq) };
            Ok(build_report(src, &p, &l, warnings))
        }
    }
}

pub fn table1(case: u8, v0: Option<u64>, v1: Option<u64>, s: Option<u64>, v2: Option<u64>) -> Result<Table1Report> {
    let need = |x: Option<u64>, name: &str| {
        x.ok_or_else(|| Error::BadCase(format!("case {case} needs --{name}")))
    };
    let c = match case {
        1 => Table1Case::Quasihomogeneous { v0: need(v0, "v0")?, v1: need(v1, "v1")? },
        2 => Table1Case::TailFamily { v0: need(v0, "v0")?, v1: need(v1, "v1")?, s: need(s, "s")? },
        3 => Table1Case::FourSix { v2: need(v2, "v2")? },
        _ => return Err(Error::BadCase(format!("unknown case {case}"))),
    };
    Ok(Table1Report::new(c, &table1_row(c)?))
}

fn semigroup_text(b: &SemigroupBlock, bound: &str) -> String {
    let j = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    format!(
        "semigroup       <{}>\nchar exponents  ({})\ngcd chain       ({})\nconductor       {}\nmilnor          {}\ngaps            {{{}}}\nmu - tau bound  {}\n",
        j(&b.generators),
        j(&b.char_exponents),
        j(&b.gcd_chain),
        b.conductor,
        b.milnor,
        j(&b.gaps),
        bound
    )
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut emit = |s: String| out.write_all(s.as_bytes()).expect("write to output");
    match cmd {
        Command::Semigroup(a) => {
            let s = if a.beta.is_empty() {
                NumSemigroup::from_generators(&a.gens)?
            } else {
                NumSemigroup::from_char_exponents(&a.beta)?
            };
            let block = SemigroupBlock::new(&s);
            let bound = report::rat(&dim_lower_bound(&s));
            emit(match a.format {
                Format::Text => semigroup_text(&block, &bound),
                Format::Json => {
                    let mut v = serde_json::to_value(&block).expect("serializes");
                    v["dim_lower_bound"] = bound.into();
                    report::to_json(&v)
                }
            });
            Ok(EXIT_OK)
        }
        Command::Analyze(a) => {
            let input = match (a.v0, a.x2, a.poly) {
                (Some(v0), Some(x2), None) => BranchInput::Parameterization { v0, x2 },
                (None, None, Some(poly)) => BranchInput::Equation { poly },
                _ => unreachable!("clap enforces one input form"),
            };
            let r = analyze(&input, a.precision)?;
            for w in &r.meta.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            emit(match a.format {
                Format::Text => report::to_text(&r),
                Format::Json => report::to_json(&r),
            });
            Ok(if r.meta.failed_checks.is_empty() { EXIT_OK } else { EXIT_ASSERT })
        }
        Command::Strata(a) => {
            let family = strata::Family::parse(&a.family)?;
            let tuples = strata::read_tuples(&a.coeffs, family.len())?;
            let rows = strata::sweep(&family, &tuples)?;
            emit(match a.format {
                TableFormat::Csv => report::strata_csv(family.len(), &rows),
                TableFormat::Json => report::to_json(&rows),
            });
            Ok(EXIT_OK)
        }
        Command::Table1(a) => {
            let r = table1(a.case, a.v0, a.v1, a.s, a.v2)?;
            emit(match a.format {
                Format::Text => report::table1_text(&r),
                Format::Json => report::to_json(&r),
            });
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => {
            if code == EXIT_ASSERT {
                let _ = writeln!(err, "internal consistency check failed; see meta.failed_checks");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            EXIT_INPUT
        }
    }
}
