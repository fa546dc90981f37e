//! Batch command-line front end.
//!
//! [`run_command`] does all the work and returns the exit code and captured
//! output, so the binary is a thin wrapper and the CLI is testable in-process.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coset::{verify_coset_transversal, CosetSpec};
use crate::error::Error;
use crate::scalar::{format_rational, parse_rational_list, LaurentScalar};
use crate::symfunc::{dominant_signatures, schur_bialternant, SatakeParams, Signature};
use crate::whittaker::{
    eigen_from_satake, lfactor_den_from_eigen, modulus_sqrt_exponent, solve_recursion_linear,
    verify_recursion, whittaker_value, WhittakerTable,
};
use crate::zeta::{lfactor_denominator, lfactor_series, zeta_equals_lfactor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "newform", version, about = "Exact newform Whittaker values, Hecke eigenvalues and L-factors for GL(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    /// Rank of GL(n)
    #[arg(long)]
    n: usize,
    /// Satake parameters a/b,... (exactly n entries; trailing 0 for positive conductor)
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Residue field size for numeric display (v = sqrt(q))
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// W(ϖ^f) for one signature
    Eval {
        #[command(flatten)]
        common: Common,
        /// Signature f_1,...,f_{n-1}
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// W(ϖ^f) for every dominant signature up to a weight
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_weight: i64,
    },
    /// Hecke eigenvalues λ_1..λ_{n-1}
    Eigen {
        #[command(flatten)]
        common: Common,
    },
    /// L-factor denominator and its series expansion
    Lfactor {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Z(s, W) = L(s, π) coefficientwise
    ZetaCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Hecke difference equations against closed-form values
    RecursionCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_weight: i64,
    },
    /// Linear solve of the difference equations against the closed form
    SolveCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_weight: i64,
    },
    /// Exhaustive coset transversal check over Z/p^N
    CosetVerify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Truncation depth N (default m + 1)
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Exit code plus captured streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Self { code: if passed { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::MalformedRational(_)
            | Error::MalformedScalar(_)
            | Error::RankTooSmall(_)
            | Error::AlphaLength { .. }
            | Error::SignatureLength { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidCosetSpec(_)
            | Error::EnumerationTooLarge(_)
            | Error::RamifiedNeedsZero
            | Error::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Self { code, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn parse_params(c: &Common) -> Result<SatakeParams, Error> {
    if let Some(q) = c.q.filter(|&q| q < 2) {
        return Err(Error::InvalidArgument(format!("--q must be at least 2, got {q}")));
    }
    SatakeParams::for_rank(parse_rational_list(&c.alpha)?, c.n)
}

fn parse_signature(text: &str, n: usize) -> Result<Signature, Error> {
    let parts = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidArgument(format!("malformed signature `{text}`")))?;
    Signature::for_rank(parts, n)
}

fn alpha_strings(alpha: &SatakeParams) -> Vec<String> {
    alpha.alphas().iter().map(format_rational).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// One row of `table`.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct TableRow {
    pub signature: Signature,
    pub schur: String,
    pub delta_exponent: i64,
    pub value: LaurentScalar,
    pub value_text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<f64>,
}

pub fn table_rows(alpha: &SatakeParams, max_weight: i64, q: Option<u64>) -> crate::Result<Vec<TableRow>> {
    let table = WhittakerTable::closed_form(alpha, max_weight)?;
    dominant_signatures(alpha.rank(), max_weight)
        .into_iter()
        .map(|f| {
            let schur = schur_bialternant(&f, alpha)?;
            let value = table.get(&f);
            Ok(TableRow {
                schur: format_rational(&schur),
                delta_exponent: modulus_sqrt_exponent(&f),
                value_text: value.to_string(),
                numeric: q.map(|q| value.numeric_eval(q)),
                value,
                signature: f,
            })
        })
        .collect()
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Eval { common, f } => {
            let alpha = parse_params(&common)?;
            let f = parse_signature(&f, common.n)?;
            let w = whittaker_value(&f, &alpha)?;
            let numeric = common.q.map(|q| w.numeric_eval(q));
            let out = match common.format {
                Format::Text => {
                    let mut s = format!("{w}\n");
                    if let (Some(q), Some(x)) = (common.q, numeric) {
                        let _ = writeln!(s, "numeric (q={q}): {x}");
                    }
                    s
                }
                Format::Json => to_json(&json!({
                    "n": common.n,
                    "alpha": alpha_strings(&alpha),
                    "signature": f,
                    "dominant": f.is_dominant(),
                    "value": w,
                    "value_text": w.to_string(),
                    "numeric": numeric,
                })),
                Format::Csv => {
                    let mut row = vec![f.to_string(), w.to_string()];
                    let mut header = vec!["signature", "value"];
                    if let Some(x) = numeric {
                        header.push("numeric");
                        row.push(x.to_string());
                    }
                    csv_rows(&header, &[row])
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Table { common, max_weight } => {
            let alpha = parse_params(&common)?;
            let rows = table_rows(&alpha, max_weight, common.q)?;
            let out = match common.format {
                Format::Json => to_json(&json!({
                    "n": common.n,
                    "alpha": alpha_strings(&alpha),
                    "max_weight": max_weight,
                    "q": common.q,
                    "rows": rows,
                })),
                Format::Csv => {
                    let mut header = vec!["signature", "schur", "delta_exponent", "value"];
                    if common.q.is_some() {
                        header.push("numeric");
                    }
                    let body: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| {
                            let mut v = vec![
                                r.signature.to_string(),
                                r.schur.clone(),
                                r.delta_exponent.to_string(),
                                r.value_text.clone(),
                            ];
                            if let Some(x) = r.numeric {
                                v.push(x.to_string());
                            }
                            v
                        })
                        .collect();
                    csv_rows(&header, &body)
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &rows {
                        let _ = write!(s, "{:<16} s_f = {:<14} δ^1/2 = v^{:<4} W = {}", r.signature.to_string(), r.schur, r.delta_exponent, r.value_text);
                        if let Some(x) = r.numeric {
                            let _ = write!(s, "  ≈ {x:.6e}");
                        }
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Eigen { common } => {
            let alpha = parse_params(&common)?;
            let eigen = eigen_from_satake(&alpha);
            let out = match common.format {
                Format::Json => to_json(&json!({
                    "n": common.n,
                    "alpha": alpha_strings(&alpha),
                    "lambdas": eigen.lambdas,
                    "lambdas_text": eigen.lambdas.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = eigen
                        .lambdas
                        .iter()
                        .enumerate()
                        .map(|(k, l)| vec![(k + 1).to_string(), l.to_string()])
                        .collect();
                    csv_rows(&["i", "lambda"], &rows)
                }
                Format::Text => {
                    let mut s = String::new();
                    for (k, l) in eigen.lambdas.iter().enumerate() {
                        let _ = write!(s, "lambda_{} = {l}", k + 1);
                        if let Some(q) = common.q {
                            let _ = write!(s, "  ≈ {}", l.numeric_eval(q));
                        }
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Lfactor { common, terms } => {
            let alpha = parse_params(&common)?;
            let den = lfactor_denominator(&alpha);
            // the eigenvalue route only applies at positive conductor
            let from_eigen = if alpha.conductor_positive() {
                Some(lfactor_den_from_eigen(&eigen_from_satake(&alpha))?)
            } else {
                None
            };
            let consistent = from_eigen.as_ref().map_or(true, |d| *d == den);
            let series = lfactor_series(&alpha, terms);
            let out = match common.format {
                Format::Json => to_json(&json!({
                    "denominator": den,
                    "denominator_text": den.to_string(),
                    "denominator_from_eigenvalues": from_eigen,
                    "consistent": consistent,
                    "series": series,
                })),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = series
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| vec![k.to_string(), format_rational(&den.coeff(k)), format_rational(c)])
                        .collect();
                    csv_rows(&["degree", "denominator", "series"], &rows)
                }
                Format::Text => {
                    let mut s = format!("denominator: {den}\n");
                    if let Some(d) = &from_eigen {
                        let _ = writeln!(s, "from eigenvalues: {d}");
                    }
                    let _ = writeln!(s, "series: {series}");
                    s
                }
            };
            Ok(Outcome::verdict(consistent, out))
        }
        Command::ZetaCheck { common, terms } => {
            let alpha = parse_params(&common)?;
            let report = zeta_equals_lfactor(&alpha, terms)?;
            let out = match common.format {
                Format::Json => to_json(&report),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = (0..=terms)
                        .map(|k| {
                            let z = report.zeta.coeff(k);
                            let l = report.lfactor.coeff(k);
                            vec![k.to_string(), format_rational(z), format_rational(l), (z == l).to_string()]
                        })
                        .collect();
                    csv_rows(&["degree", "zeta", "lfactor", "equal"], &rows)
                }
                Format::Text => match &report.first_discrepancy {
                    None => format!("OK: coefficients agree to order {terms}\n"),
                    Some(d) => format!(
                        "FAIL: coefficient of X^{} differs: zeta = {}, L = {}\n",
                        d.degree, d.zeta, d.lfactor
                    ),
                },
            };
            Ok(Outcome::verdict(report.agrees(), out))
        }
        Command::RecursionCheck { common, max_weight } => {
            let alpha = parse_params(&common)?;
            let report = verify_recursion(&alpha, max_weight)?;
            let passed = report.all_passed();
            let out = match common.format {
                Format::Json => to_json(&report),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .checks
                        .iter()
                        .map(|c| vec![c.f.to_string(), c.i.to_string(), c.lhs.to_string(), c.rhs.to_string(), c.passed.to_string()])
                        .collect();
                    csv_rows(&["signature", "i", "lhs", "rhs", "passed"], &rows)
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in report.failures().take(10) {
                        let _ = writeln!(s, "FAIL: f = {}, i = {}: {} != {}", c.f, c.i, c.lhs, c.rhs);
                    }
                    let failed = report.failures().count();
                    if passed {
                        let _ = writeln!(s, "OK: {} identities verified for weight <= {max_weight}", report.checks.len());
                    } else {
                        let _ = writeln!(s, "FAIL: {failed} of {} identities failed", report.checks.len());
                    }
                    s
                }
            };
            Ok(Outcome::verdict(passed, out))
        }
        Command::SolveCheck { common, max_weight } => {
            let alpha = parse_params(&common)?;
            let closed = WhittakerTable::closed_form(&alpha, max_weight)?;
            let (mismatch, solve_error) = match solve_recursion_linear(&alpha, max_weight) {
                Ok(solved) => (solved.first_mismatch(&closed), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let passed = mismatch.is_none() && solve_error.is_none();
            let out = match common.format {
                Format::Json => to_json(&json!({
                    "signatures": closed.entries.len(),
                    "max_weight": max_weight,
                    "first_mismatch": mismatch,
                    "solve_error": solve_error,
                    "passed": passed,
                })),
                Format::Csv => csv_rows(
                    &["signatures", "max_weight", "passed"],
                    &[vec![closed.entries.len().to_string(), max_weight.to_string(), passed.to_string()]],
                ),
                Format::Text => match (&mismatch, &solve_error) {
                    (_, Some(e)) => format!("FAIL: linear solve failed: {e}\n"),
                    (Some(f), None) => format!("FAIL: linear solve differs from closed form at f = {f}\n"),
                    (None, None) => format!(
                        "OK: linear solve matches closed form on {} signatures of weight <= {max_weight}\n",
                        closed.entries.len()
                    ),
                },
            };
            Ok(Outcome::verdict(passed, out))
        }
        Command::CosetVerify { n, p, i, m, depth, format } => {
            let spec = CosetSpec::with_depth(n, p, m, i, depth.unwrap_or(m + 1))?;
            let report = verify_coset_transversal(&spec)?;
            let passed = report.passed();
            let out = match format {
                Format::Json => to_json(&report),
                Format::Csv => csv_rows(
                    &["n", "p", "i", "m", "depth", "representatives", "expected", "distinct", "count", "coverage", "passed"],
                    &[vec![
                        n.to_string(),
                        p.to_string(),
                        i.to_string(),
                        m.to_string(),
                        spec.depth.to_string(),
                        report.representatives.len().to_string(),
                        report.expected_count.to_string(),
                        report.distinct_ok.to_string(),
                        report.count_ok.to_string(),
                        report.coverage_ok.to_string(),
                        passed.to_string(),
                    ]],
                ),
                Format::Text => {
                    let mut s = String::new();
                    for g in &report.representatives {
                        let _ = writeln!(s, "  {g}");
                    }
                    let _ = writeln!(
                        s,
                        "{}: {} representatives (expected q^i * [n-1 choose i]_q = {}); |K_m mod p^{}| = {}, |subgroup| = {}; distinct: {}, coverage: {}",
                        if passed { "OK" } else { "FAIL" },
                        report.representatives.len(),
                        report.expected_count,
                        spec.depth,
                        report.group_order,
                        report.subgroup_order,
                        report.distinct_ok,
                        report.coverage_ok,
                    );
                    s
                }
            };
            Ok(Outcome::verdict(passed, out))
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match run(cli) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}
