//! Command-line front end: argument definitions, report builders and the
//! JSON / CSV / table renderers used by the `dirichlet` binary.
//!
//! Every command produces a [`Report`] with the JSON shape
//! `{command, params, rows, verdicts}`. Floats are printed with 12
//! significant digits so identical flags give byte-identical output.

use std::fmt::Write as _;
use std::io::IsTerminal;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::arith::find_primitive_root;
use crate::characters::{
    characters_of, orthogonality_over_characters_in, orthogonality_over_group,
    weighted_orthogonality_in, DirichletCharacter,
};
use crate::cyclotomic::{root_conj, root_mul, RootValue};
use crate::error::Error;
use crate::lseries::{self, EvalOptions};
use crate::resolvent::cyclotomy_round_trip;
use crate::unit_group::decompose;

pub const FORMAT_ENV: &str = "DIRICHLET_FORMAT";

/// Floating-point tolerance of the non-exact orthogonality path.
pub const FLOAT_ORTHOGONALITY_TOLERANCE: f64 = 1e-9;
/// `resolvent-demo` fails above this recovery error.
pub const RESOLVENT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

impl OutputFormat {
    /// Table on a terminal, JSON otherwise.
    pub fn detect() -> Self {
        if std::io::stdout().is_terminal() {
            OutputFormat::Table
        } else {
            OutputFormat::Json
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dirichlet", version, about = "Dirichlet characters, L-series and cyclotomy")]
pub struct Cli {
    /// Output format (defaults to table on a terminal, json otherwise)
    #[arg(long, global = true, value_enum, env = FORMAT_ENV)]
    pub format: Option<OutputFormat>,

    /// Write the rendered report to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ModulusArg {
    #[arg(long, short = 'k', allow_negative_numbers = true)]
    pub modulus: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of all characters modulo k
    Characters(ModulusArg),
    /// Check both orthogonality relations and the weighted form
    Orthogonality {
        #[command(flatten)]
        modulus: ModulusArg,
        /// Use exact cyclotomic arithmetic instead of floating point
        #[arg(long)]
        exact: bool,
    },
    /// Character-weighted log L against the residue-class prime sum
    ProgressionDemo {
        #[command(flatten)]
        modulus: ModulusArg,
        #[arg(long, short = 'm', allow_negative_numbers = true)]
        residue: i64,
        #[arg(long, value_delimiter = ',', default_value = "1.5,1.2,1.1,1.05,1.01")]
        s_grid: Vec<f64>,
        #[arg(long, default_value_t = 100_000)]
        prime_bound: u64,
    },
    /// Prime counts per residue class
    Census {
        #[command(flatten)]
        modulus: ModulusArg,
        #[arg(long, short = 'q')]
        limit: u64,
    },
    /// L(s, χ) for one labelled character, or all of them
    Lseries {
        #[command(flatten)]
        modulus: ModulusArg,
        /// Comma-separated label, e.g. 1,0; omit for every character
        #[arg(long, value_delimiter = ',')]
        label: Option<Vec<u64>>,
        #[arg(long)]
        s: f64,
    },
    /// Cyclotomic resolvents for a prime p and root recovery
    ResolventDemo {
        #[arg(long)]
        p: u64,
    },
    /// Riemann zeta at real s > 1
    Zeta {
        #[arg(long)]
        s: f64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Compute(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    List(Vec<Cell>),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Float(x) => float_json(*x),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::List(items) => Value::Array(items.iter().map(Cell::to_json).collect()),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format_float(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.iter().map(Cell::to_text).collect::<Vec<_>>().join(" "),
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

fn int_list(v: &[u64]) -> Cell {
    Cell::List(v.iter().map(|&x| Cell::from(x)).collect())
}

/// 12 significant digits; fixed notation for moderate magnitudes.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        };
        if s == "-0" {
            "0".to_owned()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

fn float_json(x: f64) -> Value {
    format_float(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn format_complex(z: Complex64) -> String {
    let re = format_float(z.re);
    let im = format_float(z.im.abs());
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.to_owned(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    fn new(command: &str, params: Vec<(&str, Cell)>, columns: &[&str]) -> Self {
        Report {
            command: command.to_owned(),
            params: params.into_iter().map(|(k, v)| (k.to_owned(), v)).collect(),
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.clone(), v.to_json()))
                        .collect(),
                )
            })
            .collect();
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|v| json!({"name": v.name, "pass": v.pass, "detail": v.detail}))
            .collect();
        json!({
            "command": self.command,
            "params": params,
            "rows": rows,
            "verdicts": verdicts,
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn render_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::to_text).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", v.to_text()))
            .collect();
        let _ = writeln!(out, "{} {}", self.command, params.join(" "));
        let line = |out: &mut String, items: &[String]| {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&mut out, &self.columns);
        for r in &cells {
            line(&mut out, r);
        }
        for v in &self.verdicts {
            let status = if v.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {}  {}", v.name, v.detail);
        }
        out
    }
}

fn positive_modulus(k: i64) -> CliResult<u64> {
    if k < 1 {
        return Err(CliError::Invalid(format!(
            "invalid modulus {k}: the modulus must be a positive integer"
        )));
    }
    Ok(k as u64)
}

fn label_text(label: &[u64]) -> String {
    let parts: Vec<String> = label.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn exact_text(v: RootValue) -> String {
    match v {
        RootValue::Zero => "0".to_owned(),
        RootValue::Root { order, exponent } => format!("zeta({order})^{exponent}"),
    }
}

/// One row per character: its label, class and values at `1 … k`.
pub fn characters_report(k: i64) -> CliResult<Report> {
    let k = positive_modulus(k)?;
    let structure = std::sync::Arc::new(decompose(k)?);
    let chars = characters_of(&structure)?;
    let mut report = Report::new(
        "characters",
        vec![("modulus", k.into())],
        &["modulus", "params", "label", "class", "exact_values", "numeric_values"],
    );
    let mut agree = true;
    for chi in &chars {
        let values: Vec<RootValue> = (1..=k as i64).map(|n| chi.evaluate(n)).collect();
        agree &= chi.classify() == chi.classify_by_roots();
        report.push(vec![
            k.into(),
            int_list(chi.params()),
            int_list(&chi.label()),
            chi.classify().to_string().into(),
            Cell::List(values.iter().map(|&v| exact_text(v).into()).collect()),
            Cell::List(values.iter().map(|v| format_complex(v.to_complex()).into()).collect()),
        ]);
    }
    let count = chars.len() as u64;
    report.verdicts.push(Verdict::new(
        "character count equals phi(k)",
        count == structure.order(),
        format!("{count} characters"),
    ));
    report.verdicts.push(Verdict::new(
        "value and root classifications agree",
        agree,
        "",
    ));
    Ok(report)
}

fn float_sum(values: impl Iterator<Item = RootValue>) -> Complex64 {
    values.map(RootValue::to_complex).sum()
}

/// Both orthogonality relations and the weighted form, exhaustively.
pub fn orthogonality_report(k: i64, exact: bool) -> CliResult<Report> {
    let k = positive_modulus(k)?;
    let structure = std::sync::Arc::new(decompose(k)?);
    let chars = characters_of(&structure)?;
    let units = structure.units();
    let phi = structure.order() as i64;
    let mut report = Report::new(
        "orthogonality",
        vec![("modulus", k.into()), ("exact", exact.into())],
        &["relation", "argument", "expected", "numeric_sum", "pass"],
    );
    let mut failures = [0usize; 3];
    let mut check = |report: &mut Report,
                     slot: usize,
                     relation: &str,
                     argument: String,
                     expected: i64,
                     exact_holds: Option<bool>,
                     numeric: Complex64| {
        let pass = exact_holds.unwrap_or_else(|| {
            (numeric - Complex64::new(expected as f64, 0.0)).norm() < FLOAT_ORTHOGONALITY_TOLERANCE
        });
        if !pass {
            failures[slot] += 1;
        }
        report.push(vec![
            relation.into(),
            argument.into(),
            expected.into(),
            format_complex(numeric).into(),
            pass.into(),
        ]);
    };

    for chi in &chars {
        let c = orthogonality_over_group(chi);
        let numeric = c.sum.evaluate();
        let holds = exact.then_some(c.holds);
        check(&mut report, 0, "sum over units", label_text(&chi.label()), c.expected, holds, numeric);
    }
    for &g in &units {
        let c = orthogonality_over_characters_in(&chars, g as i64)?;
        let numeric = if exact {
            c.sum.evaluate()
        } else {
            float_sum(chars.iter().map(|chi| chi.evaluate(g as i64)))
        };
        let holds = exact.then_some(c.holds);
        check(&mut report, 1, "sum over characters", g.to_string(), c.expected, holds, numeric);
    }
    for &g in &units {
        for &h in &units {
            let argument = format!("{g},{h}");
            let expected = if g == h { phi } else { 0 };
            if exact {
                let c = weighted_orthogonality_in(&chars, g as i64, h as i64)?;
                check(&mut report, 2, "weighted", argument, c.expected, Some(c.holds), c.sum.evaluate());
            } else {
                let numeric = float_sum(
                    chars
                        .iter()
                        .map(|chi| root_mul(chi.evaluate(g as i64), root_conj(chi.evaluate(h as i64)))),
                );
                check(&mut report, 2, "weighted", argument, expected, None, numeric);
            }
        }
    }
    let mode = if exact { "exact" } else { "floating point, tol 1e-9" };
    for (slot, name) in ["sum over units", "sum over characters", "weighted"].iter().enumerate() {
        report.verdicts.push(Verdict::new(
            name,
            failures[slot] == 0,
            format!("{} failures ({mode})", failures[slot]),
        ));
    }
    Ok(report)
}

/// Character-weighted `log L` against `φ(k)` times the residue-class prime
/// sum, over a grid of `s`.
pub fn progression_report(k: i64, m: i64, s_grid: &[f64], prime_bound: u64) -> CliResult<Report> {
    let k = positive_modulus(k)?;
    if s_grid.is_empty() {
        return Err(CliError::Invalid("the s grid is empty".to_owned()));
    }
    if let Some(bad) = s_grid.iter().find(|&&s| s.is_nan() || s <= 1.0) {
        return Err(CliError::Invalid(format!(
            "every s in the grid must exceed 1 (got {bad})"
        )));
    }
    let structure = std::sync::Arc::new(decompose(k)?);
    if !structure.is_unit(m) {
        return Err(CliError::Invalid(format!(
            "residue {m} is not coprime to {k}: only classes of units contain infinitely many primes"
        )));
    }
    let chars = characters_of(&structure)?;
    let opts = EvalOptions {
        prime_bound,
        ..EvalOptions::default()
    };
    let mut report = Report::new(
        "progression-demo",
        vec![
            ("modulus", k.into()),
            ("residue", m.into()),
            ("s_grid", Cell::List(s_grid.iter().map(|&s| s.into()).collect())),
            ("prime_bound", prime_bound.into()),
        ],
        &["s", "lhs", "class_sum", "discrepancy", "certified_bound", "envelope", "imag"],
    );
    let mut rows = Vec::new();
    for &s in s_grid {
        let r = lseries::character_weighted_logl_in(s, &chars, m, &opts)?;
        report.push(vec![
            s.into(),
            r.lhs.into(),
            r.class_sum.into(),
            r.discrepancy.into(),
            r.truncation_bound.into(),
            r.envelope().into(),
            r.imaginary_part.into(),
        ]);
        rows.push(r);
    }
    let mut by_s: Vec<_> = rows.iter().collect();
    by_s.sort_by(|a, b| b.s.total_cmp(&a.s));
    let increasing = by_s.windows(2).all(|w| w[1].lhs > w[0].lhs);
    report.verdicts.push(Verdict::new(
        "lhs increases as s decreases",
        increasing,
        "",
    ));
    report.verdicts.push(Verdict::new(
        "discrepancy within phi(k) + certified bound",
        rows.iter().all(|r| r.within_envelope()),
        format!("max discrepancy {}", format_float(rows.iter().map(|r| r.discrepancy).fold(0.0, f64::max))),
    ));
    report.verdicts.push(Verdict::new(
        "imaginary part within bound",
        rows.iter().all(|r| r.imaginary_within_bound()),
        "",
    ));
    Ok(report)
}

pub fn census_report(k: i64, limit: u64) -> CliResult<Report> {
    let k = positive_modulus(k)?;
    if limit < 2 {
        return Err(CliError::Invalid("the limit must be at least 2".to_owned()));
    }
    let census = lseries::prime_census(limit, k)?;
    let phi = crate::arith::euler_phi(k)? as f64;
    let mut report = Report::new(
        "census",
        vec![("modulus", k.into()), ("limit", limit.into())],
        &["residue", "unit", "count", "share", "expected_share"],
    );
    let mut non_units_ok = true;
    for (r, &count) in census.counts.iter().enumerate() {
        let unit = crate::arith::gcd(r as u64, k) == 1;
        non_units_ok &= unit || count <= 1;
        let share = if census.total == 0 {
            0.0
        } else {
            count as f64 / census.total as f64
        };
        report.push(vec![
            (r as u64).into(),
            unit.into(),
            count.into(),
            share.into(),
            if unit { (1.0 / phi).into() } else { 0.0.into() },
        ]);
    }
    report.verdicts.push(Verdict::new(
        "non-unit classes hold at most one prime",
        non_units_ok,
        format!("pi({limit}) = {}", census.total),
    ));
    Ok(report)
}

pub fn lseries_report(k: i64, label: Option<&[u64]>, s: f64) -> CliResult<Report> {
    let k = positive_modulus(k)?;
    let structure = std::sync::Arc::new(decompose(k)?);
    // The principal series has a pole at 1; without an explicit label it is
    // left out of the table for s <= 1 instead of failing the whole command.
    let chars: Vec<DirichletCharacter> = match label {
        Some(l) => vec![crate::characters::character_from_label(k, l)?],
        None => characters_of(&structure)?
            .into_iter()
            .filter(|c| s > 1.0 || !c.is_principal())
            .collect(),
    };
    let opts = EvalOptions::default();
    let mut report = Report::new(
        "lseries",
        vec![("modulus", k.into()), ("s", s.into())],
        &["s", "label", "class", "real", "imag", "truncation_bound"],
    );
    for chi in &chars {
        let l = lseries::l_direct(s, chi, &opts)?;
        report.push(vec![
            s.into(),
            int_list(&chi.label()),
            chi.classify().to_string().into(),
            l.re().into(),
            l.im().into(),
            l.truncation_bound.into(),
        ]);
    }
    Ok(report)
}

pub fn resolvent_report(p: u64) -> CliResult<Report> {
    if !crate::arith::is_prime(p) || p < 3 {
        return Err(CliError::Invalid(format!("p must be an odd prime (got {p})")));
    }
    let g = find_primitive_root(p)?;
    let demo = cyclotomy_round_trip(p, g)?;
    let mut report = Report::new(
        "resolvent-demo",
        vec![("p", p.into()), ("g", g.into())],
        &["i", "g_pow_i", "resolvent_re", "resolvent_im", "recovered_re", "recovered_im", "error"],
    );
    for (i, (&gi, (x, t))) in demo
        .ordering
        .iter()
        .zip(demo.resolvents.iter().zip(&demo.recovered))
        .enumerate()
    {
        let target = crate::cyclotomic::to_complex(RootValue::root(p, gi as i64));
        let err = (target - Complex64::new(t.0, t.1)).norm();
        report.push(vec![
            (i as u64).into(),
            gi.into(),
            x.0.into(),
            x.1.into(),
            t.0.into(),
            t.1.into(),
            err.into(),
        ]);
    }
    report.verdicts.push(Verdict::new(
        "max recovery error",
        demo.max_error <= RESOLVENT_TOLERANCE,
        format!(
            "max recovery error {} {} 1e-9",
            format_float(demo.max_error),
            if demo.max_error < 1e-9 { "<" } else { ">=" }
        ),
    ));
    Ok(report)
}

pub fn zeta_report(s: f64) -> CliResult<Report> {
    let z = lseries::zeta(s)?;
    let mut report = Report::new("zeta", vec![("s", s.into())], &["s", "value", "truncation_bound"]);
    report.push(vec![s.into(), z.re().into(), z.truncation_bound.into()]);
    Ok(report)
}

pub fn build_report(command: &Command) -> CliResult<Report> {
    match command {
        Command::Characters(m) => characters_report(m.modulus),
        Command::Orthogonality { modulus, exact } => orthogonality_report(modulus.modulus, *exact),
        Command::ProgressionDemo {
            modulus,
            residue,
            s_grid,
            prime_bound,
        } => progression_report(modulus.modulus, *residue, s_grid, *prime_bound),
        Command::Census { modulus, limit } => census_report(modulus.modulus, *limit),
        Command::Lseries { modulus, label, s } => {
            lseries_report(modulus.modulus, label.as_deref(), *s)
        }
        Command::ResolventDemo { p } => resolvent_report(*p),
        Command::Zeta { s } => zeta_report(*s),
    }
}

/// Runs a parsed command line; the exit code is 0 iff every verdict passes,
/// 1 on a failed verdict and 2 on invalid input.
pub fn run(cli: &Cli) -> i32 {
    let report = match build_report(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let format = cli.format.unwrap_or_else(OutputFormat::detect);
    let text = report.render(format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(1.6449340668482264), "1.64493406685");
        assert_eq!(format_float(0.5), "0.5");
        assert_eq!(format_float(-2.5e-3), "-0.00250000000000".trim_end_matches('0'));
        assert_eq!(format_float(1.234e-9), "1.23400000000e-9");
        assert_eq!(format_float(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_float(-1e-17), "-1.00000000000e-17");
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(0.0, 1.0)), "0+1i");
        assert_eq!(format_complex(Complex64::new(-1.0, -0.5)), "-1-0.5i");
        assert_eq!(format_complex(Complex64::new(1.0, -1e-300)), "1-1.00000000000e-300i");
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(matches!(characters_report(0), Err(CliError::Invalid(_))));
        assert!(matches!(orthogonality_report(-3, true), Err(CliError::Invalid(_))));
    }

    #[test]
    fn csv_has_header() {
        let r = zeta_report(2.0).unwrap();
        let csv = r.render(OutputFormat::Csv);
        assert_eq!(csv, "s,value,truncation_bound\n2,1.64493406685,2.09025006378e-14\n".replace(
            "2.09025006378e-14",
            &format_float(lseries::zeta(2.0).unwrap().truncation_bound),
        ));
    }

    #[test]
    fn parses_arguments() {
        let cli = Cli::try_parse_from([
            "dirichlet",
            "--format",
            "json",
            "progression-demo",
            "--modulus",
            "4",
            "--residue",
            "3",
            "--s-grid",
            "1.5,1.2",
            "--prime-bound",
            "1000",
        ])
        .unwrap();
        match cli.command {
            Command::ProgressionDemo { s_grid, prime_bound, .. } => {
                assert_eq!(s_grid, vec![1.5, 1.2]);
                assert_eq!(prime_bound, 1000);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(cli.format, Some(OutputFormat::Json));
    }
}
