//! Front end for the `fsind` binary: job parsing, table assembly and
//! rendering. `main.rs` only dispatches and maps errors to exit codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use fsind::characters::CharacterError;
use fsind::cyclotomic::Cyclotomic;
use fsind::fixtures::{self, FIXTURE_IDS};
use fsind::group::{parse_group_spec, FinGroup, GroupError, DEFAULT_ORDER_CAP};
use fsind::indicators::orbit::SPrimeChoice;
use fsind::indicators::sweep::{sweep, Predicate, SweepReport};
use fsind::indicators::{
    divisors, indicator_sequence, CategoryContext, IndicatorError, Method, SimpleObject,
};
use fsind::perm::Permutation;
use fsind::verify::{method_name, run_fixture, FixtureReport, ALL_METHODS};

#[derive(Debug, Parser)]
#[command(name = "fsind", version, about = "Higher Frobenius-Schur indicators of bimodule categories over finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate ν_m for the simples of the selected double cosets.
    Compute(ComputeArgs),
    /// Check the embedded fixtures under every evaluation path.
    Verify(VerifyArgs),
    /// Check a predicate on every simple and every divisor of exp(G).
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// `S<n>`, `C<n>` or `gens[<degree>]: <cycles>; <cycles>`.
    #[arg(long)]
    pub group: String,
    /// Same grammar; embedded in the degree of --group.
    #[arg(long)]
    pub subgroup: String,
    /// Largest group order to enumerate.
    #[arg(long, env = "FSIND_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Orbit,
    Center,
    CrossCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub groups: GroupArgs,
    /// Representative of one double coset; it replaces the canonical one.
    #[arg(long)]
    pub coset: Option<String>,
    /// Index of one double coset in canonical order.
    #[arg(long, conflicts_with = "coset")]
    pub rep: Option<usize>,
    /// `divisors`, `full` (1..exp G), `A..B` or a comma list.
    #[arg(long, default_value = "divisors")]
    pub m: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
    pub method: MethodArg,
    /// `stab`, `full-se`, `trivial` or `gens:<cycles>;<cycles>`.
    #[arg(long, default_value = "full-se")]
    pub sprime: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only the named fixtures.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_IDS))]
    pub only: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredicateArg {
    Nonnegative,
    Integral,
    Real,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub groups: GroupArgs,
    #[arg(long, value_enum)]
    pub predicate: PredicateArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
    pub method: MethodArg,
    #[arg(long, default_value = "full-se")]
    pub sprime: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Failure classes, each with its own exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Cap(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
    /// Fixture or predicate failures; the report has already been printed.
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) | CliError::Io(_) => 4,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            GroupError::Perm(_) | GroupError::Spec { .. } | GroupError::NotAMember { .. } => {
                CliError::Parse(e.to_string())
            }
            GroupError::NotASubgroup(_) => CliError::Parse(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<IndicatorError> for CliError {
    fn from(e: IndicatorError) -> Self {
        match e {
            IndicatorError::Group(g) => g.into(),
            IndicatorError::Character(CharacterError::Group(g)) => g.into(),
            IndicatorError::ZeroPower
            | IndicatorError::CosetOutOfRange(_)
            | IndicatorError::CharacterOutOfRange { .. }
            | IndicatorError::DuplicateRepresentative(..)
            | IndicatorError::NotInGroup(_)
            | IndicatorError::NotInStabilizer(_)
            | IndicatorError::NotCentralizing(_)
            | IndicatorError::InvalidSPrime(_)
            | IndicatorError::Expansion { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

/// Which `m` to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MRange {
    Divisors,
    Full,
    Range(u64, u64),
    List(Vec<u64>),
}

impl MRange {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let t = text.trim();
        let bad = |why: &str| CliError::Parse(format!("bad --m {text:?}: {why}"));
        let num = |s: &str| -> Result<u64, CliError> {
            let n: u64 = s.trim().parse().map_err(|_| bad("expected positive integers"))?;
            if n == 0 {
                return Err(bad("m must be at least 1"));
            }
            Ok(n)
        };
        match t {
            "divisors" => Ok(MRange::Divisors),
            "full" => Ok(MRange::Full),
            _ => {
                if let Some((a, b)) = t.split_once("..") {
                    let (a, b) = (num(a)?, num(b)?);
                    if a > b {
                        return Err(bad("empty range"));
                    }
                    Ok(MRange::Range(a, b))
                } else {
                    let list = t.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
                    Ok(MRange::List(list))
                }
            }
        }
    }

    pub fn values(&self, exponent: u64) -> Vec<u64> {
        match self {
            MRange::Divisors => divisors(exponent),
            MRange::Full => (1..=exponent).collect(),
            MRange::Range(a, b) => (*a..=*b).collect(),
            MRange::List(v) => v.clone(),
        }
    }
}

pub fn parse_sprime(text: &str, degree: usize) -> Result<SPrimeChoice, CliError> {
    match text.trim() {
        "stab" => Ok(SPrimeChoice::Stabilizer),
        "full-se" => Ok(SPrimeChoice::FullSE),
        "trivial" => Ok(SPrimeChoice::Trivial),
        t => {
            let body = t.strip_prefix("gens:").ok_or_else(|| {
                CliError::Parse(format!("bad --sprime {text:?}: expected stab, full-se, trivial or gens:…"))
            })?;
            let gens = body
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|g| Permutation::parse_cycles(g, degree))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(SPrimeChoice::Custom(gens))
        }
    }
}

pub fn load_groups(args: &GroupArgs) -> Result<(Arc<FinGroup>, Arc<FinGroup>), CliError> {
    let g = parse_group_spec(&args.group, None, args.cap)?;
    let h = parse_group_spec(&args.subgroup, Some(g.degree()), args.cap)?;
    if !h.is_subgroup_of(&g) {
        return Err(CliError::Parse(format!(
            "{} is not a subgroup of {}",
            args.subgroup, args.group
        )));
    }
    Ok((Arc::new(g), Arc::new(h)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub index: usize,
    pub label: String,
    pub degree: u64,
    pub values_by_m: BTreeMap<u64, Cyclotomic>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CosetRow {
    pub index: usize,
    pub rep: String,
    pub stabilizer_order: u64,
    pub characters: Vec<CharacterRow>,
}

/// The rendered result of `compute`; JSON output round-trips through it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndicatorTable {
    pub group: String,
    pub subgroup: String,
    pub exponent: u64,
    pub method: String,
    pub ms: Vec<u64>,
    pub cosets: Vec<CosetRow>,
}

fn evaluate(
    ctx: &CategoryContext,
    simple: &SimpleObject,
    ms: &[u64],
    method: MethodArg,
    sprime: &SPrimeChoice,
) -> Result<Vec<Cyclotomic>, CliError> {
    let single = |m: Method| indicator_sequence(ctx, simple, ms, m, sprime);
    Ok(match method {
        MethodArg::Brute => single(Method::Brute)?,
        MethodArg::Orbit => single(Method::Orbit)?,
        MethodArg::Center => single(Method::Center)?,
        MethodArg::CrossCheck => {
            let brute = single(Method::Brute)?;
            for other in [Method::Orbit, Method::Center] {
                let values = single(other)?;
                for ((m, a), b) in ms.iter().zip(&brute).zip(&values) {
                    if a != b {
                        return Err(CliError::Internal(format!(
                            "{} m={m}: brute gives {a}, {} gives {b}",
                            simple.label,
                            method_name(other)
                        )));
                    }
                }
            }
            brute
        }
    })
}

pub fn compute_table(args: &ComputeArgs) -> Result<IndicatorTable, CliError> {
    let (g, h) = load_groups(&args.groups)?;
    let degree = g.degree();
    let ms_spec = MRange::parse(&args.m)?;
    let sprime = parse_sprime(&args.sprime, degree)?;
    let preferred = match &args.coset {
        Some(text) => vec![Permutation::parse_cycles(text, degree)
            .map_err(|e| CliError::Parse(e.to_string()))?],
        None => vec![],
    };
    let ctx = CategoryContext::build_with_representatives(g.clone(), h, &preferred)?;
    let cosets: Vec<usize> = match (&args.coset, args.rep) {
        (Some(_), _) => vec![ctx
            .coset_of(&preferred[0])
            .ok_or_else(|| CliError::Parse(format!("{} is not in the group", preferred[0])))?],
        (None, Some(i)) => {
            ctx.representative(i)?;
            vec![i]
        }
        (None, None) => (0..ctx.coset_count()).collect(),
    };
    let exponent = ctx.exponent();
    let ms = ms_spec.values(exponent);
    let simples: Vec<SimpleObject> = cosets
        .iter()
        .map(|&c| ctx.simples(c))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    // Evaluated in parallel, assembled in simple order.
    let values: Vec<Vec<Cyclotomic>> = simples
        .par_iter()
        .map(|s| evaluate(&ctx, s, &ms, args.method, &sprime))
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<CosetRow> = Vec::new();
    for (simple, vals) in simples.iter().zip(values) {
        let c = simple.coset_index;
        if rows.last().map(|r| r.index) != Some(c) {
            rows.push(CosetRow {
                index: c,
                rep: ctx.representative(c)?.to_string(),
                stabilizer_order: ctx.stabilizer(c)?.order(),
                characters: Vec::new(),
            });
        }
        let eta = ctx.character(simple)?;
        let degree = eta
            .degree()
            .as_integer()
            .ok()
            .and_then(|n| u64::try_from(n).ok())
            .ok_or_else(|| CliError::Internal(format!("degree of {} is not a natural number", simple.label)))?;
        rows.last_mut().expect("pushed above").characters.push(CharacterRow {
            index: simple.char_index,
            label: simple.label.clone(),
            degree,
            values_by_m: ms.iter().copied().zip(vals).collect(),
        });
    }
    Ok(IndicatorTable {
        group: args.groups.group.clone(),
        subgroup: args.groups.subgroup.clone(),
        exponent,
        method: format!("{:?}", args.method).to_lowercase(),
        ms,
        cosets: rows,
    })
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let pad = widths[i] - s.chars().count();
                if i < 2 {
                    format!("{s}{}", " ".repeat(pad))
                } else {
                    format!("{}{s}", " ".repeat(pad))
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_table(table: &IndicatorTable, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => serde_json::to_string_pretty(table)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Internal(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["rep".to_string(), "character".into(), "degree".into()];
            header.extend(table.ms.iter().map(|m| format!("m={m}")));
            w.write_record(&header).map_err(|e| CliError::Internal(e.to_string()))?;
            for c in &table.cosets {
                for ch in &c.characters {
                    let mut rec = vec![c.rep.clone(), format!("W_{}", ch.index), ch.degree.to_string()];
                    rec.extend(table.ms.iter().map(|m| ch.values_by_m[m].to_string()));
                    w.write_record(&rec).map_err(|e| CliError::Internal(e.to_string()))?;
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "G = {}, H = {}, exp(G) = {}, method = {}",
                table.group, table.subgroup, table.exponent, table.method
            )
            .expect("writing to a String");
            let mut rows = Vec::new();
            let mut header = vec!["d".to_string(), "W".into()];
            header.extend(table.ms.iter().map(|m| m.to_string()));
            rows.push(header);
            for c in &table.cosets {
                for (k, ch) in c.characters.iter().enumerate() {
                    let d = if k == 0 {
                        format!("{} |S|={}", c.rep, c.stabilizer_order)
                    } else {
                        String::new()
                    };
                    let mut row = vec![d, format!("W_{}", ch.index)];
                    row.extend(table.ms.iter().map(|m| ch.values_by_m[m].to_string()));
                    rows.push(row);
                }
            }
            out.push_str(&pad_table(&rows));
            Ok(out)
        }
    }
}

pub fn cmd_compute(args: &ComputeArgs) -> Result<String, CliError> {
    let table = compute_table(args)?;
    render_table(&table, args.format)
}

/// Runs the selected fixtures and renders the pass/fail matrix. The error
/// carries the rendered report when anything fails.
pub fn cmd_verify(args: &VerifyArgs) -> Result<String, CliError> {
    let selected: Vec<_> = fixtures::all()
        .into_iter()
        .filter(|f| args.only.is_empty() || args.only.iter().any(|id| id == f.id))
        .collect();
    let reports: Vec<FixtureReport> = selected
        .par_iter()
        .map(|f| run_fixture(f, &ALL_METHODS))
        .collect::<Result<_, _>>()?;
    let ok = reports.iter().all(FixtureReport::passed);
    let rendered = match args.format {
        Format::Json => serde_json::to_string_pretty(&reports)
            .map_err(|e| CliError::Internal(e.to_string()))?
            + "\n",
        Format::Text | Format::Csv => render_verify(&reports, args.format),
    };
    if ok {
        Ok(rendered)
    } else {
        Err(CliError::Failed(rendered))
    }
}

fn render_verify(reports: &[FixtureReport], format: Format) -> String {
    let status = |r: &FixtureReport, m: Option<fsind::indicators::Method>| {
        if r.mismatches.iter().any(|x| x.method == m) {
            "FAIL"
        } else {
            "pass"
        }
    };
    let mut rows = vec![vec![
        "fixture".to_string(),
        "checks".into(),
        "structure".into(),
        "brute".into(),
        "orbit".into(),
        "center".into(),
        "time".into(),
    ]];
    for r in reports {
        let mut row = vec![r.id.to_string(), r.checks.to_string(), status(r, None).into()];
        row.extend(ALL_METHODS.iter().map(|&m| status(r, Some(m)).to_string()));
        row.push(format!("{:.2?}", r.elapsed));
        rows.push(row);
    }
    if format == Format::Csv {
        return rows.iter().map(|r| r.join(",") + "\n").collect();
    }
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, s)| if i == 0 { format!("{s:<11}") } else { format!("{s:>9}") })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    for r in reports {
        for c in &r.corrections {
            writeln!(out, "note {}: {c}", r.id).expect("writing to a String");
        }
        for m in &r.mismatches {
            writeln!(out, "{m}").expect("writing to a String");
        }
    }
    if reports.iter().all(FixtureReport::passed) {
        out.push_str("all fixtures pass\n");
    } else {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(out, "{failed} fixture(s) failed").expect("writing to a String");
    }
    out
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<String, CliError> {
    let (g, h) = load_groups(&args.groups)?;
    let sprime = parse_sprime(&args.sprime, g.degree())?;
    let ctx = CategoryContext::build(g, h)?;
    let predicate = match args.predicate {
        PredicateArg::Nonnegative => Predicate::Nonnegative,
        PredicateArg::Integral => Predicate::Integral,
        PredicateArg::Real => Predicate::Real,
    };
    let method = match args.method {
        MethodArg::Brute | MethodArg::CrossCheck => Method::Brute,
        MethodArg::Orbit => Method::Orbit,
        MethodArg::Center => Method::Center,
    };
    let report = sweep(&ctx, predicate, method, &sprime)?;
    if args.method == MethodArg::CrossCheck {
        for other in [Method::Orbit, Method::Center] {
            let again = sweep(&ctx, predicate, other, &sprime)?;
            if again.violations != report.violations {
                return Err(CliError::Internal(format!(
                    "brute and {} sweeps disagree",
                    method_name(other)
                )));
            }
        }
    }
    let rendered = render_sweep(&report, args.format)?;
    if report.passed() {
        Ok(rendered)
    } else {
        Err(CliError::Failed(rendered))
    }
}

fn render_sweep(report: &SweepReport, format: Format) -> Result<String, CliError> {
    if format == Format::Json {
        return serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Internal(e.to_string()));
    }
    let name = format!("{:?}", report.predicate).to_lowercase();
    Ok(match report.first_violation() {
        None => format!(
            "{name}: holds ({} simples, {} evaluations)\n",
            report.simples, report.evaluations
        ),
        Some(v) => format!(
            "{name}: violated at {} m={} (value {}); {} violation(s) in {} evaluations\n",
            v.simple.label,
            v.m,
            v.value,
            report.violations.len(),
            report.evaluations
        ),
    })
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_ranges() {
        assert_eq!(MRange::parse("divisors").unwrap().values(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(MRange::parse("full").unwrap().values(4), vec![1, 2, 3, 4]);
        assert_eq!(MRange::parse("2..5").unwrap().values(60), vec![2, 3, 4, 5]);
        assert_eq!(MRange::parse("3, 7,9").unwrap().values(60), vec![3, 7, 9]);
        for bad in ["", "0", "5..2", "x", "1..", "2,,3"] {
            assert!(matches!(MRange::parse(bad), Err(CliError::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn sprime_grammar() {
        assert_eq!(parse_sprime("stab", 4).unwrap(), SPrimeChoice::Stabilizer);
        assert_eq!(parse_sprime("full-se", 4).unwrap(), SPrimeChoice::FullSE);
        let SPrimeChoice::Custom(g) = parse_sprime("gens:(1 2);(3 4)", 4).unwrap() else {
            panic!("expected custom generators");
        };
        assert_eq!(g.len(), 2);
        assert!(parse_sprime("gens:(1 9)", 4).is_err());
        assert!(parse_sprime("half", 4).is_err());
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        let cap: CliError = GroupError::CapExceeded { cap: 10 }.into();
        assert_eq!(cap.exit_code(), 3);
        let spec: CliError = IndicatorError::ZeroPower.into();
        assert_eq!(spec.exit_code(), 2);
        let internal: CliError = IndicatorError::Internal("x".into()).into();
        assert_eq!(internal.exit_code(), 4);
    }
}
