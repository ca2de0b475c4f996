//! Command-line frontend.
//!
//! Every subcommand renders to a `String` so the same code backs the binary
//! and the golden tests. Exit codes: 0 success, 1 domain or parse error,
//! 2 verification failure, 3 internal error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{
    crank_mex_images, crank_mex_inv, crank_mex_map, gamma, gamma_inv, lambda_involution, phi_bar,
    phi_map, phi_prime_map, psi_bar, psi_map, psi_prime_map, BijectionTrace, Direction, PairState,
};
use crate::decompose::durfee_decompose;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{crank, d_j, eta, has_part, in_f_j, in_m_j, mex_j, omega};
use crate::verify::{partitions, run_theorem_suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "crankmex",
    version,
    about = "Crank and mex statistics of integer partitions, with explicit bijections"
)]
pub struct Cli {
    /// Aligned text, or one JSON object per row.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Statistics of one partition.
    Stats {
        /// Comma-separated parts, e.g. 5,3,2,2; "" is the empty partition.
        #[arg(allow_hyphen_values = true)]
        partition: String,
        /// Report a single j instead of the range 0..=max-j.
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, default_value_t = 5)]
        max_j: u32,
    },
    /// Apply one map.
    Map {
        #[arg(value_enum)]
        name: MapName,
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value_t = 0)]
        j: u32,
    },
    /// Show every iteration of an iterated map.
    Trace {
        #[arg(value_enum)]
        name: TraceName,
        #[arg(allow_hyphen_values = true)]
        partition: String,
        #[arg(long, default_value_t = 0)]
        j: u32,
    },
    /// All partitions of a weight in M_j with part j, and their images.
    Table {
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 0)]
        j: u32,
    },
    /// Exhaustive check of every identity and bijection.
    Verify {
        #[arg(long, default_value_t = 25)]
        max_n: u32,
        #[arg(long, default_value_t = 12)]
        max_j: u32,
        /// Also write the report as JSON lines to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Phi,
    Psi,
    #[value(alias = "phi-prime")]
    PhiPrime,
    #[value(alias = "psi-prime")]
    PsiPrime,
    PhiBar,
    PsiBar,
    Gamma,
    GammaInv,
    Lambda,
    #[value(alias = "crank-mex-map")]
    CrankMex,
    CrankMexInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceName {
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
    PhiBar,
    PsiBar,
}

impl TraceName {
    fn label(self) -> &'static str {
        match self {
            TraceName::Phi => "Phi",
            TraceName::Psi => "Psi",
            TraceName::PhiPrime => "Phi'",
            TraceName::PsiPrime => "Psi'",
            TraceName::PhiBar => "Phi_bar",
            TraceName::PsiBar => "Psi_bar",
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() || matches!(e, Error::SeriesOverflow { .. }) {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            }
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn execute(cli: &Cli) -> std::result::Result<(String, i32), CliError> {
    let fmt = cli.format;
    Ok(match &cli.command {
        Command::Stats {
            partition,
            j,
            max_j,
        } => {
            let lam = partition.parse()?;
            let js: Vec<u32> = match j {
                Some(j) => vec![*j],
                None => (0..=*max_j).collect(),
            };
            (cmd_stats(&lam, &js, fmt), EXIT_OK)
        }
        Command::Map { name, partition, j } => {
            (cmd_map(*name, *j, &partition.parse()?, fmt)?, EXIT_OK)
        }
        Command::Trace { name, partition, j } => {
            (cmd_trace(*name, *j, &partition.parse()?, fmt)?, EXIT_OK)
        }
        Command::Table { weight, j } => (cmd_table(*weight, *j, fmt)?, EXIT_OK),
        Command::Verify {
            max_n,
            max_j,
            output,
        } => {
            let report = run_theorem_suite(*max_n, *max_j)?;
            if let Some(path) = output {
                report.write_records(io::BufWriter::new(std::fs::File::create(path)?))?;
            }
            let text = match fmt {
                Format::Text => report.render_text(),
                Format::Records => {
                    let mut buf = Vec::new();
                    report.write_records(&mut buf)?;
                    String::from_utf8(buf).expect("JSON is UTF-8")
                }
            };
            (text, verify_exit_code(&report))
        }
    })
}

pub fn verify_exit_code(report: &VerificationReport) -> i32 {
    if report.has_internal() {
        EXIT_INTERNAL
    } else if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn render_columns(rows: &[Vec<String>]) -> String {
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
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[c] - cell.chars().count();
            line.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn json_line(out: &mut String, value: serde_json::Value) {
    out.push_str(&value.to_string());
    out.push('\n');
}

pub fn cmd_stats(lam: &Partition, js: &[u32], fmt: Format) -> String {
    let durfee = durfee_decompose(lam);
    let mut out = String::new();
    if fmt == Format::Records {
        json_line(
            &mut out,
            json!({
                "partition": lam.to_string(),
                "weight": lam.weight(),
                "length": lam.len(),
                "omega": omega(lam),
                "eta": eta(lam),
                "crank": crank(lam),
                "conjugate": lam.conjugate().to_string(),
                "durfee": durfee,
            }),
        );
        for &j in js {
            json_line(
                &mut out,
                json!({
                    "j": j,
                    "mex_j": mex_j(j, lam),
                    "d_j": d_j(j, lam),
                    "in_m_j": in_m_j(j, lam),
                    "in_f_j": in_f_j(j, lam),
                    "has_part_j": has_part(j, lam),
                }),
            );
        }
        return out;
    }
    let list = |v: &[u32]| {
        format!(
            "({})",
            v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        )
    };
    let summary = vec![
        vec!["partition".into(), format!("{lam:?}")],
        vec!["weight".into(), lam.weight().to_string()],
        vec!["length".into(), lam.len().to_string()],
        vec!["omega".into(), omega(lam).to_string()],
        vec!["eta".into(), eta(lam).to_string()],
        vec!["crank".into(), crank(lam).to_string()],
        vec!["conjugate".into(), format!("{:?}", lam.conjugate())],
        vec![
            "durfee".into(),
            format!(
                "t={} mu={} nu={}",
                durfee.t,
                list(&durfee.mu),
                list(&durfee.nu)
            ),
        ],
    ];
    out.push_str(&render_columns(&summary));
    out.push('\n');
    let mut rows = vec![["j", "mex_j", "d_j", "M_j", "F_j", "has_j"]
        .map(String::from)
        .to_vec()];
    for &j in js {
        rows.push(vec![
            j.to_string(),
            mex_j(j, lam).to_string(),
            d_j(j, lam).to_string(),
            yes_no(in_m_j(j, lam)),
            yes_no(in_f_j(j, lam)),
            yes_no(has_part(j, lam)),
        ]);
    }
    out.push_str(&render_columns(&rows));
    out
}

fn apply_map(name: MapName, j: u32, lam: &Partition) -> Result<Partition> {
    Ok(match name {
        MapName::Phi => phi_map(j, lam)?.0,
        MapName::Psi => psi_map(j, lam)?.0,
        MapName::PhiPrime => phi_prime_map(j, lam)?.0,
        MapName::PsiPrime => psi_prime_map(j, lam)?.0,
        MapName::PhiBar => phi_bar(j, lam)?.0,
        MapName::PsiBar => psi_bar(j, lam)?.0,
        MapName::Gamma => gamma(j, lam)?,
        MapName::GammaInv => gamma_inv(j, lam)?,
        MapName::Lambda => lambda_involution(lam)?,
        MapName::CrankMex => crank_mex_map(j, lam)?,
        MapName::CrankMexInv => crank_mex_inv(j, lam)?,
    })
}

pub fn cmd_map(name: MapName, j: u32, lam: &Partition, fmt: Format) -> Result<String> {
    let image = apply_map(name, j, lam)?;
    let map = name.to_possible_value().expect("no skipped variants");
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "{image}");
            let _ = writeln!(out, "crank {} -> {}", crank(lam), crank(&image));
        }
        Format::Records => json_line(
            &mut out,
            json!({
                "map": map.get_name(),
                "j": j,
                "input": lam.to_string(),
                "output": image.to_string(),
                "crank_before": crank(lam),
                "crank_after": crank(&image),
            }),
        ),
    }
    Ok(out)
}

fn run_trace(name: TraceName, j: u32, lam: &Partition) -> Result<(Partition, BijectionTrace)> {
    match name {
        TraceName::Phi => phi_map(j, lam),
        TraceName::Psi => psi_map(j, lam),
        TraceName::PhiPrime => phi_prime_map(j, lam),
        TraceName::PsiPrime => psi_prime_map(j, lam),
        TraceName::PhiBar => phi_bar(j, lam),
        TraceName::PsiBar => psi_bar(j, lam),
    }
}

/// `d` as used by the next step from `state`.
fn driving_d(direction: Direction, state: &PairState) -> usize {
    match direction {
        Direction::Phi => d_j(state.level(), &state.lam),
        Direction::Psi => d_j(state.level() + 1, &state.lam),
    }
}

pub fn cmd_trace(name: TraceName, j: u32, lam: &Partition, fmt: Format) -> Result<String> {
    let (result, trace) = run_trace(name, j, lam)?;
    let mut out = String::new();
    if fmt == Format::Records {
        for r in trace.records() {
            json_line(&mut out, serde_json::to_value(r).expect("plain struct"));
        }
        return Ok(out);
    }
    let direction = match name {
        TraceName::Phi | TraceName::PhiPrime | TraceName::PhiBar => Direction::Phi,
        _ => Direction::Psi,
    };
    let step_name = match direction {
        Direction::Phi => "phi",
        Direction::Psi => "psi",
    };
    let mut rows = vec![vec![
        "Iteration".to_string(),
        "k".into(),
        "lambda".into(),
        "d".into(),
        "case".into(),
        format!("{step_name}_{j}(lambda)"),
    ]];
    for (i, s) in trace.steps.iter().enumerate() {
        rows.push(vec![
            (i + 1).to_string(),
            s.before.k.to_string(),
            format!("{:?}", s.before.lam),
            s.d.to_string(),
            s.case.to_string(),
            format!("{:?}", s.after.lam),
        ]);
    }
    let last = &trace.output;
    rows.push(vec![
        (trace.len() + 1).to_string(),
        last.k.to_string(),
        format!("{:?}", last.lam),
        driving_d(direction, last).to_string(),
        "-".into(),
        "-".into(),
    ]);
    out.push_str(&render_columns(&rows));
    let _ = writeln!(
        out,
        "{}_{j}{} = {} after {} iteration{}",
        name.label(),
        trace.input,
        trace.output,
        trace.len(),
        if trace.len() == 1 { "" } else { "s" }
    );
    if result != last.lam {
        let _ = writeln!(out, "result {result:?}");
    }
    Ok(out)
}

/// Rows of the correspondence table: `λ ∈ M_j` with part `j`, ordered by
/// `mex_j` and then in decreasing lexicographic order.
pub fn table_rows(weight: u32, j: u32) -> Result<Vec<Partition>> {
    if weight < 2 {
        return Err(Error::domain(
            "table",
            format!("weight {weight} is below 2, where the crank-mex identity does not hold"),
        ));
    }
    let mut rows: Vec<Partition> = partitions(weight)?
        .filter(|p| in_m_j(j, p) && has_part(j, p))
        .collect();
    rows.sort_by(|a, b| mex_j(j, a).cmp(&mex_j(j, b)).then_with(|| b.cmp(a)));
    Ok(rows)
}

pub fn cmd_table(weight: u32, j: u32, fmt: Format) -> Result<String> {
    let rows = table_rows(weight, j)?;
    let mut out = String::new();
    let with_crank = |p: &Partition| format!("{p:?} [{}]", crank(p));
    let mut cells = vec![vec![
        "lambda".to_string(),
        format!("Phi_{j}"),
        format!("Gamma_{j}(Phi_{j})"),
        format!("Lambda(Gamma_{j}(Phi_{j}))"),
    ]];
    let mut group = None;
    for lam in &rows {
        let im = crank_mex_images(j, lam)?;
        if fmt == Format::Records {
            json_line(
                &mut out,
                json!({
                    "lambda": lam.to_string(),
                    "mex_j": mex_j(j, lam),
                    "phi": im.phi.to_string(),
                    "gamma": im.gamma.to_string(),
                    "gamma_crank": crank(&im.gamma),
                    "lambda_image": im.lambda.to_string(),
                    "lambda_crank": crank(&im.lambda),
                }),
            );
            continue;
        }
        let mex = mex_j(j, lam);
        if group.is_some_and(|g| g != mex) {
            cells.push(vec!["--".to_string()]);
        }
        group = Some(mex);
        cells.push(vec![
            format!("{lam:?}"),
            format!("{:?}", im.phi),
            with_crank(&im.gamma),
            with_crank(&im.lambda),
        ]);
    }
    if fmt == Format::Text {
        out.push_str(&render_columns(&cells));
        let _ = writeln!(out, "{} rows", rows.len());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("crankmex").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn stats_d_values() {
        let text = cmd_stats(
            &partition![5, 3, 2, 2],
            &[0, 1, 2, 3, 4, 5],
            Format::Records,
        );
        let ds: Vec<u64> = text
            .lines()
            .skip(1)
            .map(|l| {
                serde_json::from_str::<serde_json::Value>(l).unwrap()["d_j"]
                    .as_u64()
                    .unwrap()
            })
            .collect();
        assert_eq!(ds, vec![2, 2, 1, 1, 1, 0]);
    }

    #[test]
    fn stats_of_empty() {
        let (code, out, _) = call(&["stats", ""]);
        assert_eq!(code, 0);
        assert!(out.contains("weight     0"));
        assert!(out.contains("crank      0"));
    }

    #[test]
    fn map_examples() {
        let (code, out, _) = call(&["map", "crank-mex", "11,8,7,7,5,5,4,3,2,2", "--j", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("12,9,7,6,5,5,4,2,1,1,1,1"));
        let (_, out, _) = call(&["map", "lambda", "2,2"]);
        assert_eq!(out, "2,1,1\ncrank 2 -> -2\n");
        let (_, out, _) = call(&["map", "gamma", "11,8,7,7,5,5,4,3,2,2", "--j", "5"]);
        assert_eq!(out.lines().next(), Some("10,7,7,7,5,4,3,2,2,1,1,1,1,1,1,1"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["stats", "3,x"]).0, EXIT_INPUT);
        assert_eq!(call(&["stats", "2,3"]).0, EXIT_INPUT);
        assert_eq!(call(&["stats", "-1"]).0, EXIT_INPUT);
        assert_eq!(call(&["map", "phi", "1", "--j", "0"]).0, EXIT_INPUT);
        assert_eq!(call(&["table", "--weight", "1"]).0, EXIT_INPUT);
        assert_eq!(call(&["bogus"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        let (code, out, _) = call(&["verify", "--max-n", "1", "--max-j", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("skipped"));
    }

    #[test]
    fn parse_errors_name_the_position() {
        let (_, _, err) = call(&["stats", "3,x"]);
        assert!(err.contains("index 1"), "{err}");
    }

    #[test]
    fn table_two() {
        let rows = table_rows(2, 0).unwrap();
        // (1,1) has 0-mex 2, so only (2) qualifies
        assert_eq!(rows, vec![partition![2]]);
        let text = cmd_table(2, 0, Format::Text).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert_eq!(
            row.split_whitespace().collect::<Vec<_>>(),
            ["(2)", "(2)", "(1,1)", "[-2]", "(2)", "[2]"]
        );
        assert!(text.ends_with("1 rows\n"));
    }

    #[test]
    fn table_nine_row_three_three_three() {
        let im = crank_mex_images(0, &partition![3, 3, 3]).unwrap();
        assert_eq!(im.phi, partition![4, 4, 1]);
        assert_eq!(im.gamma, partition![3, 3, 1, 1, 1]);
        assert_eq!(im.lambda, partition![3, 3, 3]);
        assert_eq!(table_rows(9, 0).unwrap().len(), 16);
    }

    #[test]
    fn verify_writes_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.jsonl");
        let (code, _, _) = call(&[
            "verify",
            "--max-n",
            "5",
            "--max-j",
            "2",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let written = std::fs::read_to_string(path).unwrap();
        assert!(written.lines().all(|l| l.starts_with('{')));
    }
}
