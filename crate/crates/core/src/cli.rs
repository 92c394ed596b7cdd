//! Command-line surface. [`run`] takes the argument list and output streams
//! explicitly so it can be driven from tests; the binary only forwards
//! `std::env::args` and exits with the returned code.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 character-oracle cap exceeded, 4 order violation.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::partition::{dominance_chain, one_move, Partition, PartitionError, Style};
use crate::spectrum::{
    eta_character_capped, eta_new, eta_renteln, eta_schur_sum, spectrum_table_with_jobs, SpectrumEntry, SpectrumError,
    DEFAULT_ORACLE_CAP,
};
use crate::verify::{ReferenceTable, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ORACLE_CAP: i32 = 3;
pub const EXIT_ORDER: i32 = 4;

const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "derangement-spectrum",
    version,
    about = "Exact eigenvalues of the derangement graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalue, sign and multiplicity for one partition
    Eig {
        /// Partition, e.g. "4,2,1^2" or "()"
        partition: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// The spectrum for all partitions of n
    Table {
        n: usize,
        #[arg(long)]
        min_first_part: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Sweep depth; each suite has its own default
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 10)]
        oracle_cap: usize,
    },
    /// Single-box move chain between two comparable partitions
    Chain { from: String, to: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    New,
    Renteln,
    Schur,
    Character,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Tables,
    Asp,
    Dominance,
    Bounds,
    Cross,
    Identities,
    Shifted,
}

/// JSON document emitted by `table --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub n: usize,
    pub coverage: String,
    pub entries: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: Vec<usize>,
    /// Decimal string; values outgrow 2⁵³.
    pub eta: String,
    pub sign: i8,
    pub multiplicity: String,
}

impl From<&SpectrumEntry> for TableRow {
    fn from(e: &SpectrumEntry) -> Self {
        TableRow {
            partition: e.partition.parts().to_vec(),
            eta: e.eta.to_string(),
            sign: e.sign,
            multiplicity: e.multiplicity.to_string(),
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eig {
            partition,
            method,
            oracle_cap,
        } => cmd_eig(&partition, method, oracle_cap, out, err),
        Command::Table {
            n,
            min_first_part,
            format,
            jobs,
        } => cmd_table(n, min_first_part, format, jobs, out, err),
        Command::Verify {
            suite,
            max_n,
            oracle_cap,
        } => cmd_verify(suite, max_n, oracle_cap, out, err),
        Command::Chain { from, to } => cmd_chain(&from, &to, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_arg(text: &str, err: &mut dyn Write) -> Result<Partition, i32> {
    Partition::parse(text).map_err(|e| {
        let _ = writeln!(err, "error: cannot parse partition {text:?}: {e}");
        EXIT_USAGE
    })
}

fn sign_text(sign: i8) -> &'static str {
    match sign {
        1 => "+1",
        -1 => "-1",
        _ => "0",
    }
}

fn cmd_eig(
    text: &str,
    method: Method,
    oracle_cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let lam = match parse_arg(text, err) {
        Ok(p) => p,
        Err(code) => return Ok(code),
    };
    let n = lam.size();
    let (eta, label) = match method {
        Method::Auto | Method::New => (eta_new(&lam), "new"),
        Method::Renteln => (eta_renteln(&lam), "renteln"),
        Method::Schur => (eta_schur_sum(&lam), "schur"),
        Method::Character => match eta_character_capped(&lam, oracle_cap) {
            Ok(v) => (v, "character"),
            Err(e @ SpectrumError::TooLarge { .. }) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_ORACLE_CAP);
            }
            Err(e) => unreachable!("{e}"),
        },
    };
    let sign = if eta.is_positive() {
        1
    } else if eta.is_negative() {
        -1
    } else {
        0
    };
    let dim = lam.dim();
    writeln!(out, "partition     {}", lam.format(Style::Exponent))?;
    writeln!(out, "n             {n}")?;
    writeln!(out, "eta           {eta}")?;
    writeln!(out, "sign          {}", sign_text(sign))?;
    writeln!(out, "multiplicity  {} (dim {dim})", &dim * &dim)?;
    if method != Method::Auto {
        writeln!(out, "method        {label}")?;
        return Ok(EXIT_OK);
    }
    let renteln = eta_renteln(&lam);
    let schur = eta_schur_sum(&lam);
    if renteln == eta && schur == eta {
        writeln!(out, "routes        new = renteln = schur")?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            out,
            "routes        MISMATCH new = {eta}, renteln = {renteln}, schur = {schur}"
        )?;
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn coverage_label(min_first_part: Option<usize>) -> String {
    match min_first_part {
        Some(k) if k > 1 => format!("first-part-at-least {k}"),
        _ => "full".to_string(),
    }
}

/// Renders a spectrum table in one of the three output formats.
pub fn render_table(n: usize, min_first_part: Option<usize>, entries: &[SpectrumEntry], format: Format) -> String {
    match format {
        Format::Text => {
            let rows: Vec<[String; 5]> = entries
                .iter()
                .map(|e| {
                    [
                        n.to_string(),
                        e.partition.format(Style::Exponent),
                        e.eta.to_string(),
                        sign_text(e.sign).to_string(),
                        e.multiplicity.to_string(),
                    ]
                })
                .collect();
            let header = ["n", "partition", "eta", "sign", "multiplicity"].map(String::from);
            let mut widths = header.clone().map(|h| h.len());
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut s = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                let line = format!(
                    "{:>w0$}  {:<w1$}  {:>w2$}  {:>w3$}  {:>w4$}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    row[4],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3],
                    w4 = widths[4],
                );
                s.push_str(line.trim_end());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "partition", "eta", "sign", "multiplicity"])
                .expect("in-memory write");
            for e in entries {
                w.write_record([
                    n.to_string(),
                    e.partition.format(Style::Exponent),
                    e.eta.to_string(),
                    e.sign.to_string(),
                    e.multiplicity.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Json => {
            let doc = TableDocument {
                n,
                coverage: coverage_label(min_first_part),
                entries: entries.iter().map(TableRow::from).collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn cmd_table(
    n: usize,
    min_first_part: Option<usize>,
    format: Format,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    if n == 0 || jobs == 0 {
        writeln!(err, "error: n and --jobs must be at least 1")?;
        return Ok(EXIT_USAGE);
    }
    let entries = match spectrum_table_with_jobs(n, min_first_part, jobs) {
        Ok(e) => e,
        Err(e) => {
            writeln!(err, "error: cannot start worker threads: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    out.write_all(render_table(n, min_first_part, &entries, format).as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: SuiteArg,
    max_n: Option<usize>,
    oracle_cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Tables => vec![Suite::Tables],
        SuiteArg::Asp => vec![Suite::Asp],
        SuiteArg::Dominance => vec![Suite::Dominance],
        SuiteArg::Bounds => vec![Suite::Bounds],
        SuiteArg::Cross => vec![Suite::Cross],
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Shifted => vec![Suite::Shifted],
    };
    let mut reports: Vec<(SuiteReport, f64)> = Vec::new();
    for s in suites {
        let start = Instant::now();
        match s.run(max_n, oracle_cap) {
            Ok(report) => reports.push((report, start.elapsed().as_secs_f64())),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let mut failed = false;
    for (report, secs) in &reports {
        writeln!(out, "{report} ({secs:.2}s)")?;
        for note in &report.notes {
            writeln!(out, "  note: {note}")?;
        }
        for f in report.failures.iter().take(MAX_LISTED_FAILURES) {
            writeln!(out, "  {}: expected {}, got {}", f.input, f.expected, f.actual)?;
        }
        if report.failures.len() > MAX_LISTED_FAILURES {
            writeln!(out, "  ... {} more", report.failures.len() - MAX_LISTED_FAILURES)?;
        }
        failed |= !report.passed();
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

fn cmd_chain(from: &str, to: &str, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let (from, to) = match (parse_arg(from, err), parse_arg(to, err)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(code), _) | (_, Err(code)) => return Ok(code),
    };
    let chain = match dominance_chain(&from, &to) {
        Ok(c) => c,
        Err(e @ PartitionError::NotComparable { .. }) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_ORDER);
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let show_eta = from.first() == to.first();
    let moves = chain.len() - 1;
    writeln!(
        out,
        "{} -> {}: {moves} move{}",
        from.format(Style::Exponent),
        to.format(Style::Exponent),
        if moves == 1 { "" } else { "s" }
    )?;
    let width = chain.iter().map(|p| p.format(Style::Exponent).len()).max().unwrap_or(0);
    for (i, p) in chain.iter().enumerate() {
        let step = if i == 0 {
            "start".to_string()
        } else {
            let (m1, m2) = one_move(&chain[i - 1], p)
                .expect("same size")
                .expect("chain steps are single moves");
            format!("({m1},{m2})")
        };
        let mut line = format!("{i:>3}  {:<width$}  {step:<7}", p.format(Style::Exponent));
        if show_eta {
            line.push_str(&format!("  |eta| = {}", eta_new(p).abs()));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(EXIT_OK)
}

/// Looks up the published value for `p`, if any.
pub fn reference_eta(p: &Partition) -> Option<num_bigint::BigInt> {
    ReferenceTable::embedded().get(p).cloned()
}
