//! Command-line front end. Exit codes: 0 success, 2 usage or parse error,
//! 3 verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::corpus::{run_corpus, CorpusConfig};
use crate::invariant::{d3_theorem, d3_verified, D3Report};
use crate::report::{decimal, exact_rational, fraction, render_text};
use crate::surgery::LinkingRule;
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cyclic-d3", version, about = "d3 of cyclic contact branched covers of the standard contact 3-sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BraidArgs {
    /// Braid word: whitespace-separated nonzero integers, k = σ_|k|^sign(k).
    #[arg(allow_hyphen_values = true)]
    word: String,
    /// Number of strands (default: largest index + 1).
    #[arg(long)]
    strands: Option<usize>,
}

impl BraidArgs {
    fn parse(&self) -> crate::Result<BraidWord> {
        parse_braid(&self.word, self.strands)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Formula path only.
    Compute {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(short = 'p', long = "p")]
        p: usize,
        #[arg(long)]
        json: bool,
    },
    /// Formula and surgery paths; exits 3 unless they agree.
    Verify {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(short = 'p', long = "p")]
        p: usize,
        /// Use the factorization as written (default).
        #[arg(long, conflicts_with = "reduced")]
        literal: bool,
        /// Freely reduce the factorization first.
        #[arg(long)]
        reduced: bool,
        /// Diagnostics: link every pair of sheets across letters.
        #[arg(long)]
        all_pairs_linking: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rows (p, Σσ_ω, d3) for p = 1..pmax.
    Table {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long)]
        pmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random braids through every invariance and cross-path check.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        pmax: usize,
        #[arg(long)]
        all_pairs_linking: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reads a JSON array of items from FILE (or standard input) and prints
    /// a JSON array of results in the same order.
    Batch { file: Option<PathBuf> },
}

fn rule(all_pairs: bool) -> LinkingRule {
    if all_pairs {
        LinkingRule::AllPairs
    } else {
        LinkingRule::Sheetwise
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchItem {
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    pub p: usize,
    /// Run the surgery path as well.
    #[serde(default)]
    pub verify: bool,
    #[serde(default)]
    pub reduced: bool,
}

#[derive(Debug, Serialize)]
struct BatchResult {
    input: BatchItem,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<D3Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn run_item(item: &BatchItem) -> crate::Result<D3Report> {
    let w = parse_braid(&item.word, item.strands)?;
    if item.verify {
        d3_verified(&w, item.p, !item.reduced, LinkingRule::Sheetwise)
    } else {
        d3_theorem(&w, item.p)
    }
}

#[derive(Debug, Serialize)]
struct TableRow {
    p: usize,
    tl_sum: i64,
    #[serde(serialize_with = "exact_rational")]
    d3: Rational,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match dispatch(cli.command, out, err) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            code
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Compute { braid, p, json } => {
            let report = d3_theorem(&braid.parse()?, p)?;
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{}", render_text(&report))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { braid, p, literal: _, reduced, all_pairs_linking, json } => {
            let w = braid.parse()?;
            if p < 2 {
                return Err(CliError::Usage(format!("verify needs p >= 2, got {p}")));
            }
            let report = d3_verified(&w, p, !reduced, rule(all_pairs_linking))?;
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{}", render_text(&report))?;
            }
            if report.consistent() {
                Ok(EXIT_OK)
            } else {
                writeln!(err, "verification failed: formula and surgery paths disagree")?;
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Table { braid, pmax, json } => {
            let w = braid.parse()?;
            let rows = (1..=pmax)
                .into_par_iter()
                .map(|p| {
                    let r = d3_theorem(&w, p)?;
                    Ok(TableRow { p, tl_sum: r.tl.sum, d3: r.d3_theorem })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            if json {
                writeln!(out, "{}", to_json(&rows))?;
            } else {
                writeln!(out, "{:>4}  {:>6}  {:>8}  decimal", "p", "Σσ_ω", "d3")?;
                for row in &rows {
                    writeln!(out, "{:>4}  {:>6}  {:>8}  {}", row.p, row.tl_sum, fraction(&row.d3), decimal(&row.d3))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Corpus { seed, count, pmax, all_pairs_linking, json } => {
            let summary = run_corpus(CorpusConfig { seed, count, pmax, rule: rule(all_pairs_linking) });
            if json {
                writeln!(out, "{}", to_json(&summary))?;
            } else {
                for f in &summary.failures {
                    writeln!(out, "FAIL [{}] '{}' (m={}, p={}): {}", f.check, f.word, f.strands, f.p, f.detail)?;
                    writeln!(out, "  reproduce: {}", f.reproduce)?;
                }
                writeln!(out, "{}", summary.headline())?;
            }
            Ok(if summary.all_passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Batch { file } => {
            let mut text = String::new();
            match &file {
                Some(path) => text = fs::read_to_string(path)?,
                None => {
                    io::stdin().read_to_string(&mut text)?;
                }
            }
            let items: Vec<BatchItem> =
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("batch input: {e}")))?;
            let results: Vec<BatchResult> = items
                .into_par_iter()
                .map(|input| match run_item(&input) {
                    Ok(report) => BatchResult { input, report: Some(report), error: None },
                    Err(e) => BatchResult { input, report: None, error: Some(e.to_string()) },
                })
                .collect();
            writeln!(out, "{}", to_json(&results))?;
            let failed = results.iter().filter(|r| r.error.is_some()).count();
            let mismatched = results.iter().filter(|r| r.report.as_ref().is_some_and(|r| !r.consistent())).count();
            if failed > 0 {
                writeln!(err, "{failed} item(s) could not be parsed or computed")?;
            }
            Ok(if failed > 0 {
                EXIT_USAGE
            } else if mismatched > 0 {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            })
        }
    }
}
