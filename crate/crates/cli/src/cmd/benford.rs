use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use entropy_modes::benford::{
    benford_pmf, conformance, DigitDistribution, DigitHistogram, MadThresholds, Verdict,
};

use crate::report::{
    is_stdio, parse_pair, read_input, warn, write_output, CmdResult, Failure, Report,
};

#[derive(Args, Debug, Serialize)]
pub struct BenfordArgs {
    /// Newline-delimited numbers; `-` reads stdin.
    #[arg(long, conflicts_with = "csv")]
    pub file: Option<PathBuf>,
    /// CSV file; pick the column with --column.
    #[arg(long, requires = "column")]
    pub csv: Option<PathBuf>,
    /// Header name, or 0-based index.
    #[arg(long, requires = "csv")]
    pub column: Option<String>,
    /// The CSV has no header row (only with an index --column).
    #[arg(long, requires = "csv")]
    pub no_header: bool,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=65_536))]
    pub base: u32,
    /// Write the expected digit probabilities as TSV; `-` or no value means stdout.
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    pub emit_pmf: Option<PathBuf>,
    /// MAD verdict thresholds.
    #[arg(long, value_name = "CLOSE,ACCEPTABLE")]
    pub thresholds: Option<String>,
}

#[derive(Debug, Serialize)]
struct DigitRow {
    digit: u32,
    count: u64,
    observed: f64,
    expected: f64,
}

#[derive(Debug, Serialize)]
struct BenfordResults {
    base: u32,
    total: u64,
    skipped: u64,
    digits: Vec<DigitRow>,
    chi2: f64,
    dof: u32,
    mad: f64,
    thresholds: MadThresholds,
    verdict: Verdict,
    warnings: Vec<String>,
}

pub fn pmf_tsv(pmf: &DigitDistribution) -> String {
    let mut out = String::new();
    for (i, p) in pmf.probs().iter().enumerate() {
        writeln!(out, "{}\t{p:.6}", i + 1).expect("writing to a String");
    }
    out
}

pub fn run(args: BenfordArgs) -> CmdResult {
    let pmf = benford_pmf(args.base)?;
    let thresholds = match &args.thresholds {
        Some(t) => {
            let (close, acceptable) = parse_pair(t, "--thresholds")?;
            MadThresholds::new(close, acceptable).map_err(|e| Failure::usage(e.to_string()))?
        }
        None => MadThresholds::default(),
    };

    let has_input = args.file.is_some() || args.csv.is_some();
    if let Some(path) = &args.emit_pmf {
        if has_input && is_stdio(path) {
            return Err(Failure::usage(
                "--emit-pmf needs a file path when a dataset is also given (stdout carries the report)",
            ));
        }
        write_output(path, &pmf_tsv(&pmf))?;
    }
    if !has_input {
        if args.emit_pmf.is_some() {
            return Ok(());
        }
        return Err(Failure::usage(
            "give --file, --csv with --column, or --emit-pmf",
        ));
    }

    let mut hist = DigitHistogram::new(args.base)?;
    let bytes = match (&args.file, &args.csv) {
        (Some(path), _) => {
            let bytes = read_input(path)?;
            let text = std::str::from_utf8(&bytes)
                .map_err(|_| Failure::data(format!("{} is not UTF-8 text", path.display())))?;
            for line in text.lines() {
                hist.record_text(line);
            }
            bytes
        }
        (None, Some(path)) => {
            let bytes = read_input(path)?;
            let column = args.column.as_deref().expect("clap requires --column");
            read_csv_column(&bytes, column, !args.no_header, &mut hist)?;
            bytes
        }
        (None, None) => unreachable!(),
    };

    let report = conformance(&hist, &pmf, &thresholds).map_err(|e| Failure::data(e.to_string()))?;
    let mut warnings = Vec::new();
    if args.base != 10 && args.thresholds.is_none() {
        warnings.push(format!(
            "default MAD thresholds are base-10 conventions; the verdict for base {} is indicative only",
            args.base
        ));
    }
    for w in &warnings {
        warn(w);
    }

    let freqs = hist.frequencies();
    let digits = (1..args.base)
        .map(|d| DigitRow {
            digit: d,
            count: hist.count(d),
            observed: freqs[d as usize - 1],
            expected: pmf.probs()[d as usize - 1],
        })
        .collect();
    let results = BenfordResults {
        base: args.base,
        total: hist.total(),
        skipped: hist.skipped(),
        digits,
        chi2: report.chi2,
        dof: report.dof,
        mad: report.mad,
        thresholds,
        verdict: report.verdict,
        warnings,
    };
    Report::new("benford", &args, Some(&bytes), results).print()
}

fn read_csv_column(
    bytes: &[u8],
    column: &str,
    has_header: bool,
    hist: &mut DigitHistogram,
) -> CmdResult {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .from_reader(bytes);
    let csv_err = |e: csv::Error| Failure::data(format!("cannot read CSV: {e}"));

    let index = match column.parse::<usize>() {
        Ok(i) => {
            if has_header {
                let width = reader.headers().map_err(csv_err)?.len();
                if i >= width {
                    return Err(Failure::data(format!(
                        "column index {i} is out of range, the header has {width} columns"
                    )));
                }
            }
            i
        }
        Err(_) => {
            if !has_header {
                return Err(Failure::usage(
                    "a column name needs a header row; drop --no-header",
                ));
            }
            let headers = reader.headers().map_err(csv_err)?;
            headers
                .iter()
                .position(|h| h.trim() == column)
                .ok_or_else(|| Failure::data(format!("no column named '{column}' in the header")))?
        }
    };

    for record in reader.records() {
        let record = record.map_err(csv_err)?;
        match record.get(index) {
            Some(cell) => hist.record_text(cell),
            None => hist.record_skip(),
        }
    }
    Ok(())
}
