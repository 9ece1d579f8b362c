use std::f64::consts::LN_2;
use std::path::PathBuf;

use clap::{ArgGroup, Args, ValueEnum};
use serde::Serialize;

use entropy_modes::info::{
    clausius_check, h_function, normalized_information, shannon_information, BitFileStats,
    ClausiusVerdict, EntropyBudget, InfoMethod,
};

use crate::report::{read_input, CmdResult, Failure, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Stirling,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    Nats,
    Bits,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "lambda"])))]
pub struct EntropyArgs {
    /// Bitstream of ASCII '0'/'1' (whitespace ignored); `-` reads stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Treat the file as raw bytes, unpacked MSB-first.
    #[arg(long, requires = "file")]
    pub raw: bool,
    /// Number of bits Λ, instead of a file.
    #[arg(long, requires = "ones")]
    pub lambda: Option<u64>,
    /// Number of '1' bits L.
    #[arg(long, requires = "lambda")]
    pub ones: Option<u64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Stirling)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Units::Nats)]
    pub units: Units,
    /// Entropy units carried by each bit, K = m k_B.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    /// Entropy of the transmission in k_B; defaults to m·Λ.
    #[arg(long, allow_negative_numbers = true)]
    pub entropy_kb: Option<f64>,
}

#[derive(Debug, Serialize)]
struct Clausius {
    entropy_kb: f64,
    m: u32,
    k_kb: f64,
    information_nats: f64,
    margin_kb: f64,
    verdict: ClausiusVerdict,
}

#[derive(Debug, Serialize)]
struct EntropyResults {
    lambda: u64,
    ones: u64,
    p: f64,
    method: MethodArg,
    units: Units,
    information: f64,
    h_function: f64,
    normalized_information: f64,
    clausius: Clausius,
}

pub fn run(args: EntropyArgs) -> CmdResult {
    let (stats, bytes) = match (&args.file, args.lambda, args.ones) {
        (Some(path), _, _) => {
            let bytes = read_input(path)?;
            let stats = if args.raw {
                BitFileStats::from_bytes(&bytes)?
            } else {
                let text = std::str::from_utf8(&bytes).map_err(|_| {
                    Failure::data("bitstream must be ASCII '0'/'1' (use --raw for bytes)")
                })?;
                BitFileStats::from_ascii(text)?
            };
            (stats, Some(bytes))
        }
        (None, Some(lambda), Some(ones)) => (BitFileStats::new(lambda, ones)?, None),
        _ => unreachable!("clap requires --file or --lambda with --ones"),
    };

    let method = match args.method {
        MethodArg::Stirling => InfoMethod::Stirling,
        MethodArg::Exact => InfoMethod::Exact,
    };
    let info = shannon_information(&stats, method);
    let h = h_function(&stats);
    let scale = match args.units {
        Units::Nats => 1.0,
        Units::Bits => LN_2,
    };

    let entropy = args
        .entropy_kb
        .unwrap_or(args.m as f64 * stats.length() as f64);
    let budget = EntropyBudget::new(entropy, args.m, info)?;
    let outcome = clausius_check(&budget);

    let results = EntropyResults {
        lambda: stats.length(),
        ones: stats.ones(),
        p: stats.p(),
        method: args.method,
        units: args.units,
        information: info.nats() / scale,
        h_function: h / scale,
        normalized_information: normalized_information(stats.p())?,
        clausius: Clausius {
            entropy_kb: entropy,
            m: args.m,
            k_kb: budget.k(),
            information_nats: info.nats(),
            margin_kb: outcome.margin,
            verdict: outcome.verdict,
        },
    };
    Report::new("entropy", &args, bytes.as_deref(), results).print()
}
