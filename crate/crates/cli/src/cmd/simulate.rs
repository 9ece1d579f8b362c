use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Serialize;

use entropy_modes::benford::{benford_pmf, conformance, MadThresholds, Verdict};
use entropy_modes::sim::{
    benford_of_summary, run_replicas, Init, OccupancySummary, SimConfig, SimState, Simulation,
    RNG_ALGORITHM, RNG_VERSION,
};

use crate::report::{CmdResult, Failure, Report, RngInfo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InitArg {
    #[value(name = "all_in_one")]
    AllInOne,
    Uniform,
}

#[derive(Args, Debug, Serialize)]
pub struct SimulateArgs {
    /// Number of modes M.
    #[arg(long)]
    pub modes: usize,
    /// Number of quanta Q.
    #[arg(long)]
    pub quanta: u64,
    #[arg(long)]
    pub steps: u64,
    /// Steps discarded before sampling; 10% of --steps by default.
    #[arg(long)]
    pub burn_in: Option<u64>,
    #[arg(long, env = "ENTROPY_MODES_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = InitArg::Uniform)]
    pub init: InitArg,
    /// Independent chains on separate streams of the same seed.
    #[arg(long, default_value_t = 1)]
    pub replicas: usize,
    /// Also test the leading digits of the occupation numbers.
    #[arg(long)]
    pub benford_digits: bool,
    /// Write the occupancy histogram at every snapshot as TSV.
    #[arg(long)]
    pub trajectory: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct DigitReport {
    base: u32,
    counts: Vec<u64>,
    total: u64,
    expected: Vec<f64>,
    chi2: f64,
    dof: u32,
    mad: f64,
    verdict: Verdict,
}

#[derive(Debug, Serialize)]
struct SimulateResults {
    snapshots: u64,
    mean_occupancy: f64,
    phi_estimate: Option<f64>,
    tv_distance: f64,
    histogram: Vec<u64>,
    empirical: Vec<f64>,
    reference: Vec<f64>,
    benford: Option<DigitReport>,
}

pub fn run(mut args: SimulateArgs) -> CmdResult {
    let burn_in = args
        .burn_in
        .unwrap_or(SimConfig::default_burn_in(args.steps));
    args.burn_in = Some(burn_in);
    let init = match args.init {
        InitArg::AllInOne => Init::AllInOne,
        InitArg::Uniform => Init::Uniform,
    };
    let config = SimConfig::new(
        args.modes,
        args.quanta,
        args.steps,
        burn_in,
        args.seed,
        init,
    )
    .map_err(|e| Failure::usage(e.to_string()))?;
    if args.replicas == 0 {
        return Err(Failure::usage("--replicas must be at least 1"));
    }
    if args.trajectory.is_some() && args.replicas > 1 {
        return Err(Failure::usage(
            "--trajectory records a single chain; drop --replicas",
        ));
    }

    let summary = match &args.trajectory {
        Some(path) => run_with_trajectory(config, path)?,
        None => run_replicas(&config, args.replicas)?,
    };

    let benford = if args.benford_digits {
        let hist = benford_of_summary(&summary, 10)?;
        let pmf = benford_pmf(10)?;
        let r = conformance(&hist, &pmf, &MadThresholds::default())?;
        Some(DigitReport {
            base: 10,
            counts: hist.counts().to_vec(),
            total: hist.total(),
            expected: pmf.probs().to_vec(),
            chi2: r.chi2,
            dof: r.dof,
            mad: r.mad,
            verdict: r.verdict,
        })
    } else {
        None
    };

    let results = SimulateResults {
        snapshots: summary.snapshots,
        mean_occupancy: summary.mean,
        phi_estimate: summary.phi_estimate().map(|p| p.value()),
        tv_distance: summary.distance,
        empirical: summary.empirical(),
        histogram: summary.histogram.clone(),
        reference: summary.reference.clone(),
        benford,
    };
    let rng = RngInfo {
        algorithm: RNG_ALGORITHM,
        version: RNG_VERSION,
        seed: args.seed,
        streams: args.replicas as u64,
    };
    Report::new("simulate", &args, None, results)
        .with_rng(rng)
        .print()
}

fn run_with_trajectory(config: SimConfig, path: &Path) -> CmdResult<OccupancySummary> {
    let io_err = |e: std::io::Error| Failure::data(format!("cannot write {}: {e}", path.display()));
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    let mut failed = writeln!(out, "step\thistogram").err();
    let mut counts: Vec<u64> = Vec::new();
    let mut sim = Simulation::new(config);
    sim.advance_to(config.steps, &mut |s: &SimState| {
        if failed.is_some() {
            return;
        }
        counts.clear();
        for &n in s.occupancies() {
            let n = n as usize;
            if n >= counts.len() {
                counts.resize(n + 1, 0);
            }
            counts[n] += 1;
        }
        let row: Vec<String> = counts.iter().map(u64::to_string).collect();
        failed = writeln!(out, "{}\t{}", s.step_count(), row.join(",")).err();
    });
    if let Some(e) = failed {
        return Err(io_err(e));
    }
    out.flush().map_err(io_err)?;
    Ok(sim.summary())
}
