use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

use entropy_modes::powerlaw::{
    field_transform, fit_slope, local_slope, loglog_curve, Axis, LogLogCurve, Spacing,
};
use entropy_modes::PhiRatio;

use crate::report::{is_stdio, parse_pair, warn, write_output, CmdResult, Failure, Report};

/// RMS residual in `ln n` above which the window is no longer a power law.
const TRUNCATION_RESIDUAL: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpacingArg {
    Log,
    Linear,
}

#[derive(Args, Debug, Serialize)]
pub struct PowerlawArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub phi_lo: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub phi_hi: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    pub spacing: SpacingArg,
    /// Plot against the field amplitude, ln E = ½ ln Φ.
    #[arg(long)]
    pub field: bool,
    /// Fit window in Φ units.
    #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
    pub fit_window: Option<String>,
    /// Write the curve as TSV; `-` prints it on stdout instead of the report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct Fit {
    slope: f64,
    intercept: f64,
    window: (f64, f64),
    residual: f64,
    samples_used: usize,
    /// `d ln n / d ln x` at the geometric centre of the window.
    analytic_slope: f64,
    truncated: bool,
}

#[derive(Debug, Serialize)]
struct PowerlawResults {
    axis: Axis,
    points: usize,
    ln_x_range: (f64, f64),
    ln_n_range: (f64, f64),
    fit: Option<Fit>,
    warnings: Vec<String>,
}

pub fn curve_tsv(curve: &LogLogCurve) -> String {
    let header = match curve.axis {
        Axis::Energy => "ln_phi",
        Axis::Field => "ln_field",
    };
    let mut out = format!("{header}\tln_n\n");
    for s in &curve.samples {
        writeln!(out, "{:e}\t{:e}", s.ln_x, s.ln_n).expect("writing to a String");
    }
    out
}

pub fn run(args: PowerlawArgs) -> CmdResult {
    let spacing = match args.spacing {
        SpacingArg::Log => Spacing::Log,
        SpacingArg::Linear => Spacing::Linear,
    };
    let mut curve = loglog_curve(
        PhiRatio::new(args.phi_lo)?,
        PhiRatio::new(args.phi_hi)?,
        args.points,
        spacing,
    )?;
    if args.field {
        curve = field_transform(&curve);
    }

    let mut warnings = Vec::new();
    let fit = match &args.fit_window {
        Some(w) => {
            let window = parse_pair(w, "--fit-window")?;
            let est = fit_slope(&curve, window).map_err(|e| Failure::usage(e.to_string()))?;
            let centre = PhiRatio::new((window.0 * window.1).sqrt())?;
            let stretch = if args.field { 2.0 } else { 1.0 };
            let truncated = est.residual > TRUNCATION_RESIDUAL;
            if truncated {
                warnings.push(format!(
                    "RMS residual {:.3e} exceeds {TRUNCATION_RESIDUAL}: ln n is not linear over this window, the power law is truncated",
                    est.residual
                ));
            }
            Some(Fit {
                slope: est.slope,
                intercept: est.intercept,
                window: est.window,
                residual: est.residual,
                samples_used: est.samples_used,
                analytic_slope: stretch * local_slope(centre),
                truncated,
            })
        }
        None => None,
    };
    for w in &warnings {
        warn(w);
    }

    let tsv = curve_tsv(&curve);
    if let Some(path) = &args.out {
        write_output(path, &tsv)?;
        if is_stdio(path) {
            if let Some(f) = &fit {
                eprintln!("slope {} residual {:e}", f.slope, f.residual);
            }
            return Ok(());
        }
    }

    let first = curve.samples.first().expect("at least two samples");
    let last = curve.samples.last().expect("at least two samples");
    let results = PowerlawResults {
        axis: curve.axis,
        points: curve.samples.len(),
        ln_x_range: (first.ln_x, last.ln_x),
        ln_n_range: (first.ln_n, last.ln_n),
        fit,
        warnings,
    };
    Report::new("powerlaw", &args, None, results).print()
}
