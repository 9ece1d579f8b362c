use clap::{ArgGroup, Args, ValueEnum};
use serde::Serialize;

use entropy_modes::modes::{mode_entropy, mode_temperature, occupancy, phi_of_occupancy};
use entropy_modes::{PhiRatio, PhysicalConstants, Regime};

use crate::report::{warn, CmdResult, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegimeArg {
    Auto,
    Quantum,
    Classical,
    Exact,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("source").required(true).args(["phi", "n", "temp_k"])))]
pub struct ModesArgs {
    /// hν / k_B T.
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Occupation number.
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<f64>,
    /// Mode frequency in Hz; with --phi or --n it adds the mode temperature.
    #[arg(long, allow_negative_numbers = true)]
    pub freq_hz: Option<f64>,
    /// Temperature in kelvin.
    #[arg(long, allow_negative_numbers = true, requires = "freq_hz")]
    pub temp_k: Option<f64>,
    #[arg(long, value_enum, default_value_t = RegimeArg::Auto)]
    pub regime: RegimeArg,
}

#[derive(Debug, Serialize)]
struct ModesResults {
    phi: f64,
    occupancy: f64,
    regime: Regime,
    /// Whether the occupancy lies where the chosen formula is accurate.
    regime_applies: bool,
    mode_entropy_kb: f64,
    mode_entropy_j_per_k: f64,
    frequency_hz: Option<f64>,
    temperature_k: Option<f64>,
    energy_j: Option<f64>,
    warnings: Vec<String>,
}

pub fn run(args: ModesArgs) -> CmdResult {
    let consts = PhysicalConstants::CODATA;
    let (phi, n) = match (args.phi, args.n, args.temp_k) {
        (Some(p), _, _) => {
            let phi = PhiRatio::new(p)?;
            (phi, occupancy(phi))
        }
        (None, Some(n), _) => (phi_of_occupancy(n)?, n),
        (None, None, Some(t)) => {
            let freq = args.freq_hz.expect("clap enforces --freq-hz with --temp-k");
            let phi = consts.phi(freq, t)?;
            (phi, occupancy(phi))
        }
        (None, None, None) => unreachable!("clap requires one source"),
    };

    let regime = match args.regime {
        RegimeArg::Auto => Regime::auto(n),
        RegimeArg::Quantum => Regime::Quantum,
        RegimeArg::Classical => Regime::Classical,
        RegimeArg::Exact => Regime::Exact,
    };
    let regime_applies = regime.applies_to(n);
    let mut warnings = Vec::new();
    if !regime_applies {
        let exact = mode_entropy(n, Regime::Exact)?;
        warnings.push(format!(
            "{} formula used at n = {n}, outside its range; the exact entropy is {exact} k_B",
            regime_name(regime)
        ));
    }
    let entropy = mode_entropy(n, regime)?;

    let (temperature_k, energy_j) = match args.freq_hz {
        Some(f) => (
            Some(mode_temperature(n, f, &consts)?),
            Some(n * consts.h * f),
        ),
        None => (None, None),
    };
    for w in &warnings {
        warn(w);
    }

    let results = ModesResults {
        phi: phi.value(),
        occupancy: n,
        regime,
        regime_applies,
        mode_entropy_kb: entropy,
        mode_entropy_j_per_k: entropy * consts.k_b,
        frequency_hz: args.freq_hz,
        temperature_k,
        energy_j,
        warnings,
    };
    Report::new("modes", &args, None, results).print()
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::Quantum => "quantum",
        Regime::Classical => "classical",
        Regime::Exact => "exact",
    }
}
