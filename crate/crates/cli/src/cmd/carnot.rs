use clap::{ArgGroup, Args};
use serde::Serialize;

use entropy_modes::carnot::{
    carnot_efficiency, hook_energy, min_work, oscillator_temperature, table1_summary,
    work_with_waste, HookOscillator, Table1,
};
use entropy_modes::{PhiRatio, PhysicalConstants};

use crate::report::{CmdResult, Report};

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("mode").required(true).args(["kappa", "t_low", "table1"])))]
pub struct CarnotArgs {
    /// Spring constant in N/m.
    #[arg(long, allow_negative_numbers = true, requires_all = ["amp_low", "amp_high"])]
    pub kappa: Option<f64>,
    /// Starting amplitude in meters.
    #[arg(long, allow_negative_numbers = true, requires = "kappa")]
    pub amp_low: Option<f64>,
    /// Final amplitude in meters.
    #[arg(long, allow_negative_numbers = true, requires = "kappa")]
    pub amp_high: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "t_high")]
    pub t_low: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "t_low")]
    pub t_high: Option<f64>,
    /// Evaluate both regime columns at --phi and --freq-hz.
    #[arg(long, requires_all = ["phi", "freq_hz"])]
    pub table1: bool,
    #[arg(long, allow_negative_numbers = true, requires = "table1")]
    pub phi: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "table1")]
    pub freq_hz: Option<f64>,
    /// What-if: fraction of the drive work lost to heat off resonance.
    #[arg(long, requires = "kappa")]
    pub waste_fraction: Option<f64>,
}

#[derive(Debug, Serialize)]
struct WasteExtension {
    waste_fraction: f64,
    work_j: f64,
}

#[derive(Debug, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
enum CarnotResults {
    Oscillator {
        energy_low_j: f64,
        energy_high_j: f64,
        t_low_k: f64,
        t_high_k: f64,
        min_work_j: f64,
        efficiency: f64,
        extension: Option<WasteExtension>,
    },
    Temperatures {
        t_low_k: f64,
        t_high_k: f64,
        efficiency: f64,
    },
    Table1(Table1),
}

pub fn run(args: CarnotArgs) -> CmdResult {
    let consts = PhysicalConstants::CODATA;
    let results = if let Some(kappa) = args.kappa {
        let low = HookOscillator::new(kappa, args.amp_low.expect("clap requires --amp-low"))?;
        let high = HookOscillator::new(kappa, args.amp_high.expect("clap requires --amp-high"))?;
        let (e_low, e_high) = (hook_energy(&low), hook_energy(&high));
        let w = min_work(e_low, e_high)?;
        let t_low = oscillator_temperature(e_low, &consts)?;
        let t_high = oscillator_temperature(e_high, &consts)?;
        let extension = match args.waste_fraction {
            Some(f) => Some(WasteExtension {
                waste_fraction: f,
                work_j: work_with_waste(w, f)?,
            }),
            None => None,
        };
        CarnotResults::Oscillator {
            energy_low_j: e_low,
            energy_high_j: e_high,
            t_low_k: t_low,
            t_high_k: t_high,
            min_work_j: w,
            efficiency: carnot_efficiency(t_low, t_high)?,
            extension,
        }
    } else if let Some(t_low) = args.t_low {
        let t_high = args.t_high.expect("clap requires --t-high");
        CarnotResults::Temperatures {
            t_low_k: t_low,
            t_high_k: t_high,
            efficiency: carnot_efficiency(t_low, t_high)?,
        }
    } else {
        let phi = PhiRatio::new(args.phi.expect("clap requires --phi"))?;
        let freq = args.freq_hz.expect("clap requires --freq-hz");
        CarnotResults::Table1(table1_summary(phi, freq, &consts)?)
    };
    Report::new("carnot", &args, None, results).print()
}
