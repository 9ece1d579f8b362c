//! A single Hook-law oscillator treated as one high-occupation mode:
//! its temperature is `E / k_B`, and raising its amplitude is an
//! amplification whose resonant efficiency is the Carnot efficiency.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::info::canonic_fraction;
use crate::modes::{occupancy, PhiRatio, PhysicalConstants, Regime};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HookOscillator {
    kappa: f64,
    amplitude: f64,
}

impl HookOscillator {
    /// `kappa` in N/m, `amplitude` in meters.
    pub fn new(kappa: f64, amplitude: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return domain(format!("spring constant must be positive, got {kappa}"));
        }
        if !(amplitude.is_finite() && amplitude >= 0.0) {
            return domain(format!("amplitude must be non-negative, got {amplitude}"));
        }
        Ok(Self { kappa, amplitude })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }
}

/// `½ κ A²` in joules.
pub fn hook_energy(osc: &HookOscillator) -> f64 {
    0.5 * osc.kappa * osc.amplitude * osc.amplitude
}

/// `E / k_B`.
pub fn oscillator_temperature(energy: f64, consts: &PhysicalConstants) -> Result<f64> {
    if !(energy.is_finite() && energy >= 0.0) {
        return domain(format!("energy must be non-negative, got {energy}"));
    }
    Ok(energy / consts.k_b)
}

/// `1 − T_L / T_H` for `0 < T_L <= T_H`.
pub fn carnot_efficiency(t_low: f64, t_high: f64) -> Result<f64> {
    if !(t_low.is_finite() && t_high.is_finite() && t_low > 0.0 && t_high > 0.0) {
        return domain(format!(
            "temperatures must be positive, got T_L = {t_low}, T_H = {t_high}"
        ));
    }
    if t_low > t_high {
        return domain(format!("T_L ({t_low}) must not exceed T_H ({t_high})"));
    }
    Ok(1.0 - t_low / t_high)
}

/// Work needed to raise the oscillator from `E_L` to `E_H` at resonance,
/// `E_H − E_L`. Off resonance part of the work becomes heat, so any real
/// drive needs at least this much.
pub fn min_work(e_low: f64, e_high: f64) -> Result<f64> {
    if !(e_low.is_finite() && e_high.is_finite() && e_low >= 0.0) {
        return domain(format!(
            "energies must be finite and non-negative, got E_L = {e_low}, E_H = {e_high}"
        ));
    }
    if e_high < e_low {
        return domain(format!("E_H ({e_high}) must not be below E_L ({e_low})"));
    }
    Ok(e_high - e_low)
}

/// Work spent when a fraction `waste` of it is lost to heat.
pub fn work_with_waste(min_work: f64, waste: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&waste) {
        return domain(format!("waste fraction must lie in [0, 1), got {waste}"));
    }
    Ok(min_work / (1.0 - waste))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeColumn {
    HighOccupation,
    Canonic,
}

/// One column of the two-regime comparison evaluated at a given `Φ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeSummary {
    pub regime: RegimeColumn,
    /// Whether the occupancy at this `Φ` lies inside the regime.
    pub applicable: bool,
    pub temperature_formula: &'static str,
    /// Temperature from the column's formula, in kelvin.
    pub temperature: f64,
    pub equilibrium_formula: &'static str,
    /// Equilibrium fraction of energetic modes.
    pub equilibrium_p: f64,
    pub entropy_formula: &'static str,
    /// Average mode entropy in units of `k_B`.
    pub mode_entropy: f64,
    pub distribution: &'static str,
    pub carnot_role: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1 {
    pub phi: f64,
    pub occupancy: f64,
    /// `hν / (k_B Φ)`, the temperature the columns approximate.
    pub exact_temperature: f64,
    pub high_occupation: RegimeSummary,
    pub canonic: RegimeSummary,
}

/// Evaluates both regime columns at `Φ` and frequency `freq_hz`.
pub fn table1_summary(phi: PhiRatio, freq_hz: f64, consts: &PhysicalConstants) -> Result<Table1> {
    if !(freq_hz.is_finite() && freq_hz > 0.0) {
        return domain(format!("frequency must be positive, got {freq_hz}"));
    }
    let n = occupancy(phi);
    let quantum_energy = consts.h * freq_hz;
    let p = phi.value();

    let high_occupation = RegimeSummary {
        regime: RegimeColumn::HighOccupation,
        applicable: Regime::Classical.applies_to(n),
        temperature_formula: "T = n h nu / k_B",
        temperature: n * quantum_energy / consts.k_b,
        equilibrium_formula: "p = 1/2",
        equilibrium_p: 0.5,
        entropy_formula: "S = k_B ln 2",
        mode_entropy: std::f64::consts::LN_2,
        distribution: "power-law",
        carnot_role: "amplifier",
    };
    let canonic = RegimeSummary {
        regime: RegimeColumn::Canonic,
        applicable: Regime::Quantum.applies_to(n),
        temperature_formula: "T = -h nu / (k_B ln n)",
        temperature: -quantum_energy / (consts.k_b * n.ln()),
        equilibrium_formula: "p/(1-p) = exp(-h nu / k_B T)",
        equilibrium_p: canonic_fraction(phi),
        entropy_formula: "S = (h nu / T) exp(-h nu / k_B T)",
        mode_entropy: p * (-p).exp(),
        distribution: "exponential",
        carnot_role: "heat engine",
    };
    Ok(Table1 {
        phi: p,
        occupancy: n,
        exact_temperature: quantum_energy / (consts.k_b * p),
        high_occupation,
        canonic,
    })
}
