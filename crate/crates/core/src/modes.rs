//! Closed-form Bose-Einstein statistics of a single mode and of a sequence of
//! modes, in the general case and in the quantum and high-occupation limits.
//!
//! The chemical potential is fixed at zero. All entropies are returned in
//! units of `k_B`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Occupancy at or above which the high-occupation (classical) limit is used
/// by [`Regime::auto`].
pub const CLASSICAL_THRESHOLD: f64 = 100.0;
/// Occupancy at or below which the quantum limit is used by [`Regime::auto`].
pub const QUANTUM_THRESHOLD: f64 = 0.01;

/// Physical constants in SI units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Planck constant, J·s.
    pub h: f64,
    /// Speed of light, m/s.
    pub c: f64,
}

impl PhysicalConstants {
    pub const CODATA: PhysicalConstants = PhysicalConstants {
        k_b: 1.380_649e-23,
        h: 6.626_070_15e-34,
        c: 299_792_458.0,
    };

    pub fn new(k_b: f64, h: f64, c: f64) -> Result<Self> {
        for (name, v) in [("k_B", k_b), ("h", h), ("c", c)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!("{name} must be finite and positive, got {v}"));
            }
        }
        Ok(Self { k_b, h, c })
    }

    /// Frequency of light with the given vacuum wavelength.
    pub fn frequency_of_wavelength(&self, wavelength_m: f64) -> Result<f64> {
        if !(wavelength_m.is_finite() && wavelength_m > 0.0) {
            return domain(format!("wavelength must be positive, got {wavelength_m}"));
        }
        Ok(self.c / wavelength_m)
    }

    /// The ratio `hν / k_B T`.
    pub fn phi(&self, freq_hz: f64, temp_k: f64) -> Result<PhiRatio> {
        check_frequency(freq_hz)?;
        if !(temp_k.is_finite() && temp_k > 0.0) {
            return domain(format!("temperature must be positive, got {temp_k}"));
        }
        PhiRatio::new(self.h * freq_hz / (self.k_b * temp_k))
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA
    }
}

/// Quantum energy relative to the thermal energy, `Φ = hν / k_B T`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PhiRatio(f64);

impl PhiRatio {
    pub fn new(phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return domain(format!("phi must be finite, got {phi}"));
        }
        if phi <= 0.0 {
            return domain(format!("phi must be positive, got {phi}"));
        }
        Ok(Self(phi))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Same ratio multiplied by a positive factor.
    pub fn scaled(self, factor: f64) -> Result<Self> {
        Self::new(self.0 * factor)
    }
}

/// A single mode: a frequency and its mean occupation number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    frequency: f64,
    occupancy: f64,
}

impl Mode {
    /// `occupancy == 0` is allowed and represents a vacancy.
    pub fn new(frequency: f64, occupancy: f64) -> Result<Self> {
        check_frequency(frequency)?;
        check_occupancy(occupancy)?;
        Ok(Self {
            frequency,
            occupancy,
        })
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    pub fn occupancy(&self) -> f64 {
        self.occupancy
    }

    /// Mean energy of the mode, `q = n hν`, in joules.
    pub fn energy(&self, consts: &PhysicalConstants) -> f64 {
        self.occupancy * consts.h * self.frequency
    }
}

/// An ordered, non-empty sequence of modes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeEnsemble {
    modes: Vec<Mode>,
}

impl ModeEnsemble {
    pub fn new(modes: Vec<Mode>) -> Result<Self> {
        if modes.is_empty() {
            return domain("a mode ensemble needs at least one mode");
        }
        Ok(Self { modes })
    }

    /// `len` modes of equal frequency and occupancy.
    pub fn uniform(len: usize, frequency: f64, occupancy: f64) -> Result<Self> {
        let mode = Mode::new(frequency, occupancy)?;
        Self::new(vec![mode; len])
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Concatenation `self ⧺ other`.
    pub fn concat(&self, other: &ModeEnsemble) -> ModeEnsemble {
        let mut modes = self.modes.clone();
        modes.extend_from_slice(&other.modes);
        ModeEnsemble { modes }
    }
}

/// Which entropy formula to apply to a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `n << 1`: `S = -n ln n`.
    Quantum,
    /// `n >> 1`: one `k_B` per mode.
    Classical,
    /// Full Bose-Einstein entropy `(1+n) ln(1+n) - n ln n`.
    Exact,
}

impl Regime {
    /// Picks the limit whose error stays below about 1% at occupancy `n`.
    pub fn auto(n: f64) -> Regime {
        if n >= CLASSICAL_THRESHOLD {
            Regime::Classical
        } else if n <= QUANTUM_THRESHOLD {
            Regime::Quantum
        } else {
            Regime::Exact
        }
    }

    /// Whether the limit formula is accurate at `n`. Always true for `Exact`.
    pub fn applies_to(self, n: f64) -> bool {
        match self {
            Regime::Quantum => n <= QUANTUM_THRESHOLD,
            Regime::Classical => n >= CLASSICAL_THRESHOLD,
            Regime::Exact => true,
        }
    }
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quantum" => Ok(Regime::Quantum),
            "classical" => Ok(Regime::Classical),
            "exact" => Ok(Regime::Exact),
            other => Err(Error::Parse(format!("unknown regime '{other}'"))),
        }
    }
}

fn check_frequency(freq: f64) -> Result<()> {
    if !(freq.is_finite() && freq > 0.0) {
        return domain(format!("frequency must be finite and positive, got {freq}"));
    }
    Ok(())
}

fn check_occupancy(n: f64) -> Result<()> {
    if !(n.is_finite() && n >= 0.0) {
        return domain(format!(
            "occupancy must be finite and non-negative, got {n}"
        ));
    }
    Ok(())
}

fn check_positive_occupancy(n: f64) -> Result<()> {
    check_occupancy(n)?;
    if n == 0.0 {
        return domain("occupancy must be positive (n = 0 corresponds to an infinite phi)");
    }
    Ok(())
}

/// Bose-Einstein occupancy `1 / (e^Φ - 1)`.
pub fn occupancy(phi: PhiRatio) -> f64 {
    phi.0.exp_m1().recip()
}

/// Inverse of [`occupancy`]: `Φ = ln(1 + 1/n)`.
pub fn phi_of_occupancy(n: f64) -> Result<PhiRatio> {
    check_positive_occupancy(n)?;
    PhiRatio::new(n.recip().ln_1p())
}

/// Quantum-limit occupancy `e^{-Φ}`.
pub fn canonic_occupancy(phi: PhiRatio) -> f64 {
    (-phi.0).exp()
}

/// Temperature of a mode holding `n` quanta of frequency `freq_hz`,
/// `hν / (k_B ln(1 + 1/n))`.
pub fn mode_temperature(n: f64, freq_hz: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_frequency(freq_hz)?;
    let phi = phi_of_occupancy(n)?;
    Ok(consts.h * freq_hz / (consts.k_b * phi.0))
}

/// Entropy of one mode in units of `k_B`. A vacancy (`n == 0`) carries none.
pub fn mode_entropy(n: f64, regime: Regime) -> Result<f64> {
    check_occupancy(n)?;
    if n == 0.0 {
        return Ok(0.0);
    }
    match regime {
        Regime::Quantum => {
            if n >= 1.0 {
                return Err(Error::Regime(format!(
                    "quantum-limit entropy needs n < 1, got {n}"
                )));
            }
            Ok(-n * n.ln())
        }
        Regime::Classical => Ok(1.0),
        // (1+n)ln(1+n) - n ln n rearranged to avoid cancellation at large n
        Regime::Exact => Ok(n.ln_1p() + n * n.recip().ln_1p()),
    }
}

/// Total entropy of a mode sequence, the sum of per-mode entropies.
///
/// In the classical regime this is `Λ` for `Λ` occupied modes, which is only a
/// lower bound on the entropy of a sequence that is not in equilibrium.
pub fn ensemble_entropy(ensemble: &ModeEnsemble, regime: Regime) -> Result<f64> {
    ensemble
        .modes
        .iter()
        .map(|m| mode_entropy(m.occupancy, regime))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(v: f64) -> PhiRatio {
        PhiRatio::new(v).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn occupancy_examples() {
        assert!(rel(occupancy(phi(std::f64::consts::LN_2)), 1.0) < 1e-15);
        let n10 = occupancy(phi(10.0));
        assert!(rel(n10, 4.5402e-5) < 1e-4);
        assert!(rel(n10, 1.0 / (10f64.exp() - 1.0)) < 1e-12);
        assert!(rel(n10, (-10f64).exp()) < 5e-5);
        assert!(rel(occupancy(phi(0.01)), 99.500_833_331_944_43) < 1e-6);
    }

    #[test]
    fn phi_rejects_bad_values() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(PhiRatio::new(bad), Err(Error::Domain(_))));
        }
        assert_eq!(
            PhiRatio::new(-1.0).unwrap_err().to_string(),
            "phi must be positive, got -1"
        );
    }

    #[test]
    fn phi_of_occupancy_examples() {
        assert!(
            rel(
                phi_of_occupancy(1.0).unwrap().value(),
                std::f64::consts::LN_2
            ) < 1e-15
        );
        assert!(rel(phi_of_occupancy(9.0).unwrap().value(), (10.0f64 / 9.0).ln()) < 1e-14);
        assert!(phi_of_occupancy(0.0).is_err());
        assert!(phi_of_occupancy(-2.0).is_err());
        for n in [1e-6, 1.0, 1e6] {
            assert!(rel(occupancy(phi_of_occupancy(n).unwrap()), n) < 1e-12);
        }
    }

    #[test]
    fn canonic_occupancy_examples() {
        assert!(rel(canonic_occupancy(phi(10.0)), 4.539_992_976_248_485e-5) < 1e-12);
        assert!(rel(canonic_occupancy(phi(std::f64::consts::LN_2)), 0.5) < 1e-15);
        for p in [10.0, 12.5, 20.0, 40.0] {
            let exact = occupancy(phi(p));
            assert!((canonic_occupancy(phi(p)) - exact).abs() / exact < 1e-4);
        }
    }

    #[test]
    fn temperature_examples() {
        let c = PhysicalConstants::CODATA;
        let freq = c.frequency_of_wavelength(0.7e-6).unwrap();
        let t = mode_temperature(1e16, freq, &c).unwrap();
        assert!(t > 1e20 / 3.0 && t < 3e20, "{t}");
        assert!(rel(t, 2.055e20) < 1e-3);

        let n = 1.0 / (std::f64::consts::E - 1.0);
        let t = mode_temperature(n, 1e12, &c).unwrap();
        assert!(rel(t, c.h * 1e12 / c.k_b) < 1e-14);

        let t = mode_temperature(1e6, 3e9, &c).unwrap();
        assert!(rel(t, 1e6 * c.h * 3e9 / c.k_b) < 1e-6);

        assert!(mode_temperature(0.0, 1e9, &c).is_err());
        assert!(mode_temperature(1.0, 0.0, &c).is_err());
        assert!(mode_temperature(1.0, -5.0, &c).is_err());
    }

    #[test]
    fn temperature_limits() {
        let c = PhysicalConstants::CODATA;
        let n: f64 = 1e-6;
        let quantum = -c.h * 1e14 / (c.k_b * n.ln());
        assert!(rel(mode_temperature(n, 1e14, &c).unwrap(), quantum) < 1e-6);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(mode_entropy(1e20, Regime::Classical).unwrap(), 1.0);
        let inv_e = (-1.0f64).exp();
        assert!(rel(mode_entropy(inv_e, Regime::Quantum).unwrap(), inv_e) < 1e-15);
        assert!(matches!(
            mode_entropy(1.0, Regime::Quantum),
            Err(Error::Regime(_))
        ));
        assert!(mode_entropy(1e-300, Regime::Exact).unwrap() < 1e-290);
        let s = mode_entropy(1e6, Regime::Exact).unwrap();
        assert!(rel(s, 1.0 + 1e6f64.ln()) < 0.02);
        assert_eq!(mode_entropy(0.0, Regime::Exact).unwrap(), 0.0);
        assert!(mode_entropy(-1.0, Regime::Exact).is_err());
    }

    #[test]
    fn exact_entropy_matches_textbook_form() {
        for n in [0.01, 0.3, 1.0, 4.0, 50.0] {
            let direct = (1.0 + n) * (1.0f64 + n).ln() - n * n.ln();
            assert!(rel(mode_entropy(n, Regime::Exact).unwrap(), direct) < 1e-12);
        }
    }

    #[test]
    fn ensemble_examples() {
        let classical = ModeEnsemble::uniform(100, 1e9, 1e8).unwrap();
        assert_eq!(
            ensemble_entropy(&classical, Regime::Classical).unwrap(),
            100.0
        );

        let modes = (1..=3)
            .map(|k| Mode::new(1e15, (-(k as f64)).exp()).unwrap())
            .collect();
        let e = ModeEnsemble::new(modes).unwrap();
        let s = ensemble_entropy(&e, Regime::Quantum).unwrap();
        let e1 = (-1.0f64).exp();
        assert!(rel(s, e1 + 2.0 * e1.powi(2) + 3.0 * e1.powi(3)) < 1e-14);
        assert!(rel(s, 0.787_911) < 1e-6);

        // equal occupancies n = e^-Φ give Λ n Φ
        let lambda = 7;
        let e = ModeEnsemble::uniform(lambda, 1e15, (-2.0f64).exp()).unwrap();
        let s = ensemble_entropy(&e, Regime::Quantum).unwrap();
        assert!(rel(s, 2.0 * lambda as f64 * (-2.0f64).exp()) < 1e-14);
    }

    #[test]
    fn vacancies_contribute_nothing() {
        let modes = vec![
            Mode::new(1e9, 0.0).unwrap(),
            Mode::new(1e9, 500.0).unwrap(),
            Mode::new(1e9, 0.0).unwrap(),
        ];
        let e = ModeEnsemble::new(modes).unwrap();
        assert_eq!(ensemble_entropy(&e, Regime::Classical).unwrap(), 1.0);
        assert!(mode_temperature(0.0, 1e9, &PhysicalConstants::CODATA).is_err());
    }

    #[test]
    fn empty_ensemble_rejected() {
        assert!(ModeEnsemble::new(Vec::new()).is_err());
    }

    #[test]
    fn auto_regime_thresholds() {
        assert_eq!(Regime::auto(100.0), Regime::Classical);
        assert_eq!(Regime::auto(99.0), Regime::Exact);
        assert_eq!(Regime::auto(0.01), Regime::Quantum);
        assert_eq!(Regime::auto(1.0), Regime::Exact);
    }

    #[test]
    fn constants_validated() {
        assert!(PhysicalConstants::new(1.0, 1.0, 1.0).is_ok());
        assert!(PhysicalConstants::new(0.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, f64::NAN, 1.0).is_err());
    }
}
