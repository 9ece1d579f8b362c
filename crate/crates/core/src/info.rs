//! Shannon information, the Boltzmann H-function and the Clausius inequality
//! for a binary file whose "1" bits are energetic modes and whose "0" bits are
//! vacancies.
//!
//! Information is in nats; `0 · ln 0` is taken as zero everywhere.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::modes::PhiRatio;

/// Length, number of ones and their fraction for a binary sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitFileStats {
    length: u64,
    ones: u64,
}

impl BitFileStats {
    pub fn new(length: u64, ones: u64) -> Result<Self> {
        if length == 0 {
            return domain("a bit file needs at least one bit");
        }
        if ones > length {
            return domain(format!(
                "number of ones ({ones}) exceeds the file length ({length})"
            ));
        }
        Ok(Self { length, ones })
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let (length, ones) = bits
            .into_iter()
            .fold((0u64, 0u64), |(len, ones), b| (len + 1, ones + b as u64));
        if length == 0 {
            return domain("empty bit stream");
        }
        Self::new(length, ones)
    }

    /// ASCII `'0'`/`'1'` text; whitespace is ignored.
    pub fn from_ascii(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for (pos, ch) in text.char_indices() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::Parse(format!(
                        "non-binary character {c:?} at byte offset {pos}"
                    )))
                }
            }
        }
        Self::from_bits(bits)
    }

    /// Raw bytes, every byte unpacked into eight bits.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        Self::from_bits(unpack_msb_first(bytes))
    }

    /// Number of modes `Λ`.
    pub fn length(&self) -> u64 {
        self.length
    }

    /// Number of energetic bits `L`.
    pub fn ones(&self) -> u64 {
        self.ones
    }

    pub fn zeros(&self) -> u64 {
        self.length - self.ones
    }

    /// `p = L / Λ`.
    pub fn p(&self) -> f64 {
        self.ones as f64 / self.length as f64
    }

    fn q(&self) -> f64 {
        self.zeros() as f64 / self.length as f64
    }
}

/// Bits of each byte, most significant first.
pub fn unpack_msb_first(bytes: &[u8]) -> impl Iterator<Item = bool> + '_ {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
}

/// Information in nats.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InfoNats(f64);

impl InfoNats {
    pub fn new(nats: f64) -> Result<Self> {
        if !(nats.is_finite() && nats >= 0.0) {
            return domain(format!(
                "information must be finite and non-negative, got {nats}"
            ));
        }
        Ok(Self(nats))
    }

    pub fn nats(self) -> f64 {
        self.0
    }

    pub fn bits(self) -> f64 {
        self.0 / std::f64::consts::LN_2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InfoMethod {
    /// Stirling approximation of the log binomial coefficient.
    #[default]
    Stirling,
    /// `ln C(Λ, L)` through the log-gamma function.
    Exact,
}

impl std::str::FromStr for InfoMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stirling" => Ok(InfoMethod::Stirling),
            "exact" => Ok(InfoMethod::Exact),
            other => Err(Error::Parse(format!("unknown method '{other}'"))),
        }
    }
}

/// `x ln x` with `0 ln 0 = 0`.
fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `p ln p + (1-p) ln(1-p)`, the per-mode mixing term (non-positive).
fn mixing(p: f64, q: f64) -> f64 {
    xlnx(p) + xlnx(q)
}

/// Log of the number of distinct messages with `L` ones among `Λ` bits.
///
/// The Stirling form `Λ ln Λ - L ln L - (Λ-L) ln(Λ-L)` is evaluated as
/// `-Λ (p ln p + (1-p) ln(1-p))`; it overshoots the exact value by roughly
/// `½ ln(2π Λ p (1-p))`.
pub fn shannon_information(stats: &BitFileStats, method: InfoMethod) -> InfoNats {
    let nats = match method {
        InfoMethod::Stirling => -(stats.length as f64) * mixing(stats.p(), stats.q()),
        InfoMethod::Exact => {
            let ln_fact = |k: u64| libm::lgamma(k as f64 + 1.0);
            ln_fact(stats.length) - (ln_fact(stats.ones) + ln_fact(stats.zeros()))
        }
    };
    // lgamma rounding can leave a tiny negative value for L = 0 or L = Λ
    InfoNats(nats.max(0.0))
}

/// Boltzmann H-function `Λ (p ln p + (1-p) ln(1-p))` in units of `k_B`.
/// It is non-positive; `-H` is the information content.
pub fn h_function(stats: &BitFileStats) -> f64 {
    stats.length as f64 * mixing(stats.p(), stats.q())
}

/// `-H/S` for a file with fraction `p` of ones, free of physical constants.
/// Lies in `[0, 1]` and reaches 1 only at `p = 1/2`.
pub fn normalized_information(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return domain(format!("fraction must lie in [0, 1], got {p}"));
    }
    Ok(-mixing(p, 1.0 - p) / std::f64::consts::LN_2)
}

/// Entropy `S`, per-bit coefficient `K = m k_B` and information `I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyBudget {
    entropy: f64,
    m: u32,
    info: InfoNats,
}

impl EntropyBudget {
    /// `entropy` is in units of `k_B`; `m >= 1`.
    pub fn new(entropy: f64, m: u32, info: InfoNats) -> Result<Self> {
        if !entropy.is_finite() {
            return domain(format!("entropy must be finite, got {entropy}"));
        }
        if m == 0 {
            return domain("entropy multiplier m must be a positive integer");
        }
        Ok(Self { entropy, m, info })
    }

    pub fn entropy(&self) -> f64 {
        self.entropy
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `K` in units of `k_B`.
    pub fn k(&self) -> f64 {
        self.m as f64
    }

    pub fn info(&self) -> InfoNats {
        self.info
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClausiusVerdict {
    Holds,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClausiusOutcome {
    pub verdict: ClausiusVerdict,
    /// `S - K I` in units of `k_B`.
    pub margin: f64,
}

impl ClausiusOutcome {
    pub fn holds(&self) -> bool {
        self.verdict == ClausiusVerdict::Holds
    }
}

/// Checks `S >= K I`. A violation is reported, not raised.
pub fn clausius_check(budget: &EntropyBudget) -> ClausiusOutcome {
    let margin = budget.entropy - budget.k() * budget.info.0;
    let verdict = if margin >= 0.0 {
        ClausiusVerdict::Holds
    } else {
        ClausiusVerdict::Violated
    };
    ClausiusOutcome { verdict, margin }
}

/// Equilibrium fraction of energetic modes in a two-level system,
/// `p = 1 / (1 + e^Φ)`, i.e. `p / (1-p) = e^{-Φ}`.
pub fn canonic_fraction(phi: PhiRatio) -> f64 {
    let e = (-phi.value()).exp();
    e / (1.0 + e)
}
