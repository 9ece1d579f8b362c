//! First-significant-digit statistics.
//!
//! The equilibrium distribution of digit-modes follows from `ρ(n) Φ =
//! ln(1 + 1/n)`: after normalizing over the digits the common `Φ` cancels and
//! what remains is `log_b(1 + 1/d)`, Benford's law. The empirical side
//! extracts leading digits from data and scores them against it.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::modes::PhiRatio;

pub mod corpus;

/// Relative band within which a scaled mantissa is snapped to the nearest
/// integer during log-based digit extraction.
const GUARD_BAND: f64 = 1e-12;

fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        return domain(format!("base must be at least 2, got {base}"));
    }
    Ok(())
}

/// Unnormalized density `ln(1 + 1/d)` of digit `d` in base `base`.
pub fn digit_density(digit: u32, base: u32) -> Result<f64> {
    check_base(base)?;
    if digit == 0 || digit >= base {
        return domain(format!("digit must lie in [1, {}], got {digit}", base - 1));
    }
    Ok((digit as f64).recip().ln_1p())
}

/// Probabilities of the leading digits `1..b` in base `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DigitDistribution {
    base: u32,
    probs: Vec<f64>,
}

impl DigitDistribution {
    /// `probs[d - 1]` is the probability of digit `d`.
    pub fn new(base: u32, probs: Vec<f64>) -> Result<Self> {
        check_base(base)?;
        if probs.len() != base as usize - 1 {
            return domain(format!(
                "base {base} needs {} probabilities, got {}",
                base - 1,
                probs.len()
            ));
        }
        if let Some(bad) = probs
            .iter()
            .find(|p| !(p.is_finite() && **p > 0.0 && **p <= 1.0))
        {
            return domain(format!("digit probabilities must lie in (0, 1], got {bad}"));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return domain(format!("digit probabilities sum to {total}, not 1"));
        }
        Ok(Self { base, probs })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, digit: u32) -> Option<f64> {
        digit
            .checked_sub(1)
            .and_then(|i| self.probs.get(i as usize))
            .copied()
    }
}

/// Benford's law `log_b(1 + 1/d)` for `d = 1..b`.
pub fn benford_pmf(base: u32) -> Result<DigitDistribution> {
    check_base(base)?;
    let ln_b = (base as f64).ln();
    let probs = (1..base)
        .map(|d| (d as f64).recip().ln_1p() / ln_b)
        .collect();
    DigitDistribution::new(base, probs)
}

/// `Φ(n_d) = scale · ln(1 + 1/d)` for the digit-modes `d = 1..b`: the ratio
/// each digit-mode needs in order to share a common temperature.
pub fn digit_mode_phis(base: u32, scale: f64) -> Result<Vec<PhiRatio>> {
    check_base(base)?;
    (1..base)
        .map(|d| PhiRatio::new(scale * (d as f64).recip().ln_1p()))
        .collect()
}

/// Normalizes the digit-mode densities `ρ(n_d) Φ` into a distribution.
///
/// `phis[d - 1]` belongs to digit `d`, so the base is `phis.len() + 1`. Any
/// common positive factor on the input cancels.
pub fn equilibrium_digit_distribution(phis: &[PhiRatio]) -> Result<DigitDistribution> {
    if phis.is_empty() {
        return domain("at least one digit-mode is required");
    }
    let total: f64 = phis.iter().map(|p| p.value()).sum();
    let probs = phis.iter().map(|p| p.value() / total).collect();
    DigitDistribution::new(phis.len() as u32 + 1, probs)
}

/// Leading significant digit of `|x|` in `base`, or `None` for zero.
///
/// Base 10 goes through the shortest round-trip decimal representation so
/// that values such as `0.3` or `1e23` are not misclassified at digit
/// boundaries. Other bases use logarithms with a small guard band.
pub fn first_digit(x: f64, base: u32) -> Result<Option<u32>> {
    check_base(base)?;
    if !x.is_finite() {
        return domain(format!("cannot take the leading digit of {x}"));
    }
    if x == 0.0 {
        return Ok(None);
    }
    if base == 10 {
        let s = format!("{:e}", x.abs());
        return Ok(s.chars().next().and_then(|c| c.to_digit(10)));
    }
    let b = base as f64;
    let ax = x.abs();
    let k = (ax.ln() / b.ln()).floor() as i32;
    let mut scaled = if k >= 0 {
        ax / b.powi(k)
    } else {
        ax * b.powi(-k)
    };
    let nearest = scaled.round();
    if (scaled - nearest).abs() <= GUARD_BAND * nearest {
        scaled = nearest;
    }
    if scaled >= b {
        scaled /= b;
    } else if scaled < 1.0 {
        scaled *= b;
    }
    Ok(Some((scaled.floor() as u32).clamp(1, base - 1)))
}

/// Leading significant digit of a decimal literal such as `-0.00345`,
/// `9120`, `6.02e23` or a arbitrarily long integer. `None` for zero.
///
/// Works on the text directly, so magnitudes beyond `f64` are fine.
pub fn first_digit_decimal(text: &str) -> Result<Option<u32>> {
    let parse_err = || Error::Parse(format!("not a decimal number: {text:?}"));
    let s = text.trim();
    let s = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    if let Some(exp) = exponent {
        let digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err());
        }
    }
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(parse_err());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(parse_err());
    }
    Ok(int_part
        .bytes()
        .chain(frac_part.bytes())
        .find(|&b| b != b'0')
        .map(|b| (b - b'0') as u32))
}

/// Counts of leading digits `1..b` plus the number of inputs that had none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitHistogram {
    base: u32,
    counts: Vec<u64>,
    skipped: u64,
}

impl DigitHistogram {
    pub fn new(base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(Self {
            base,
            counts: vec![0; base as usize - 1],
            skipped: 0,
        })
    }

    pub fn from_counts(base: u32, counts: Vec<u64>) -> Result<Self> {
        let mut h = Self::new(base)?;
        if counts.len() != h.counts.len() {
            return domain(format!(
                "base {base} needs {} counts, got {}",
                h.counts.len(),
                counts.len()
            ));
        }
        h.counts = counts;
        Ok(h)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, digit: u32) -> u64 {
        digit
            .checked_sub(1)
            .and_then(|i| self.counts.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn skipped(&self) -> u64 {
        self.skipped
    }

    pub fn record_digit(&mut self, digit: u32) -> Result<()> {
        if digit == 0 || digit >= self.base {
            return domain(format!("digit {digit} is not valid in base {}", self.base));
        }
        self.counts[digit as usize - 1] += 1;
        Ok(())
    }

    pub fn add_count(&mut self, digit: u32, n: u64) -> Result<()> {
        if digit == 0 || digit >= self.base {
            return domain(format!("digit {digit} is not valid in base {}", self.base));
        }
        self.counts[digit as usize - 1] += n;
        Ok(())
    }

    pub fn record_skip(&mut self) {
        self.skipped += 1;
    }

    /// Records the leading digit of `x`; zeros and non-finite values are
    /// counted as skipped.
    pub fn record_value(&mut self, x: f64) {
        match first_digit(x, self.base) {
            Ok(Some(d)) => self.counts[d as usize - 1] += 1,
            _ => self.skipped += 1,
        }
    }

    /// Records a textual value. Base 10 reads the digits straight from the
    /// text; other bases parse it as `f64`. Unparsable text, zeros and
    /// non-finite values are counted as skipped.
    pub fn record_text(&mut self, text: &str) {
        if self.base == 10 {
            match first_digit_decimal(text) {
                Ok(Some(d)) => self.counts[d as usize - 1] += 1,
                _ => self.skipped += 1,
            }
        } else {
            match text.trim().parse::<f64>() {
                Ok(x) => self.record_value(x),
                Err(_) => self.skipped += 1,
            }
        }
    }

    /// Adds the counts of another histogram of the same base.
    pub fn merge(&mut self, other: &DigitHistogram) -> Result<()> {
        if other.base != self.base {
            return domain(format!(
                "cannot merge base {} into base {}",
                other.base, self.base
            ));
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.skipped += other.skipped;
        Ok(())
    }

    /// Observed frequencies `count_d / total`.
    pub fn frequencies(&self) -> Vec<f64> {
        let total = self.total() as f64;
        self.counts.iter().map(|&c| c as f64 / total).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Close,
    Acceptable,
    Nonconforming,
}

/// Upper MAD bounds for the `Close` and `Acceptable` verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MadThresholds {
    pub close: f64,
    pub acceptable: f64,
}

impl MadThresholds {
    pub fn new(close: f64, acceptable: f64) -> Result<Self> {
        if !(close.is_finite() && acceptable.is_finite() && 0.0 < close && close <= acceptable) {
            return domain(format!(
                "thresholds must satisfy 0 < close <= acceptable, got {close}, {acceptable}"
            ));
        }
        Ok(Self { close, acceptable })
    }

    pub fn verdict(&self, mad: f64) -> Verdict {
        if mad < self.close {
            Verdict::Close
        } else if mad < self.acceptable {
            Verdict::Acceptable
        } else {
            Verdict::Nonconforming
        }
    }
}

impl Default for MadThresholds {
    fn default() -> Self {
        Self {
            close: 0.006,
            acceptable: 0.012,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConformanceReport {
    /// Pearson χ² against the reference.
    pub chi2: f64,
    pub dof: u32,
    /// Mean absolute deviation of observed from expected frequencies.
    pub mad: f64,
    pub verdict: Verdict,
}

/// Pearson χ² and MAD of a histogram against a reference distribution.
pub fn conformance(
    hist: &DigitHistogram,
    reference: &DigitDistribution,
    thresholds: &MadThresholds,
) -> Result<ConformanceReport> {
    if hist.base != reference.base {
        return domain(format!(
            "histogram base {} does not match reference base {}",
            hist.base, reference.base
        ));
    }
    let total = hist.total();
    if total == 0 {
        return domain("no leading digits to test (every value was skipped)");
    }
    let n = total as f64;
    let mut chi2 = 0.0;
    let mut abs_dev = 0.0;
    for (&obs, &p) in hist.counts.iter().zip(&reference.probs) {
        let expected = n * p;
        let diff = obs as f64 - expected;
        chi2 += diff * diff / expected;
        abs_dev += (obs as f64 / n - p).abs();
    }
    let mad = abs_dev / reference.probs.len() as f64;
    Ok(ConformanceReport {
        chi2,
        dof: hist.base - 2,
        mad,
        verdict: thresholds.verdict(mad),
    })
}
