//! Log-log view of the equilibrium occupancy curve.
//!
//! Plotted as `ln n` against `ln Φ`, the Bose-Einstein occupancy is a straight
//! line of slope −1 in the high-occupation regime and bends into an
//! exponential truncation (`ln n ≈ −Φ`) once `Φ >> 1`. Re-expressing the
//! abscissa in terms of the field amplitude (`Φ ∝ E²`) doubles every slope.
//!
//! Slopes are always reported as `d ln n / d ln x`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::modes::{occupancy, PhiRatio};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogLogSample {
    /// `ln Φ` on the energy axis, `ln E = ½ ln Φ` on the field axis.
    pub ln_x: f64,
    pub ln_n: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// Abscissa is `ln Φ`.
    #[default]
    Energy,
    /// Abscissa is `ln E` with `Φ ∝ E²`.
    Field,
}

impl Axis {
    /// Abscissa value for a given `ln Φ`.
    fn abscissa_of(self, ln_phi: f64) -> f64 {
        match self {
            Axis::Energy => ln_phi,
            Axis::Field => 0.5 * ln_phi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogLogCurve {
    pub axis: Axis,
    pub samples: Vec<LogLogSample>,
}

/// Samples `(ln Φ, ln n(Φ))` at `points` values of `Φ` between the bounds.
pub fn loglog_curve(
    phi_lo: PhiRatio,
    phi_hi: PhiRatio,
    points: usize,
    spacing: Spacing,
) -> Result<LogLogCurve> {
    let (lo, hi) = (phi_lo.value(), phi_hi.value());
    if lo >= hi {
        return domain(format!("phi_lo ({lo}) must be below phi_hi ({hi})"));
    }
    if points < 2 {
        return domain(format!("a curve needs at least 2 points, got {points}"));
    }
    let last = (points - 1) as f64;
    let samples = (0..points)
        .map(|i| {
            let t = i as f64 / last;
            let phi = if i == points - 1 {
                hi
            } else {
                match spacing {
                    Spacing::Log => (lo.ln() + t * (hi.ln() - lo.ln())).exp(),
                    Spacing::Linear => lo + t * (hi - lo),
                }
            };
            let phi = PhiRatio::new(phi)?;
            Ok(LogLogSample {
                ln_x: phi.value().ln(),
                ln_n: occupancy(phi).ln(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LogLogCurve {
        axis: Axis::Energy,
        samples,
    })
}

/// Analytic `d ln n / d ln Φ = −Φ e^Φ / (e^Φ − 1)`.
///
/// Tends to −1 as `Φ → 0` and to `−Φ` as `Φ → ∞`.
pub fn local_slope(phi: PhiRatio) -> f64 {
    let p = phi.value();
    // e^Φ/(e^Φ − 1) = 1/(1 − e^{−Φ})
    let one_minus_exp = -(-p).exp_m1();
    -p / one_minus_exp
}

/// Moves an energy-axis curve onto the field axis, halving every abscissa.
/// A curve already on the field axis is returned unchanged.
pub fn field_transform(curve: &LogLogCurve) -> LogLogCurve {
    match curve.axis {
        Axis::Field => curve.clone(),
        Axis::Energy => LogLogCurve {
            axis: Axis::Field,
            samples: curve
                .samples
                .iter()
                .map(|s| LogLogSample {
                    ln_x: 0.5 * s.ln_x,
                    ln_n: s.ln_n,
                })
                .collect(),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeEstimate {
    pub slope: f64,
    pub intercept: f64,
    /// `(phi_lo, phi_hi)` of the fitting window.
    pub window: (f64, f64),
    /// RMS of the fit residuals in `ln n`.
    pub residual: f64,
    pub samples_used: usize,
}

/// Ordinary least squares of `ln n` on the abscissa, restricted to samples
/// whose `Φ` lies inside `window` (inclusive).
pub fn fit_slope(curve: &LogLogCurve, window: (f64, f64)) -> Result<SlopeEstimate> {
    let (lo, hi) = window;
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return domain(format!(
            "fit window must satisfy 0 < lo < hi, got ({lo}, {hi})"
        ));
    }
    let lo_x = curve.axis.abscissa_of(lo.ln());
    let hi_x = curve.axis.abscissa_of(hi.ln());
    let slack = 1e-12 * (1.0 + lo_x.abs().max(hi_x.abs()));
    let inside: Vec<LogLogSample> = curve
        .samples
        .iter()
        .filter(|s| s.ln_x >= lo_x - slack && s.ln_x <= hi_x + slack)
        .copied()
        .collect();
    if inside.len() < 3 {
        return domain(format!(
            "slope fit needs at least 3 samples in the window, found {}",
            inside.len()
        ));
    }
    let n = inside.len() as f64;
    let mean_x = inside.iter().map(|s| s.ln_x).sum::<f64>() / n;
    let mean_y = inside.iter().map(|s| s.ln_n).sum::<f64>() / n;
    let (sxx, sxy) = inside.iter().fold((0.0, 0.0), |(sxx, sxy), s| {
        let dx = s.ln_x - mean_x;
        (sxx + dx * dx, sxy + dx * (s.ln_n - mean_y))
    });
    if sxx == 0.0 {
        return domain("window samples share a single abscissa");
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse: f64 = inside
        .iter()
        .map(|s| (s.ln_n - (intercept + slope * s.ln_x)).powi(2))
        .sum();
    Ok(SlopeEstimate {
        slope,
        intercept,
        window,
        residual: (sse / n).sqrt(),
        samples_used: inside.len(),
    })
}
