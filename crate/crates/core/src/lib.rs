//! Thermodynamics of information for a Bose-Einstein gas of modes.
//!
//! The crate covers both limits of the Bose-Einstein occupancy: the quantum
//! (canonic) limit where `n << 1`, and the high-occupation limit where every
//! mode behaves as a harmonic oscillator carrying one `k_B` of entropy. On top
//! of the closed forms it provides
//!
//! * [`info`]: Shannon information, the H-function and the Clausius check for
//!   binary files,
//! * [`benford`]: the equilibrium digit distribution and first-digit
//!   conformance scoring,
//! * [`powerlaw`]: log-log occupancy curves and slope fitting,
//! * [`sim`]: a seeded Monte-Carlo exchange of quanta among modes,
//! * [`carnot`]: Hook-law oscillator amplification and the regime summary.
//!
//! Entropies are dimensionless multiples of `k_B` throughout.

pub mod benford;
pub mod carnot;
mod error;
pub mod info;
pub mod modes;
pub mod powerlaw;
pub mod sim;

pub use error::{Error, Result};
pub use modes::{Mode, ModeEnsemble, PhiRatio, PhysicalConstants, Regime};
