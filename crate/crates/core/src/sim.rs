//! Monte-Carlo exchange of indistinguishable quanta among modes.
//!
//! Each step draws one mode uniformly. If it is empty the step is a null
//! move; otherwise one quantum hops to a mode drawn uniformly from the other
//! `M − 1`. Every allowed move has probability `1 / (M (M − 1))` in both
//! directions, so the chain is symmetric and its stationary law is uniform
//! over the `C(Q + M − 1, Q)` compositions. The single-mode marginal then
//! approaches the geometric law `P(n) ∝ e^{−Φ n}` with `Φ = ln(1 + 1/n̄)`.
//!
//! Runs are reproducible: the generator is ChaCha8 seeded from a `u64`, with
//! replica `r` on stream `r`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::benford::{first_digit, DigitHistogram};
use crate::error::{domain, Result};
use crate::modes::{phi_of_occupancy, PhiRatio};

/// Generator identification recorded in reports.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng";
pub const RNG_VERSION: &str = "rand_chacha 0.9 / rand 0.9, seed_from_u64, stream = replica index";

/// Cumulative mass at which the geometric reference is truncated.
const REFERENCE_MASS: f64 = 1.0 - 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Init {
    /// Every quantum starts in mode 0.
    AllInOne,
    /// `⌊Q/M⌋` each, the remainder handed out one per mode from the left.
    #[default]
    Uniform,
}

impl std::str::FromStr for Init {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all_in_one" => Ok(Init::AllInOne),
            "uniform" => Ok(Init::Uniform),
            other => Err(crate::Error::Parse(format!("unknown init '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimConfig {
    pub modes: usize,
    pub quanta: u64,
    pub steps: u64,
    pub burn_in: u64,
    pub seed: u64,
    pub init: Init,
}

impl SimConfig {
    pub fn new(
        modes: usize,
        quanta: u64,
        steps: u64,
        burn_in: u64,
        seed: u64,
        init: Init,
    ) -> Result<Self> {
        if modes == 0 {
            return domain("the simulation needs at least one mode");
        }
        if burn_in > steps {
            return domain(format!(
                "burn-in ({burn_in}) exceeds the step count ({steps})"
            ));
        }
        Ok(Self {
            modes,
            quanta,
            steps,
            burn_in,
            seed,
            init,
        })
    }

    /// Burn-in defaults to 10% of the steps.
    pub fn default_burn_in(steps: u64) -> u64 {
        steps / 10
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimState {
    occupancies: Vec<u64>,
    step: u64,
}

impl SimState {
    pub fn from_occupancies(occupancies: Vec<u64>) -> Result<Self> {
        if occupancies.is_empty() {
            return domain("a state needs at least one mode");
        }
        Ok(Self {
            occupancies,
            step: 0,
        })
    }

    pub fn occupancies(&self) -> &[u64] {
        &self.occupancies
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    pub fn quanta(&self) -> u64 {
        self.occupancies.iter().sum()
    }
}

pub fn init_state(config: &SimConfig) -> SimState {
    let m = config.modes;
    let occupancies = match config.init {
        Init::AllInOne => {
            let mut v = vec![0; m];
            v[0] = config.quanta;
            v
        }
        Init::Uniform => {
            let base = config.quanta / m as u64;
            let extra = (config.quanta % m as u64) as usize;
            (0..m).map(|i| base + (i < extra) as u64).collect()
        }
    };
    SimState {
        occupancies,
        step: 0,
    }
}

/// A quantum moved from `from` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

/// Advances the chain by one step; `None` for a null move.
pub fn step<R: Rng + ?Sized>(state: &mut SimState, rng: &mut R) -> Option<Move> {
    state.step += 1;
    let m = state.occupancies.len();
    if m < 2 {
        return None;
    }
    let from = rng.random_range(0..m);
    if state.occupancies[from] == 0 {
        return None;
    }
    let mut to = rng.random_range(0..m - 1);
    if to >= from {
        to += 1;
    }
    state.occupancies[from] -= 1;
    state.occupancies[to] += 1;
    Some(Move { from, to })
}

/// Truncated geometric law `P(n) = (1 − x) x^n` with `x = n̄ / (n̄ + 1)`.
pub fn geometric_reference(mean: f64) -> Result<Vec<f64>> {
    if !(mean.is_finite() && mean > 0.0) {
        return domain(format!("mean occupancy must be positive, got {mean}"));
    }
    let x = mean / (mean + 1.0);
    let mut pmf = Vec::new();
    let mut term = 1.0 - x;
    let mut cum = 0.0;
    while cum < REFERENCE_MASS && term > 0.0 {
        pmf.push(term);
        cum += term;
        term *= x;
    }
    Ok(pmf)
}

/// Reference used by summaries; a point mass at zero when there are no quanta.
fn reference_for(quanta: u64, modes: usize) -> Vec<f64> {
    if quanta == 0 {
        vec![1.0]
    } else {
        geometric_reference(quanta as f64 / modes as f64).expect("positive mean occupancy")
    }
}

/// Total-variation distance between two pmfs on `0, 1, 2, …`.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    let len = p.len().max(q.len());
    let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    0.5 * (0..len).map(|i| (get(p, i) - get(q, i)).abs()).sum::<f64>()
}

/// Occupation-number histogram accumulated over retained snapshots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OccupancySummary {
    pub modes: usize,
    pub quanta: u64,
    pub snapshots: u64,
    /// `histogram[n]` counts mode-snapshots holding `n` quanta.
    pub histogram: Vec<u64>,
    /// `Q / M`.
    pub mean: f64,
    pub reference: Vec<f64>,
    /// Total-variation distance between the empirical law and `reference`.
    pub distance: f64,
}

impl OccupancySummary {
    fn from_histogram(modes: usize, quanta: u64, snapshots: u64, histogram: Vec<u64>) -> Self {
        let reference = reference_for(quanta, modes);
        let mass: u64 = histogram.iter().sum();
        let empirical: Vec<f64> = histogram
            .iter()
            .map(|&c| {
                if mass == 0 {
                    0.0
                } else {
                    c as f64 / mass as f64
                }
            })
            .collect();
        let distance = if mass == 0 {
            1.0
        } else {
            total_variation(&empirical, &reference).clamp(0.0, 1.0)
        };
        Self {
            modes,
            quanta,
            snapshots,
            histogram,
            mean: quanta as f64 / modes as f64,
            reference,
            distance,
        }
    }

    /// Empirical pmf of the occupation number.
    pub fn empirical(&self) -> Vec<f64> {
        let mass = self.mass() as f64;
        self.histogram.iter().map(|&c| c as f64 / mass).collect()
    }

    /// `M · snapshots`.
    pub fn mass(&self) -> u64 {
        self.histogram.iter().sum()
    }

    /// `Σ n · histogram[n]`, equal to `Q · snapshots`.
    pub fn quanta_seen(&self) -> u64 {
        self.histogram
            .iter()
            .enumerate()
            .map(|(n, &c)| n as u64 * c)
            .sum()
    }

    /// `Φ̂ = ln(1 + 1/n̄)`; `None` when there are no quanta.
    pub fn phi_estimate(&self) -> Option<PhiRatio> {
        phi_of_occupancy(self.mean).ok()
    }

    /// Adds another replica of the same system.
    pub fn merge(&self, other: &OccupancySummary) -> Result<OccupancySummary> {
        if self.modes != other.modes || self.quanta != other.quanta {
            return domain("summaries of different systems cannot be merged");
        }
        let len = self.histogram.len().max(other.histogram.len());
        let histogram = (0..len)
            .map(|i| {
                self.histogram.get(i).copied().unwrap_or(0)
                    + other.histogram.get(i).copied().unwrap_or(0)
            })
            .collect();
        Ok(Self::from_histogram(
            self.modes,
            self.quanta,
            self.snapshots + other.snapshots,
            histogram,
        ))
    }
}

/// A running chain with its snapshot histogram.
///
/// Snapshots are taken at steps `burn_in, burn_in + M, burn_in + 2M, …` up to
/// `steps`.
#[derive(Debug, Clone)]
pub struct Simulation {
    config: SimConfig,
    state: SimState,
    rng: ChaCha8Rng,
    histogram: Vec<u64>,
    snapshots: u64,
    primed: bool,
}

impl Simulation {
    pub fn new(config: SimConfig) -> Self {
        Self::with_stream(config, 0)
    }

    pub fn with_stream(config: SimConfig, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(stream);
        Self {
            state: init_state(&config),
            config,
            rng,
            histogram: Vec::new(),
            snapshots: 0,
            primed: false,
        }
    }

    pub fn state(&self) -> &SimState {
        &self.state
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    fn maybe_snapshot(&mut self, observer: &mut dyn FnMut(&SimState)) {
        let s = self.state.step;
        let stride = self.config.modes as u64;
        if s < self.config.burn_in || !(s - self.config.burn_in).is_multiple_of(stride) {
            return;
        }
        for &n in &self.state.occupancies {
            let n = n as usize;
            if n >= self.histogram.len() {
                self.histogram.resize(n + 1, 0);
            }
            self.histogram[n] += 1;
        }
        self.snapshots += 1;
        observer(&self.state);
    }

    /// Runs to `min(target, steps)`, calling `observer` at every snapshot.
    pub fn advance_to(&mut self, target: u64, observer: &mut dyn FnMut(&SimState)) {
        if !self.primed {
            self.primed = true;
            self.maybe_snapshot(observer);
        }
        let target = target.min(self.config.steps);
        while self.state.step < target {
            if self.config.quanta == 0 {
                self.state.step += 1;
            } else {
                step(&mut self.state, &mut self.rng);
            }
            self.maybe_snapshot(observer);
        }
    }

    pub fn summary(&self) -> OccupancySummary {
        OccupancySummary::from_histogram(
            self.config.modes,
            self.config.quanta,
            self.snapshots,
            self.histogram.clone(),
        )
    }
}

pub fn run(config: &SimConfig) -> OccupancySummary {
    run_observed(config, &mut |_| {})
}

/// Like [`run`], calling `observer` with the state at every snapshot.
pub fn run_observed(config: &SimConfig, observer: &mut dyn FnMut(&SimState)) -> OccupancySummary {
    let mut sim = Simulation::new(*config);
    sim.advance_to(config.steps, observer);
    sim.summary()
}

/// Runs `replicas` independent chains on separate threads (replica `r` uses
/// stream `r`) and merges their summaries. One replica equals [`run`].
pub fn run_replicas(config: &SimConfig, replicas: usize) -> Result<OccupancySummary> {
    if replicas == 0 {
        return domain("at least one replica is required");
    }
    let summaries: Vec<OccupancySummary> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..replicas as u64)
            .map(|r| {
                scope.spawn(move || {
                    let mut sim = Simulation::with_stream(*config, r);
                    sim.advance_to(config.steps, &mut |_| {});
                    sim.summary()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("replica thread panicked"))
            .collect()
    });
    let mut iter = summaries.into_iter();
    let first = iter.next().expect("at least one replica");
    iter.try_fold(first, |acc, s| acc.merge(&s))
}

/// Leading digits of the nonzero occupancies of a state.
pub fn benford_of_state(state: &SimState, base: u32) -> Result<DigitHistogram> {
    let mut hist = DigitHistogram::new(base)?;
    for &n in state.occupancies.iter().filter(|&&n| n > 0) {
        let d = first_digit(n as f64, base)?.expect("nonzero occupancy");
        hist.record_digit(d)?;
    }
    if hist.total() == 0 {
        return domain("every mode is empty; no leading digits");
    }
    Ok(hist)
}

/// Leading digits of the nonzero occupancies recorded in a summary.
pub fn benford_of_summary(summary: &OccupancySummary, base: u32) -> Result<DigitHistogram> {
    let mut hist = DigitHistogram::new(base)?;
    for (n, &count) in summary.histogram.iter().enumerate().skip(1) {
        if count > 0 {
            let d = first_digit(n as f64, base)?.expect("nonzero occupancy");
            hist.add_count(d, count)?;
        }
    }
    if hist.total() == 0 {
        return domain("every mode is empty; no leading digits");
    }
    Ok(hist)
}
