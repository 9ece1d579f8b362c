use entropy_modes::benford::{
    benford_pmf, conformance, corpus, first_digit, first_digit_decimal, DigitHistogram,
    MadThresholds,
};
use entropy_modes::carnot::{carnot_efficiency, hook_energy, HookOscillator};
use entropy_modes::info::{normalized_information, shannon_information, BitFileStats, InfoMethod};
use entropy_modes::modes::{
    canonic_occupancy, ensemble_entropy, mode_entropy, occupancy, phi_of_occupancy,
};
use entropy_modes::powerlaw::{fit_slope, local_slope, loglog_curve, Spacing};
use entropy_modes::{ModeEnsemble, PhiRatio, Regime};
use proptest::prelude::*;

fn phi(v: f64) -> PhiRatio {
    PhiRatio::new(v).unwrap()
}

proptest! {
    #[test]
    fn occupancy_round_trip(log_n in -8.0f64..12.0) {
        let n = 10f64.powf(log_n);
        let back = occupancy(phi_of_occupancy(n).unwrap());
        prop_assert!(((back - n) / n).abs() < 1e-12);
    }

    #[test]
    fn occupancy_decreasing_and_above_canonic(a in 1e-6f64..30.0, d in 1e-6f64..5.0) {
        prop_assert!(occupancy(phi(a)) > occupancy(phi(a + d)));
        prop_assert!(canonic_occupancy(phi(a)) < occupancy(phi(a)));
    }

    #[test]
    fn laurent_expansion_near_zero(p in 1e-8f64..0.01) {
        prop_assert!((occupancy(phi(p)) - (1.0 / p - 0.5)).abs() < p / 10.0);
    }

    #[test]
    fn exact_entropy_dominates_quantum_form(n in 1e-12f64..0.999) {
        let exact = mode_entropy(n, Regime::Exact).unwrap();
        let quantum = mode_entropy(n, Regime::Quantum).unwrap();
        prop_assert!(exact >= quantum);
    }

    #[test]
    fn classical_form_undercounts_by_about_ln_n(log_n in 3.0f64..15.0) {
        let n = 10f64.powf(log_n);
        let exact = mode_entropy(n, Regime::Exact).unwrap();
        prop_assert_eq!(mode_entropy(n, Regime::Classical).unwrap(), 1.0);
        prop_assert!((exact - 1.0 - n.ln()).abs() < 1e-3);
    }

    #[test]
    fn information_symmetric(len in 1u64..5000, frac in 0.0f64..=1.0) {
        let ones = ((len as f64) * frac).floor() as u64;
        let a = BitFileStats::new(len, ones).unwrap();
        let b = BitFileStats::new(len, len - ones).unwrap();
        for m in [InfoMethod::Stirling, InfoMethod::Exact] {
            prop_assert_eq!(shannon_information(&a, m), shannon_information(&b, m));
        }
    }

    #[test]
    fn stirling_dominates_exact(len in 2u64..100_000, frac in 0.0f64..1.0) {
        let ones = (((len - 1) as f64) * frac).floor() as u64 + 1;
        prop_assume!(ones < len);
        let s = BitFileStats::new(len, ones).unwrap();
        let st = shannon_information(&s, InfoMethod::Stirling).nats();
        let ex = shannon_information(&s, InfoMethod::Exact).nats();
        prop_assert!(st >= ex, "stirling {st} < exact {ex}");
    }

    #[test]
    fn normalized_information_symmetric(p in 0.0f64..=1.0) {
        let a = normalized_information(p).unwrap();
        let b = normalized_information(1.0 - p).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&a));
    }

    #[test]
    fn benford_pmf_well_formed(base in 2u32..64) {
        let pmf = benford_pmf(base).unwrap();
        let sum: f64 = pmf.probs().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        prop_assert!(pmf.probs().windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn leading_digit_ignores_decimal_shifts(m in 1u64..10_000_000, k in -250i32..250) {
        let x: f64 = format!("{m}e{k}").parse().unwrap();
        let first = m.to_string().as_bytes()[0] - b'0';
        prop_assert_eq!(first_digit(x, 10).unwrap(), Some(first as u32));
        prop_assert_eq!(first_digit(m as f64, 10).unwrap(), Some(first as u32));
        prop_assert_eq!(first_digit_decimal(&format!("-{m}e{k}")).unwrap(), Some(first as u32));
    }

    #[test]
    fn leading_digit_ignores_base_shifts(base in 2u32..17, m in 1u64..100_000, k in -12i32..12) {
        let b = base as f64;
        let x = if k >= 0 { m as f64 * b.powi(k) } else { m as f64 / b.powi(-k) };
        prop_assert_eq!(first_digit(x, base).unwrap(), first_digit(m as f64, base).unwrap());
        let mut top = m;
        while top >= base as u64 {
            top /= base as u64;
        }
        prop_assert_eq!(first_digit(m as f64, base).unwrap(), Some(top as u32));
    }

    #[test]
    fn slope_bounded_near_classical_limit(p in 1e-9f64..=1.0) {
        prop_assert!((local_slope(phi(p)) + 1.0).abs() <= p);
    }

    #[test]
    fn slope_strictly_decreasing(a in 1e-6f64..50.0, d in 1e-3f64..5.0) {
        prop_assert!(local_slope(phi(a + d)) < local_slope(phi(a)));
    }

    #[test]
    fn hook_energy_homogeneous(kappa in 1e-3f64..1e3, amp in 0.0f64..10.0, s in 0.1f64..10.0) {
        let e = hook_energy(&HookOscillator::new(kappa, amp).unwrap());
        let e_amp = hook_energy(&HookOscillator::new(kappa, amp * s).unwrap());
        let e_kappa = hook_energy(&HookOscillator::new(kappa * s, amp).unwrap());
        prop_assert!((e_amp - s * s * e).abs() <= 1e-12 * e_amp.max(1e-300));
        prop_assert!((e_kappa - s * e).abs() <= 1e-12 * e_kappa.max(1e-300));
    }

    #[test]
    fn carnot_monotone(t_low in 1.0f64..1e6, gap in 0.0f64..1e6, up in 0.0f64..1e6, down in 0.0f64..1.0) {
        let t_high = t_low + gap;
        let base = carnot_efficiency(t_low, t_high).unwrap();
        prop_assert!(carnot_efficiency(t_low, t_high + up).unwrap() >= base);
        prop_assert!(carnot_efficiency(t_low * (1.0 - down * 0.99), t_high).unwrap() >= base);
    }
}

#[test]
fn stirling_maximum_at_half_filling() {
    for len in [1u64, 2, 7, 10, 33, 100] {
        let values: Vec<f64> = (0..=len)
            .map(|l| {
                shannon_information(&BitFileStats::new(len, l).unwrap(), InfoMethod::Stirling)
                    .nats()
            })
            .collect();
        let best = values.iter().cloned().fold(f64::MIN, f64::max);
        for (l, v) in values.iter().enumerate() {
            let is_middle = l as u64 == len / 2 || l as u64 == len.div_ceil(2);
            if is_middle {
                assert_eq!(*v, best, "Λ = {len}, L = {l}");
            } else {
                assert!(*v < best);
            }
        }
    }
}

#[test]
fn stirling_gap_per_mode_vanishes() {
    let gaps: Vec<f64> = [100u64, 10_000, 1_000_000]
        .iter()
        .map(|&len| {
            let s = BitFileStats::new(len, len * 3 / 10).unwrap();
            let st = shannon_information(&s, InfoMethod::Stirling).nats();
            let ex = shannon_information(&s, InfoMethod::Exact).nats();
            (st - ex) / len as f64
        })
        .collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    // gap ≈ ½ ln(2π Λ p (1-p))
    let want = 0.5 * (2.0 * std::f64::consts::PI * 1e6 * 0.21f64).ln() / 1e6;
    assert!((gaps[2] - want).abs() < 1e-9);
}

#[test]
fn normalized_information_increasing_below_half() {
    let mut prev = normalized_information(0.0).unwrap();
    for i in 1..=5000 {
        let cur = normalized_information(i as f64 * 1e-4).unwrap();
        assert!(cur > prev);
        prev = cur;
    }
    assert_eq!(prev, 1.0);
}

#[test]
fn fit_converges_to_local_slope() {
    let centre = 0.01f64;
    let target = local_slope(phi(centre));
    let mut errors = Vec::new();
    for half_width_decades in [0.5, 0.25, 0.125] {
        let lo = centre * 10f64.powf(-half_width_decades);
        let hi = centre * 10f64.powf(half_width_decades);
        let curve = loglog_curve(phi(lo), phi(hi), 41, Spacing::Log).unwrap();
        let fit = fit_slope(&curve, (lo, hi)).unwrap();
        errors.push((fit.slope - target).abs());
    }
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    assert!(errors[2] < 1e-3);
}

#[test]
fn relaxing_into_a_canonic_bath_raises_entropy() {
    // the oscillator keeps one k_B no matter how much energy it has left
    for n in [1e2, 1e6, 1e12, 1e20] {
        assert_eq!(mode_entropy(n, Regime::Classical).unwrap(), 1.0);
    }
    let lambda = 1_000_000;
    let cold = ModeEnsemble::uniform(lambda, 1e14, occupancy(phi(10.0))).unwrap();
    let warm = ModeEnsemble::uniform(lambda, 1e14, occupancy(phi(10.0 - 0.01))).unwrap();
    let before = ensemble_entropy(&cold, Regime::Quantum).unwrap();
    let after = ensemble_entropy(&warm, Regime::Quantum).unwrap();
    assert!(after > before, "{after} <= {before}");
}

#[test]
fn benford_conformance_is_scale_invariant() {
    let pmf = benford_pmf(10).unwrap();
    let score = |values: &[String]| {
        let mut h = DigitHistogram::new(10).unwrap();
        for v in values {
            h.record_text(v);
        }
        conformance(&h, &pmf, &MadThresholds::default())
            .unwrap()
            .mad
    };
    let plain = corpus::powers_of_two(10_000);
    // 3.7 · 2^k = 37 · 2^k / 10; the shift does not move the leading digit
    let scaled = corpus::scaled_powers(2, 10_000, 37);
    let n = 10_000.0;
    let noise: f64 = pmf
        .probs()
        .iter()
        .map(|p| (p * (1.0 - p) / n).sqrt())
        .sum::<f64>()
        / 9.0;
    let (a, b) = (score(&plain), score(&scaled));
    assert!((a - b).abs() < 2.0 * noise, "{a} vs {b}, noise {noise}");
}

#[test]
fn powers_of_two_digits_agree_with_logarithms() {
    // frac(k log10 2) gives the leading digit away from digit boundaries
    let powers = corpus::powers_of_two(2000);
    for (k, p) in powers.iter().enumerate() {
        let frac = (k as f64 * 2f64.log10()).fract();
        let mant = 10f64.powf(frac);
        if (mant - mant.round()).abs() < 1e-9 {
            continue;
        }
        let want = mant.floor() as u32;
        assert_eq!(first_digit_decimal(p).unwrap(), Some(want), "2^{k}");
    }
}
