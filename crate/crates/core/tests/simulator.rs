use std::collections::HashMap;

use entropy_modes::sim::{
    init_state, run, run_replicas, step, Init, SimConfig, SimState, Simulation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn compositions_are_equally_likely() {
    // three modes sharing two quanta: six compositions
    let config = SimConfig::new(3, 2, 1_200_000, 10_000, 11, Init::AllInOne).unwrap();
    let mut sim = Simulation::new(config);
    let mut seen: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut total = 0u64;
    sim.advance_to(config.steps, &mut |s: &SimState| {
        *seen.entry(s.occupancies().to_vec()).or_default() += 1;
        total += 1;
    });
    assert_eq!(seen.len(), 6);
    let p = 1.0 / 6.0;
    // snapshots are M steps apart and not independent; allow for it with a wide band
    let sigma = (p * (1.0 - p) / total as f64).sqrt() * 3.0;
    for (composition, count) in &seen {
        let freq = *count as f64 / total as f64;
        assert!((freq - p).abs() < 3.0 * sigma, "{composition:?}: {freq}");
    }
}

#[test]
fn relaxation_from_a_single_mode() {
    let config = SimConfig::new(50, 100, 400_000, 0, 3, Init::AllInOne).unwrap();
    let mut sim = Simulation::new(config);
    let mut distances = Vec::new();
    for target in [40_000, 200_000, 400_000] {
        sim.advance_to(target, &mut |_| {});
        distances.push(sim.summary().distance);
    }
    assert!(distances.windows(2).all(|w| w[1] < w[0]), "{distances:?}");
}

#[test]
fn every_snapshot_holds_all_quanta() {
    for init in [Init::AllInOne, Init::Uniform] {
        let config = SimConfig::new(17, 230, 50_000, 5_000, 5, init).unwrap();
        let s = run(&config);
        assert_eq!(s.quanta_seen(), 230 * s.snapshots);
        assert_eq!(s.mass(), 17 * s.snapshots);
        assert_eq!(s.snapshots, (50_000 - 5_000) / 17 + 1);
    }
}

#[test]
fn single_steps_move_one_quantum() {
    let config = SimConfig::new(5, 12, 1, 0, 0, Init::AllInOne).unwrap();
    let mut state = init_state(&config);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let before = state.occupancies().to_vec();
        match step(&mut state, &mut rng) {
            Some(m) => {
                assert_ne!(m.from, m.to);
                assert_eq!(state.occupancies()[m.from] + 1, before[m.from]);
                assert_eq!(state.occupancies()[m.to], before[m.to] + 1);
            }
            None => assert_eq!(state.occupancies(), &before[..]),
        }
        assert_eq!(state.quanta(), 12);
    }
    assert_eq!(state.step_count(), 10_000);
}

#[test]
fn seeds_reproduce_and_differ() {
    let config = SimConfig::new(40, 200, 100_000, 10_000, 77, Init::Uniform).unwrap();
    assert_eq!(run(&config), run(&config));
    let other = SimConfig { seed: 78, ..config };
    assert_ne!(run(&config).histogram, run(&other).histogram);
    assert_eq!(run_replicas(&config, 1).unwrap(), run(&config));
    assert_eq!(
        run_replicas(&config, 4).unwrap(),
        run_replicas(&config, 4).unwrap()
    );
}

#[test]
fn replicas_pool_their_snapshots() {
    let config = SimConfig::new(20, 60, 40_000, 4_000, 1, Init::Uniform).unwrap();
    let one = run(&config);
    let four = run_replicas(&config, 4).unwrap();
    assert_eq!(four.snapshots, 4 * one.snapshots);
    assert_eq!(four.quanta_seen(), 60 * four.snapshots);
    assert!(four.distance < one.distance * 1.5);
}

#[test]
fn advancing_in_pieces_matches_one_run() {
    let config = SimConfig::new(9, 30, 20_000, 1_000, 8, Init::AllInOne).unwrap();
    let mut sim = Simulation::new(config);
    for target in (0..=20_000).step_by(777) {
        sim.advance_to(target, &mut |_| {});
    }
    sim.advance_to(u64::MAX, &mut |_| {});
    assert_eq!(sim.summary(), run(&config));
}

#[test]
fn empty_system_stays_empty() {
    let config = SimConfig::new(4, 0, 1_000, 100, 0, Init::AllInOne).unwrap();
    let s = run(&config);
    assert_eq!(s.histogram, vec![4 * s.snapshots]);
    assert_eq!(s.distance, 0.0);
    assert!(s.phi_estimate().is_none());
}
