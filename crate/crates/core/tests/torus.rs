use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zetalab::parameters::presets;
use zetalab::smoothing::{sample_omega, TorusPoint};
use zetalab::torus_lab::{
    discrepancy_table, random_character, rotate, star_discrepancy_1d, trajectory_point, weyl_sum,
};

fn max_gap(a: &TorusPoint, b: &TorusPoint) -> f64 {
    let mut gap: f64 = a.omega1_values().iter().zip(b.omega1_values()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    for f in 0..a.factors() {
        gap = a.omega2(f).iter().zip(b.omega2(f)).map(|(x, y)| (x - y).norm()).fold(gap, f64::max);
    }
    gap
}

#[test]
fn rotation_walks_the_trajectory() {
    for c in presets() {
        let mut w = TorusPoint::identity(30, 10, c.torus_factor_count());
        for k in 1..=1000u64 {
            w = rotate(&w, &c).unwrap();
            if k % 100 == 0 {
                let direct = trajectory_point(k, &c, 30, 10).unwrap();
                assert!(max_gap(&w, &direct) < 1e-10, "{:?} k = {k}", c.label());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn weyl_sums_decay(seed in 0u64..10_000, which in 0usize..4, n in 10u64..3000) {
        let c = &presets()[which];
        let chi = random_character(&mut ChaCha8Rng::seed_from_u64(seed), c, 30, 10);
        let theta = chi.theta(c).unwrap();
        let w = weyl_sum(&chi, n, c).unwrap();
        let bound = 1.0 / ((n + 1) as f64 * (theta / 2.0).sin().abs());
        prop_assert!(w.norm() <= bound * (1.0 + 1e-9) + 1e-12, "|W| = {} > {bound}", w.norm());
        prop_assert!(w.norm() <= 1.0 + 1e-12);
    }
}

#[test]
fn discrepancy_decreases_for_small_primes() {
    for c in presets() {
        let rows = discrepancy_table(&c, &[2, 3, 5], &[1_000, 10_000, 100_000]).unwrap();
        for chunk in rows.chunks(3) {
            assert!(
                chunk[1].discrepancy < chunk[0].discrepancy && chunk[2].discrepancy < chunk[1].discrepancy,
                "{:?} prime {}: {:?}",
                c.label(),
                chunk[0].prime,
                chunk.iter().map(|r| r.discrepancy).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn sampled_points_look_haar() {
    let samples = 4000;
    let mut angles = Vec::with_capacity(samples);
    let mut mean = Complex64::new(0.0, 0.0);
    for seed in 0..samples as u64 {
        let w = sample_omega(seed, 5, 3, 1);
        let z = w.omega1(3).unwrap();
        assert!((z.norm() - 1.0).abs() < 1e-12);
        mean += z * w.omega2(0)[2];
        angles.push((z.arg() / std::f64::consts::TAU).rem_euclid(1.0));
    }
    mean /= samples as f64;
    // a few standard errors of a uniform phase
    assert!(mean.norm() < 4.0 / (samples as f64).sqrt(), "{mean}");
    let d = star_discrepancy_1d(&angles, true).unwrap();
    assert!(d < 0.03, "D* = {d}");
    assert_eq!(sample_omega(7, 5, 3, 1), sample_omega(7, 5, 3, 1));
}
