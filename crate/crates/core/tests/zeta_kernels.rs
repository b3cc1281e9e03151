use num_complex::Complex64;
use proptest::prelude::*;

use zetalab::zeta_kernels::{
    dirichlet_coefficients, hurwitz_zeta, matsumoto_eval, periodic_hurwitz_zeta, residue_b, EulerProductSpec,
    MatsumotoMode, PeriodicSequence,
};

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn sequence(values: &[f64]) -> Option<PeriodicSequence> {
    PeriodicSequence::from_real(values).ok()
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn constant_sequence_reduces_to_hurwitz(sigma in 0.55f64..3.0, t in 0.5f64..40.0, alpha in 0.01f64..1.0) {
        let s = Complex64::new(sigma, t);
        let a = periodic_hurwitz_zeta(s, alpha, &PeriodicSequence::ones()).unwrap();
        let b = hurwitz_zeta(s, alpha).unwrap();
        prop_assert!(close(a, b, 1e-10), "{a} vs {b}");
    }

    #[test]
    fn period_doubling(
        values in prop::collection::vec(-3.0f64..3.0, 1..5),
        sigma in 0.55f64..3.0,
        t in 0.5f64..40.0,
        alpha in 0.01f64..1.0,
    ) {
        let Some(b) = sequence(&values) else { return Ok(()) };
        let s = Complex64::new(sigma, t);
        let one = periodic_hurwitz_zeta(s, alpha, &b).unwrap();
        let two = periodic_hurwitz_zeta(s, alpha, &b.repeated(2)).unwrap();
        prop_assert!(close(one, two, 1e-10), "{one} vs {two}");
    }

    #[test]
    fn conjugation_symmetry(
        values in prop::collection::vec(-3.0f64..3.0, 1..4),
        sigma in 0.55f64..3.0,
        t in 0.5f64..40.0,
        alpha in 0.01f64..1.0,
    ) {
        let Some(b) = sequence(&values) else { return Ok(()) };
        let s = Complex64::new(sigma, t);
        let up = periodic_hurwitz_zeta(s, alpha, &b).unwrap();
        let down = periodic_hurwitz_zeta(s.conj(), alpha, &b).unwrap();
        prop_assert!(close(down, up.conj(), 1e-11));
    }

    #[test]
    fn linear_in_the_sequence(
        u in prop::collection::vec(-2.0f64..2.0, 3),
        v in prop::collection::vec(-2.0f64..2.0, 3),
        alpha in 0.05f64..1.0,
    ) {
        let w: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let (Some(bu), Some(bv), Some(bw)) = (sequence(&u), sequence(&v), sequence(&w)) else { return Ok(()) };
        prop_assert!(close(residue_b(&bw), residue_b(&bu) + residue_b(&bv), 1e-14));
        let s = Complex64::new(1.0 + 1e-7, 0.0);
        let near_pole = periodic_hurwitz_zeta(s, alpha, &bu).unwrap() * (s - 1.0);
        prop_assert!((near_pole - residue_b(&bu)).norm() < 1e-5, "{near_pole} vs {}", residue_b(&bu));
        let s = Complex64::new(0.8, 7.0);
        let sum = periodic_hurwitz_zeta(s, alpha, &bu).unwrap() + periodic_hurwitz_zeta(s, alpha, &bv).unwrap();
        prop_assert!(close(periodic_hurwitz_zeta(s, alpha, &bw).unwrap(), sum, 1e-10));
    }
}

#[test]
fn euler_product_matches_dirichlet_series() {
    for spec in [EulerProductSpec::riemann(), EulerProductSpec::zeta_squared()] {
        let coeffs = dirichlet_coefficients(&spec, 20_000).unwrap();
        for sigma in [2.5, 3.0, 4.0] {
            for t in [0.0, 3.0, -11.0] {
                let s = Complex64::new(sigma, t);
                let euler = matsumoto_eval(&spec, s, MatsumotoMode::EulerProduct { primes_up_to: 20_000 }).unwrap();
                let series = coeffs.eval(s);
                assert!(close(euler.value, series, 1e-5), "{}: {} vs {series} at {s}", spec.label, euler.value);
            }
        }
    }
}

#[test]
fn dirichlet_coefficients_of_zeta_squared_count_divisors() {
    let coeffs = dirichlet_coefficients(&EulerProductSpec::zeta_squared(), 200).unwrap();
    for k in 1..=200usize {
        let d = (1..=k).filter(|m| k % m == 0).count() as f64;
        assert_eq!(coeffs.get(k), Complex64::new(d, 0.0), "k = {k}");
    }
}

#[test]
fn riemann_dirichlet_series_matches_hurwitz() {
    let s = Complex64::new(3.0, 2.0);
    let v = matsumoto_eval(&EulerProductSpec::riemann(), s, MatsumotoMode::DirichletSum { terms: 10_000 }).unwrap();
    let z = hurwitz_zeta(s, 1.0).unwrap();
    assert!((v.value - z).norm() <= v.tail_bound);
}
