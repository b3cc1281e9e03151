//! Hurwitz, periodic Hurwitz and Matsumoto zeta values at a few points.

use num_complex::Complex64;
use zetalab::zeta_kernels::{
    hurwitz_zeta, matsumoto_eval, periodic_hurwitz_zeta, EulerProductSpec, MatsumotoMode, PeriodicSequence,
};

fn main() -> zetalab::Result<()> {
    let alternating = PeriodicSequence::from_real(&[1.0, -1.0])?;
    for s in [Complex64::new(2.0, 0.0), Complex64::new(0.5, 14.134725), Complex64::new(0.75, 30.0)] {
        let z = hurwitz_zeta(s, 1.0)?;
        let h = hurwitz_zeta(s, 1.0 / 3.0)?;
        let p = periodic_hurwitz_zeta(s, 1.0 / std::f64::consts::PI, &alternating)?;
        println!("s = {s}: zeta {z:.10}, zeta(s, 1/3) {h:.10}, alternating {p:.10}");
    }
    let s = Complex64::new(2.5, 1.0);
    for spec in [EulerProductSpec::riemann(), EulerProductSpec::zeta_squared()] {
        let euler = matsumoto_eval(&spec, s, MatsumotoMode::EulerProduct { primes_up_to: 10_000 })?;
        let series = matsumoto_eval(&spec, s, MatsumotoMode::DirichletSum { terms: 10_000 })?;
        println!(
            "{} at {s}: product {:.10} (tail <= {:.1e}), series {:.10} (tail <= {:.1e})",
            spec.label, euler.value, euler.tail_bound, series.value, series.tail_bound
        );
    }
    Ok(())
}
