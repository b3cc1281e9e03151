//! Smoothed sums `phi_n` and `zeta_n` converging to their targets inside the strip.

use num_complex::Complex64;
use zetalab::smoothing::{phi_n, zeta_n, SmoothingParams};
use zetalab::zeta_kernels::{dirichlet_coefficients, hurwitz_zeta, EulerProductSpec, PeriodicSequence};

fn main() -> zetalab::Result<()> {
    let s = Complex64::new(0.9, 5.0);
    let alpha = 1.0 / 3.0;
    let zeta = hurwitz_zeta(s, 1.0)?;
    let hz = hurwitz_zeta(s, alpha)?;
    let largest = SmoothingParams::with_default_exponent(10_000)?;
    let coeffs = dirichlet_coefficients(&EulerProductSpec::riemann(), largest.required_terms())?;
    println!("{:>6} {:>12} {:>12}", "n", "|phi_n - zeta|", "|zeta_n - zeta(s,a)|");
    for n in [10, 100, 1000, 10_000] {
        let p = SmoothingParams::with_default_exponent(n)?;
        let e1 = (phi_n(s, &coeffs, &p, None)? - zeta).norm();
        let e2 = (zeta_n(s, alpha, &PeriodicSequence::ones(), &p, None)? - hz).norm();
        println!("{n:>6} {e1:>12.3e} {e2:>12.3e}");
    }
    Ok(())
}
