//! Weyl sums, discrepancies and the moment comparison on the torus.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zetalab::parameters::preset;
use zetalab::torus_lab::{compare_distributions, discrepancy_table, random_character, weyl_sum, weyl_sum_closed_form};
use zetalab::zeta_kernels::EulerProductSpec;

fn main() -> zetalab::Result<()> {
    let c = preset("two-family")?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        let chi = random_character(&mut rng, &c, 30, 10);
        let w = weyl_sum(&chi, 10_000, &c)?;
        let z = weyl_sum_closed_form(chi.theta(&c)?, 10_000);
        println!("chi {:?} {:?}: |W| = {:.3e}, error {:.1e}", chi.k_p, chi.l_mf, w.norm(), (w - z).norm());
    }
    for row in discrepancy_table(&c, &[2, 3], &[1_000, 10_000, 100_000])? {
        println!("p = {} N = {:>6}: D* = {:.3e}", row.prime, row.n, row.discrepancy);
    }
    let report = compare_distributions(&c, &EulerProductSpec::riemann(), 1.5, 5_000, 5_000, 10, 1)?;
    for m in &report.components {
        println!(
            "{:<10} E shift {:.4} mc {:.4} oracle {:.4}; E|.|^2 shift {:.4} mc {:.4} oracle {:.4}",
            m.label, m.mean_shift.re, m.mean_mc.re, m.oracle_mean.re, m.second_moment_shift, m.second_moment_mc,
            m.oracle_second_moment
        );
    }
    println!("all within tolerance: {}", report.all_ok);
    Ok(())
}
