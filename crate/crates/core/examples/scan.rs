//! Density of shifts `k` approximating `exp(0.1 s)` by `zeta(s + ik)` on a small disk.

use num_complex::Complex64;
use zetalab::parameters::{check_admissibility, preset, RelationSettings};
use zetalab::scanner::{
    grid_compact, make_target, scan_density, scan_profile, ComponentId, ComponentSetup, PhiMethod, ScanOptions, Shape,
    TargetKind,
};
use zetalab::zeta_kernels::EulerProductSpec;

fn main() -> zetalab::Result<()> {
    let spec = EulerProductSpec::riemann();
    let collection = preset("pi-single")?;
    let report = check_admissibility(&collection, &RelationSettings::default())?;
    let grid = grid_compact(Shape::disk(Complex64::new(0.85, 0.0), 0.03), 0.01, &PhiMethod::Continued.ambient(&spec)?)?;
    let target = make_target(
        TargetKind::ExpPolynomial { inner: vec![Complex64::new(0.0, 0.0), Complex64::new(0.1, 0.0)] },
        true,
        Some(&grid),
    )?;
    let setups = [ComponentSetup { component: ComponentId::Phi, grid, target }];
    let options = ScanOptions { epsilon: 0.8, n: 5_000, phi_method: PhiMethod::Continued, override_admissibility: false };
    let r = scan_density(&collection, &spec, &setups, &options, Some(&report))?;
    for level in r.levels(&[0.2, 0.5, 0.8, 1.0]) {
        println!("eps {:.1}: {} hits, density {:.4}", level.epsilon, level.hit_count, level.density);
    }
    let h = scan_profile(&r, 10)?;
    for (i, count) in h.counts.iter().enumerate() {
        println!("[{:.3}, {:.3}) {count}", h.edges[i], h.edges[i + 1]);
    }
    Ok(())
}
