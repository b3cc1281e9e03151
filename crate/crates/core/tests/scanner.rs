use num_complex::Complex64;

use zetalab::parameters::preset;
use zetalab::scanner::{
    grid_compact, hurwitz_ambient, make_target, scan_density, ComponentId, ComponentSetup, PhiMethod, ScanOptions,
    ScanResult, Shape, TargetKind,
};
use zetalab::zeta_kernels::EulerProductSpec;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn scan(radius: f64, rect_hi: f64, n: usize) -> ScanResult {
    let spec = EulerProductSpec::riemann();
    let collection = preset("two-family").unwrap();
    let phi_ambient = PhiMethod::Continued.ambient(&spec).unwrap();
    let phi_grid = grid_compact(Shape::disk(c(0.8, 0.0), radius), 0.01, &phi_ambient).unwrap();
    let hz_grid = grid_compact(Shape::rectangle(0.6, rect_hi, 0.0, 0.1), 0.05, &hurwitz_ambient()).unwrap();
    let setups = vec![
        ComponentSetup {
            component: ComponentId::Phi,
            target: make_target(TargetKind::ExpPolynomial { inner: vec![c(0.0, 0.0), c(0.1, 0.0)] }, false, Some(&phi_grid))
                .unwrap(),
            grid: phi_grid,
        },
        ComponentSetup {
            component: ComponentId::Hurwitz { family: 1, sequence: 0 },
            target: make_target(TargetKind::Polynomial { coeffs: vec![c(1.0, 0.0), c(0.5, 0.0)] }, false, Some(&hz_grid))
                .unwrap(),
            grid: hz_grid,
        },
    ];
    let options = ScanOptions { epsilon: 1.0, n, phi_method: PhiMethod::Continued, override_admissibility: true };
    scan_density(&collection, &spec, &setups, &options, None).unwrap()
}

#[test]
fn density_is_monotone_in_epsilon() {
    let r = scan(0.03, 0.7, 400);
    let eps: Vec<f64> = (1..=30).map(|i| 0.1 * i as f64).collect();
    let levels = r.levels(&eps);
    for w in levels.windows(2) {
        assert!(w[1].density >= w[0].density);
        assert!(w[1].hit_count >= w[0].hit_count);
    }
    assert_eq!(levels.last().unwrap().density, r.level(3.0).density);
}

#[test]
fn density_is_monotone_under_nested_grids() {
    let big = scan(0.03, 0.7, 300);
    let small = scan(0.02, 0.65, 300);
    for (k, (s, b)) in small.per_k_max_sup.iter().zip(&big.per_k_max_sup).enumerate() {
        assert!(s <= b, "k = {k}: {s} > {b}");
    }
    for eps in [0.3, 0.6, 1.0, 2.0] {
        assert!(small.level(eps).density >= big.level(eps).density);
    }
}

#[test]
fn reruns_are_identical() {
    let a = scan(0.03, 0.7, 250);
    let b = scan(0.03, 0.7, 250);
    assert_eq!(a, b);
    // a longer scan extends the shorter one
    let c = scan(0.03, 0.7, 400);
    for (x, y) in c.per_k_max_sup.iter().zip(&a.per_k_max_sup) {
        assert!((x - y).abs() < 1e-10);
    }
}
