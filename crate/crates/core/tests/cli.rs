use std::path::Path;
use std::process::{Command, Output};

use zetalab::cli::{
    parse_config, AdmissibilityConfig, EvalConfig, MeanValueConfig, ScanConfig, SmoothConfig, TorusConfig,
};

fn zetalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetalab")).args(args).env_remove("ZETALAB_WORKERS").output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn eval_prints_zeta_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "eval.toml", "points = [[2.0, 0.0]]\n");
    let out = zetalab(&["eval", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1.64493406685"), "{text}");
    assert!(text.contains("[run]"));
}

#[test]
fn admissibility_of_a_preset_exits_zero() {
    let out = zetalab(&["admissibility"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("admissible = true"), "{text}");
}

#[test]
fn bad_config_exits_two_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.toml", "no_such_field = 1\n");
    let out_dir = dir.path().join("out");
    let out = zetalab(&["scan", "--config", &cfg, "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[error]"));
    assert!(read(&out_dir, "error.toml").contains("no_such_field"));
}

#[test]
fn self_shift_scan_dumps_every_shift() {
    let dir = tempfile::tempdir().unwrap();
    let text = toml::to_string(&ScanConfig::self_shift_example(100)).unwrap();
    let cfg = write(dir.path(), "scan.toml", &text);
    let out_dir = dir.path().join("out");
    let out = zetalab(&["scan", "--config", &cfg, "--out", out_dir.to_str().unwrap(), "--workers", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let per_k = read(&out_dir, "per_k.csv");
    assert_eq!(per_k.lines().count(), 102);
    assert!(per_k.lines().nth(1).unwrap().starts_with("0,0"));
    let summary: toml::Value = toml::from_str(&read(&out_dir, "summary.toml")).unwrap();
    let density = summary["result"]["density"].as_float().unwrap();
    assert!(density >= 1.0 / 101.0);
}

fn dumped<T: serde::de::DeserializeOwned>(cmd: &str) -> T {
    let out = zetalab(&[cmd, "--dump-default-config"]);
    assert_eq!(out.status.code(), Some(0), "{cmd}");
    parse_config(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

#[test]
fn default_configs_round_trip() {
    assert_eq!(dumped::<EvalConfig>("eval"), EvalConfig::default());
    assert_eq!(dumped::<SmoothConfig>("smooth"), SmoothConfig::default());
    assert_eq!(dumped::<AdmissibilityConfig>("admissibility"), AdmissibilityConfig::default());
    assert_eq!(dumped::<TorusConfig>("torus"), TorusConfig::default());
    assert_eq!(dumped::<MeanValueConfig>("meanvalue"), MeanValueConfig::default());
    assert_eq!(dumped::<ScanConfig>("scan"), ScanConfig::default());
    // a dumped document runs as a config file
    let dir = tempfile::tempdir().unwrap();
    let text = String::from_utf8(zetalab(&["eval", "--dump-default-config"]).stdout).unwrap();
    let cfg = write(dir.path(), "eval.toml", &text);
    assert_eq!(zetalab(&["eval", "--config", &cfg]).status.code(), Some(0));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = ScanConfig::self_shift_example(60);
    config.epsilons = vec![0.5, 1e-9];
    let cfg = write(dir.path(), "scan.toml", &toml::to_string(&config).unwrap());
    let runs: Vec<_> = ["a", "b"]
        .iter()
        .zip(["1", "3"])
        .map(|(name, workers)| {
            let d = dir.path().join(name);
            let out = zetalab(&["scan", "--config", &cfg, "--out", d.to_str().unwrap(), "--workers", workers]);
            assert_eq!(out.status.code(), Some(0));
            d
        })
        .collect();
    for file in ["per_k.csv", "density_vs_eps.csv", "supnorm_histogram.csv"] {
        assert_eq!(read(&runs[0], file), read(&runs[1], file), "{file}");
    }
    // the run header records no worker count
    assert_eq!(read(&runs[0], "summary.toml"), read(&runs[1], "summary.toml"));
}

#[test]
fn torus_dumps_decreasing_discrepancy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "torus.toml",
        "primes = [2]\ncharacters = 2\n[moments]\nn_shifts = 1000\nmc_samples = 1000\n",
    );
    let out_dir = dir.path().join("out");
    let out = zetalab(&["torus", "--config", &cfg, "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = read(&out_dir, "discrepancy_vs_N.csv");
    let d: Vec<f64> = csv.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(d.len(), 3);
    assert!(d[1] < d[0] && d[2] < d[1], "{d:?}");
}
