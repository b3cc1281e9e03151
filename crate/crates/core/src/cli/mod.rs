//! Batch front-end: one experiment per invocation, driven by a TOML
//! configuration, with a TOML summary and comma-separated dumps.

pub mod config;
mod plot;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parameters::{check_admissibility, AdmissibilityReport};
use crate::scanner::{
    grid_compact, hurwitz_ambient, make_target, scan_density, scan_profile, ComponentEcho, ComponentId,
    ComponentSetup, CompactSetGrid, DensityLevel, Histogram, HitDetail, PhiMethod, ScanOptions,
};
use crate::serde_util::sig12;
use crate::smoothing::{phi_n, zeta_n, SmoothingParams};
use crate::torus_lab::{
    compare_distributions_with, discrepancy_table, random_character, weyl_sum, weyl_sum_closed_form, DiscrepancyRow,
    MomentReport,
};
use crate::zeta_kernels::{
    dirichlet_coefficients, matsumoto_eval, mean_square_on_line, periodic_hurwitz_zeta, EulerProductSpec,
    MatsumotoMode,
};

pub use config::*;
pub use plot::{emit_plot_data, per_k_table, PlotKind, PlotSource, SmoothingRow};

/// Environment variable with the default worker count.
pub const WORKERS_ENV: &str = "ZETALAB_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Subcommand)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Evaluate phi or a periodic Hurwitz function at points.
    Eval,
    /// Smoothed sums against the functions they approximate.
    Smooth,
    /// Rank condition and integer-relation screen of a collection.
    Admissibility,
    /// Weyl sums, discrepancies and moment comparison on the torus.
    Torus,
    /// Mean square on a vertical line.
    Meanvalue,
    /// Density of approximating shifts.
    Scan,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Smooth => "smooth",
            Command::Admissibility => "admissibility",
            Command::Torus => "torus",
            Command::Meanvalue => "meanvalue",
            Command::Scan => "scan",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "zetalab", version, about = "Experiments on joint universality of zeta-functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Configuration file (TOML); defaults are used when omitted.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory for the summary and dumps; the summary goes to stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Print the default configuration of the subcommand and exit.
    #[arg(long, global = true)]
    pub dump_default_config: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunManifest {
    pub command: Command,
    pub config: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub workers: usize,
}

impl RunManifest {
    pub fn new(command: Command) -> Self {
        RunManifest { command, config: None, out: None, seed: 1, workers: default_workers() }
    }
}

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    ConfigError = 2,
    Inadmissible = 3,
    EvaluatorError = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Config(_)
            | Error::Io(_)
            | Error::InvalidInput(_)
            | Error::ShapeOutsideStrip(_)
            | Error::Nonvanishing(_)
            | Error::KindMismatch(_)
            | Error::BoundMismatch(_) => ExitStatus::ConfigError,
            Error::Inadmissible(_) => ExitStatus::Inadmissible,
            _ => ExitStatus::EvaluatorError,
        }
    }
}

/// Summary text plus named dumps.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub status: ExitStatus,
    pub summary: String,
    pub dumps: Vec<(String, String)>,
}

#[derive(Serialize)]
struct Header<'a> {
    command: &'a str,
    seed: u64,
    config: String,
}

#[derive(Serialize)]
struct Record<'a, T> {
    run: Header<'a>,
    result: T,
}

fn round_numbers(v: &mut toml::Value) {
    match v {
        toml::Value::Float(x) => *x = sig12(*x),
        toml::Value::Array(a) => a.iter_mut().for_each(round_numbers),
        toml::Value::Table(t) => t.iter_mut().for_each(|(_, x)| round_numbers(x)),
        _ => {}
    }
}

/// Renders a summary record with every real at 12 significant digits.
fn render_summary<T: Serialize>(m: &RunManifest, result: &T) -> Result<String> {
    let config = m.config.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "default".into());
    let rec = Record { run: Header { command: m.command.name(), seed: m.seed, config }, result };
    let mut v = toml::Value::try_from(&rec).map_err(|e| Error::Config(e.to_string()))?;
    round_numbers(&mut v);
    toml::to_string(&v).map_err(|e| Error::Config(e.to_string()))
}

fn load<T: serde::de::DeserializeOwned + Default>(m: &RunManifest) -> Result<T> {
    match &m.config {
        None => Ok(T::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            parse_config(&text)
        }
    }
}

/// Default configuration document of a subcommand.
pub fn default_config_text(command: Command) -> Result<String> {
    match command {
        Command::Eval => render_config(&EvalConfig::default()),
        Command::Smooth => render_config(&SmoothConfig::default()),
        Command::Admissibility => render_config(&AdmissibilityConfig::default()),
        Command::Torus => render_config(&TorusConfig::default()),
        Command::Meanvalue => render_config(&MeanValueConfig::default()),
        Command::Scan => render_config(&ScanConfig::default()),
    }
}

/// Runs the experiment named by the manifest inside a pool of `workers` threads.
pub fn execute(m: &RunManifest) -> Result<RunOutput> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(m.workers.max(1))
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    pool.install(|| match m.command {
        Command::Eval => run_eval(m, &load(m)?),
        Command::Smooth => run_smooth(m, &load(m)?),
        Command::Admissibility => run_admissibility(m, &load(m)?),
        Command::Torus => run_torus(m, &load(m)?),
        Command::Meanvalue => run_meanvalue(m, &load(m)?),
        Command::Scan => run_scan(m, &load(m)?),
    })
}

fn ok(summary: String, dumps: Vec<(String, String)>) -> Result<RunOutput> {
    Ok(RunOutput { status: ExitStatus::Ok, summary, dumps })
}

#[derive(Debug, Serialize)]
struct EvalRow {
    sigma: f64,
    t: f64,
    re: f64,
    im: f64,
    abs: f64,
    method: &'static str,
}

/// `phi(s)` through the continuation when there is one, else the Dirichlet series.
fn eval_phi(spec: &EulerProductSpec, s: Complex64, terms: usize) -> Result<(Complex64, &'static str)> {
    if spec.continuation.is_some() {
        Ok((spec.continued_eval(s)?, "continued"))
    } else {
        Ok((matsumoto_eval(spec, s, MatsumotoMode::DirichletSum { terms })?.value, "dirichlet_sum"))
    }
}

fn run_eval(m: &RunManifest, c: &EvalConfig) -> Result<RunOutput> {
    let spec = c.spec.resolve()?;
    let rows = c
        .points
        .iter()
        .map(|&[sigma, t]| {
            let s = Complex64::new(sigma, t);
            let (v, method) = match c.function {
                EvalFunction::Phi => eval_phi(&spec, s, c.terms)?,
                EvalFunction::PeriodicHurwitz => {
                    (periodic_hurwitz_zeta(s, c.alpha.value(), &c.sequence)?, "euler_maclaurin")
                }
            };
            Ok(EvalRow { sigma, t, re: v.re, im: v.im, abs: v.norm(), method })
        })
        .collect::<Result<Vec<_>>>()?;
    #[derive(Serialize)]
    struct Out<'a> {
        function: EvalFunction,
        spec: &'a str,
        values: Vec<EvalRow>,
    }
    ok(render_summary(m, &Out { function: c.function, spec: &spec.label, values: rows })?, vec![])
}

fn run_smooth(m: &RunManifest, c: &SmoothConfig) -> Result<RunOutput> {
    let spec = c.spec.resolve()?;
    let s = Complex64::new(c.s[0], c.s[1]);
    let (phi_ref, _) = eval_phi(&spec, s, c.reference_terms)?;
    let hz_ref = match &c.hurwitz {
        Some(h) => Some(periodic_hurwitz_zeta(s, h.alpha.value(), &h.sequence)?),
        None => None,
    };
    let largest = c.ns.iter().copied().max().ok_or_else(|| Error::Config("ns is empty".into()))?;
    let coeffs = dirichlet_coefficients(&spec, SmoothingParams::new(largest, c.sigma0_star)?.required_terms())?;
    let rows = c
        .ns
        .iter()
        .map(|&n| {
            let params = SmoothingParams::new(n, c.sigma0_star)?;
            let phi_error = (phi_n(s, &coeffs, &params, None)? - phi_ref).norm();
            let hurwitz_error = match (&c.hurwitz, hz_ref) {
                (Some(h), Some(r)) => Some((zeta_n(s, h.alpha.value(), &h.sequence, &params, None)? - r).norm()),
                _ => None,
            };
            Ok(SmoothingRow { n, phi_error, hurwitz_error })
        })
        .collect::<Result<Vec<_>>>()?;
    let csv = emit_plot_data(PlotSource::Smoothing(&rows), PlotKind::SmoothingErrorVsN)?;
    #[derive(Serialize)]
    struct Out<'a> {
        spec: &'a str,
        sigma: f64,
        t: f64,
        sigma0_star: f64,
        rows: &'a [SmoothingRow],
    }
    let out = Out { spec: &spec.label, sigma: c.s[0], t: c.s[1], sigma0_star: c.sigma0_star, rows: &rows };
    ok(render_summary(m, &out)?, vec![(PlotKind::SmoothingErrorVsN.file_name().into(), csv)])
}

fn run_admissibility(m: &RunManifest, c: &AdmissibilityConfig) -> Result<RunOutput> {
    let collection = c.collection.resolve()?;
    let report = check_admissibility(&collection, &c.relation)?;
    let status = if report.admissible { ExitStatus::Ok } else { ExitStatus::Inadmissible };
    #[derive(Serialize)]
    struct Out<'a> {
        collection: &'a str,
        settings: crate::parameters::RelationSettings,
        report: &'a AdmissibilityReport,
    }
    let label = collection.label().unwrap_or("inline");
    let summary = render_summary(m, &Out { collection: label, settings: c.relation, report: &report })?;
    Ok(RunOutput { status, summary, dumps: vec![] })
}

#[derive(Debug, Serialize)]
struct WeylRow {
    theta: f64,
    weyl_re: f64,
    weyl_im: f64,
    closed_re: f64,
    closed_im: f64,
    error: f64,
}

fn run_torus(m: &RunManifest, c: &TorusConfig) -> Result<RunOutput> {
    let collection = c.collection.resolve()?;
    let table: Vec<DiscrepancyRow> = discrepancy_table(&collection, &c.primes, &c.ns)?;
    let mut rng = ChaCha8Rng::seed_from_u64(m.seed);
    let weyl = (0..c.characters)
        .map(|_| {
            let chi = random_character(&mut rng, &collection, 30, 10);
            let theta = chi.theta(&collection)?;
            let w = weyl_sum(&chi, c.weyl_n, &collection)?;
            let z = weyl_sum_closed_form(theta, c.weyl_n);
            Ok(WeylRow { theta, weyl_re: w.re, weyl_im: w.im, closed_re: z.re, closed_im: z.im, error: (w - z).norm() })
        })
        .collect::<Result<Vec<_>>>()?;
    let moments: Option<MomentReport> = match &c.moments {
        Some(mc) => Some(compare_distributions_with(&collection, &mc.spec.resolve()?, &mc.settings(m.seed))?),
        None => None,
    };
    let csv = emit_plot_data(PlotSource::Discrepancy(&table), PlotKind::DiscrepancyVsN)?;
    #[derive(Serialize)]
    struct Out<'a> {
        collection: &'a str,
        weyl_n: u64,
        discrepancy: &'a [DiscrepancyRow],
        weyl: Vec<WeylRow>,
        #[serde(skip_serializing_if = "Option::is_none")]
        moments: Option<MomentReport>,
    }
    let label = collection.label().unwrap_or("inline");
    let out = Out { collection: label, weyl_n: c.weyl_n, discrepancy: &table, weyl, moments };
    ok(render_summary(m, &out)?, vec![(PlotKind::DiscrepancyVsN.file_name().into(), csv)])
}

#[derive(Debug, Serialize)]
struct MeanRow {
    t_max: f64,
    panels: usize,
    mean_square: f64,
    ratio_to_diagonal: f64,
    resolution_warning: bool,
}

fn run_meanvalue(m: &RunManifest, c: &MeanValueConfig) -> Result<RunOutput> {
    let spec = c.spec.resolve()?;
    let coeffs = dirichlet_coefficients(&spec, c.terms)?;
    let diagonal: f64 =
        coeffs.values().iter().enumerate().map(|(i, a)| a.norm_sqr() * ((i + 1) as f64).powf(-2.0 * c.sigma0)).sum();
    let evaluator = |s: Complex64| eval_phi(&spec, s, c.terms).map(|(v, _)| v);
    let rows = c
        .t_max
        .iter()
        .map(|&t| {
            let panels = ((t * c.panels_per_unit).ceil() as usize).max(100);
            let ms = mean_square_on_line(&evaluator, c.sigma0, t, panels)?;
            Ok(MeanRow {
                t_max: t,
                panels,
                mean_square: ms.value,
                ratio_to_diagonal: ms.value / diagonal,
                resolution_warning: ms.resolution_warning,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    #[derive(Serialize)]
    struct Out<'a> {
        spec: &'a str,
        sigma0: f64,
        diagonal_sum: f64,
        rows: Vec<MeanRow>,
    }
    ok(render_summary(m, &Out { spec: &spec.label, sigma0: c.sigma0, diagonal_sum: diagonal, rows })?, vec![])
}

fn component_setup(
    component: ComponentId,
    cfg: &ComponentConfig,
    ambient: &crate::zeta_kernels::StripRegion,
) -> Result<ComponentSetup> {
    let grid: CompactSetGrid = grid_compact(cfg.shape, cfg.resolution, ambient)?;
    let target = make_target(cfg.target.kind.clone(), cfg.target.nonvanishing_required, Some(&grid))?;
    Ok(ComponentSetup { component, grid, target })
}

/// Scan summary without the per-shift array, which goes to a dump.
#[derive(Debug, Serialize)]
struct ScanSummary<'a> {
    collection: &'a str,
    spec: &'a str,
    mode: &'a str,
    n: usize,
    epsilon: f64,
    hit_count: usize,
    density: f64,
    phi_method: PhiMethod,
    override_admissibility: bool,
    levels: Vec<DensityLevel>,
    components: &'a [ComponentEcho],
    histogram: Histogram,
    #[serde(skip_serializing_if = "Option::is_none")]
    admissibility: Option<&'a AdmissibilityReport>,
    hits: &'a [HitDetail],
}

fn run_scan(m: &RunManifest, c: &ScanConfig) -> Result<RunOutput> {
    let mut collection = c.collection.resolve()?;
    if c.mode == Some(ModeOverride::PerFamily) {
        collection = collection.as_per_family()?;
    }
    let spec = c.spec.resolve()?;
    let epsilon = *c.epsilons.first().ok_or_else(|| Error::Config("epsilons is empty".into()))?;
    let mut setups = Vec::new();
    if let Some(phi) = &c.phi {
        setups.push(component_setup(ComponentId::Phi, phi, &c.phi_method.ambient(&spec)?)?);
    }
    for h in &c.hurwitz {
        let id = ComponentId::Hurwitz { family: h.family, sequence: h.sequence };
        setups.push(component_setup(id, &h.setup, &hurwitz_ambient())?);
    }
    let report = if c.override_admissibility { None } else { Some(check_admissibility(&collection, &c.relation)?) };
    let options = ScanOptions { epsilon, n: c.n, phi_method: c.phi_method, override_admissibility: c.override_admissibility };
    let result = scan_density(&collection, &spec, &setups, &options, report.as_ref())?;
    let src = PlotSource::Scan { result: &result, epsilons: &c.epsilons, bins: c.bins };
    let dumps = vec![
        ("per_k.csv".to_string(), per_k_table(&result)),
        (PlotKind::DensityVsEps.file_name().into(), emit_plot_data(src, PlotKind::DensityVsEps)?),
        (PlotKind::SupnormHistogram.file_name().into(), emit_plot_data(src, PlotKind::SupnormHistogram)?),
    ];
    let summary = ScanSummary {
        collection: collection.label().unwrap_or("inline"),
        spec: &spec.label,
        mode: &result.mode,
        n: result.n,
        epsilon: result.epsilon,
        hit_count: result.hit_count,
        density: result.density,
        phi_method: result.phi_method,
        override_admissibility: result.override_admissibility,
        levels: result.levels(&c.epsilons),
        components: &result.components,
        histogram: scan_profile(&result, c.bins)?,
        admissibility: report.as_ref(),
        hits: &result.hits,
    };
    ok(render_summary(m, &summary)?, dumps)
}

/// Structured diagnostic of a failed run.
pub fn error_record(m: &RunManifest, e: &Error) -> String {
    #[derive(Serialize)]
    struct Diag<'a> {
        command: &'a str,
        seed: u64,
        exit_code: i32,
        message: String,
    }
    let d = Diag { command: m.command.name(), seed: m.seed, exit_code: ExitStatus::of_error(e).code(), message: e.to_string() };
    #[derive(Serialize)]
    struct Wrap<'a> {
        error: Diag<'a>,
    }
    toml::to_string(&Wrap { error: d }).unwrap_or_else(|_| format!("[error]\nmessage = {:?}\n", e.to_string()))
}

fn write_outputs(m: &RunManifest, out: &RunOutput) -> Result<()> {
    match &m.out {
        None => print!("{}", out.summary),
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join("summary.toml"), &out.summary)?;
            for (name, text) in &out.dumps {
                std::fs::write(dir.join(name), text)?;
            }
        }
    }
    Ok(())
}

/// Executes the manifest, writes its outputs and returns the exit code.
pub fn run(m: &RunManifest) -> i32 {
    let result = execute(m).and_then(|out| write_outputs(m, &out).map(|_| out.status));
    match result {
        Ok(status) => status.code(),
        Err(e) => {
            let diag = error_record(m, &e);
            eprint!("{diag}");
            if let Some(dir) = &m.out {
                let _ = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(dir.join("error.toml"), &diag));
            }
            ExitStatus::of_error(&e).code()
        }
    }
}

/// Entry point of the command-line tool.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::ConfigError.code() } else { 0 };
        }
    };
    if cli.dump_default_config {
        return match default_config_text(cli.command) {
            Ok(text) => {
                print!("{text}");
                0
            }
            Err(e) => {
                eprintln!("{e}");
                ExitStatus::ConfigError.code()
            }
        };
    }
    let manifest = RunManifest {
        command: cli.command,
        config: cli.config,
        out: cli.out,
        seed: cli.seed,
        workers: cli.workers.filter(|&w| w > 0).unwrap_or_else(default_workers),
    };
    run(&manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manifest(command: Command, config: Option<&str>) -> (RunManifest, Option<tempfile::TempDir>) {
        let dir = config.map(|text| {
            let d = tempfile::tempdir().unwrap();
            std::fs::write(d.path().join("c.toml"), text).unwrap();
            d
        });
        let m = RunManifest {
            command,
            config: dir.as_ref().map(|d| d.path().join("c.toml")),
            out: None,
            seed: 7,
            workers: 1,
        };
        (m, dir)
    }

    #[test]
    fn default_configs_round_trip() {
        let e: EvalConfig = parse_config(&default_config_text(Command::Eval).unwrap()).unwrap();
        assert_eq!(e, EvalConfig::default());
        let s: SmoothConfig = parse_config(&default_config_text(Command::Smooth).unwrap()).unwrap();
        assert_eq!(s, SmoothConfig::default());
        let a: AdmissibilityConfig = parse_config(&default_config_text(Command::Admissibility).unwrap()).unwrap();
        assert_eq!(a, AdmissibilityConfig::default());
        let t: TorusConfig = parse_config(&default_config_text(Command::Torus).unwrap()).unwrap();
        assert_eq!(t, TorusConfig::default());
        let mv: MeanValueConfig = parse_config(&default_config_text(Command::Meanvalue).unwrap()).unwrap();
        assert_eq!(mv, MeanValueConfig::default());
        let sc: ScanConfig = parse_config(&default_config_text(Command::Scan).unwrap()).unwrap();
        assert_eq!(sc, ScanConfig::default());
        let selfie = ScanConfig::self_shift_example(10);
        assert_eq!(parse_config::<ScanConfig>(&render_config(&selfie).unwrap()).unwrap(), selfie);
    }

    #[test]
    fn eval_zeta_two() {
        let (m, _d) = manifest(Command::Eval, Some("points = [[2.0, 0.0]]"));
        let out = execute(&m).unwrap();
        let v: toml::Value = toml::from_str(&out.summary).unwrap();
        let re = v["result"]["values"][0]["re"].as_float().unwrap();
        assert!((re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-8);
        assert_eq!(v["run"]["seed"].as_integer(), Some(7));
    }

    #[test]
    fn unknown_field_is_config_error() {
        let (m, _d) = manifest(Command::Eval, Some("pointz = 3"));
        assert_eq!(run(&m), 2);
        let (m, _d) = manifest(Command::Scan, Some("collection = \"nope\""));
        assert_eq!(run(&m), 2);
    }

    #[test]
    fn scan_self_shift_is_reproducible() {
        let cfg = render_config(&ScanConfig::self_shift_example(100)).unwrap();
        let (m, _d) = manifest(Command::Scan, Some(&cfg));
        let a = execute(&m).unwrap();
        let b = execute(&RunManifest { workers: 3, ..m.clone() }).unwrap();
        assert_eq!(a, b);
        let v: toml::Value = toml::from_str(&a.summary).unwrap();
        assert!(v["result"]["density"].as_float().unwrap() >= 1.0 / 101.0);
        assert_eq!(a.dumps[0].1.lines().count(), 102);
    }

    #[test]
    fn inadmissible_exit_code() {
        let cfg = r#"
            [collection]
            [[collection.family]]
            alpha = 0.5
            sequences = [{ coeffs = [1.0] }]
            [collection.differences]
            mode = "equal"
            h = 1
        "#;
        let (m, _d) = manifest(Command::Admissibility, Some(cfg));
        assert_eq!(run(&m), 3);
    }

    #[test]
    fn cli_parsing() {
        let cli = Cli::try_parse_from(["zetalab", "scan", "--seed", "3", "--workers", "2"]).unwrap();
        assert_eq!(cli.command, Command::Scan);
        assert_eq!((cli.seed, cli.workers), (3, Some(2)));
        assert_eq!(main_with_args(["zetalab", "eval", "--dump-default-config"]), 0);
        assert_eq!(main_with_args(["zetalab", "frobnicate"]), 2);
    }
}
