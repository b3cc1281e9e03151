use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::{CompactSetGrid, Shape};
use super::target::{ComponentId, TargetFunction, TargetKind};
use crate::error::{Error, Result};
use crate::parameters::{AdmissibilityReport, HurwitzCollection};
use crate::smoothing::{SmoothedSeries, SmoothingParams, DEFAULT_SIGMA0_STAR};
use crate::zeta_kernels::{
    dirichlet_coefficients, EulerProductSpec, HurwitzGrid, PeriodicHurwitzGrid, ShiftTable, StripRegion,
};

pub const DEFAULT_EPSILONS: [f64; 4] = [0.2, 0.5, 0.8, 1.0];
pub const DEFAULT_N: usize = 100_000;
/// Hit detail is kept for this many hitting shifts.
pub const MAX_HIT_DETAIL: usize = 100;
const K_CHUNK: usize = 64;

fn default_sigma0_star() -> f64 {
    DEFAULT_SIGMA0_STAR
}

/// How the Euler-product component is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum PhiMethod {
    /// Analytic continuation (presets only).
    Continued,
    /// Smoothed sum `phi_n`.
    Smoothed {
        n: usize,
        #[serde(default = "default_sigma0_star")]
        sigma0_star: f64,
    },
    /// Plain partial sum, for grids in `sigma > 1`.
    Direct { terms: usize },
}

impl PhiMethod {
    /// Strip the grid of the Euler-product component must lie in.
    pub fn ambient(&self, spec: &EulerProductSpec) -> Result<StripRegion> {
        let sigma_star = spec.sigma_star.unwrap_or(0.5);
        match self {
            PhiMethod::Continued => {
                if spec.continuation.is_none() {
                    return Err(Error::Config(format!(
                        "spec '{}' has no continuation; use the smoothed or direct method",
                        spec.label
                    )));
                }
                StripRegion::new(sigma_star, 1.0, f64::INFINITY)
            }
            PhiMethod::Smoothed { .. } => StripRegion::new(sigma_star, f64::INFINITY, f64::INFINITY),
            PhiMethod::Direct { .. } => StripRegion::new(1.0, f64::INFINITY, f64::INFINITY),
        }
    }
}

/// Strip of the Hurwitz components, `D(1/2, 1)`.
pub fn hurwitz_ambient() -> StripRegion {
    StripRegion::critical(f64::INFINITY)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentSetup {
    pub component: ComponentId,
    pub grid: CompactSetGrid,
    pub target: TargetFunction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub epsilon: f64,
    pub n: usize,
    pub phi_method: PhiMethod,
    /// Runs without an admissible report.
    pub override_admissibility: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentEcho {
    pub component: ComponentId,
    pub h: f64,
    pub shape: Shape,
    pub resolution: f64,
    pub grid_points: usize,
    pub target: TargetKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HitDetail {
    pub k: usize,
    /// Sup distance per component, in `components` order.
    pub sups: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityLevel {
    pub epsilon: f64,
    pub hit_count: usize,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub n: usize,
    pub epsilon: f64,
    pub per_k_max_sup: Vec<f64>,
    pub hit_count: usize,
    pub density: f64,
    pub mode: String,
    pub phi_method: PhiMethod,
    pub override_admissibility: bool,
    pub components: Vec<ComponentEcho>,
    /// First [`MAX_HIT_DETAIL`] hitting shifts.
    pub hits: Vec<HitDetail>,
}

impl ScanResult {
    /// Hits and density at another threshold.
    pub fn level(&self, epsilon: f64) -> DensityLevel {
        let hit_count = self.per_k_max_sup.iter().filter(|&&d| d < epsilon).count();
        DensityLevel { epsilon, hit_count, density: hit_count as f64 / self.per_k_max_sup.len() as f64 }
    }

    pub fn levels(&self, epsilons: &[f64]) -> Vec<DensityLevel> {
        epsilons.iter().map(|&e| self.level(e)).collect()
    }

    /// Density of hits among `k` in `range`.
    pub fn density_in(&self, range: std::ops::Range<usize>, epsilon: f64) -> f64 {
        let slice = &self.per_k_max_sup[range];
        slice.iter().filter(|&&d| d < epsilon).count() as f64 / slice.len() as f64
    }
}

/// Equally spaced histogram of the per-shift distances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    /// `bins + 1` edges from 0 to the largest distance.
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

pub fn scan_profile(result: &ScanResult, bins: usize) -> Result<Histogram> {
    if bins < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 bins, got {bins}")));
    }
    let max = result.per_k_max_sup.iter().copied().fold(0.0, f64::max);
    let edges = (0..=bins).map(|i| max * i as f64 / bins as f64).collect();
    let mut counts = vec![0; bins];
    for &d in &result.per_k_max_sup {
        let b = if max > 0.0 { ((d / max * bins as f64) as usize).min(bins - 1) } else { 0 };
        counts[b] += 1;
    }
    Ok(Histogram { edges, counts })
}

/// Evaluator of one component on a fixed point set at vertical shifts.
#[derive(Debug, Clone)]
pub enum GridEvaluator {
    Zeta(HurwitzGrid),
    Periodic(PeriodicHurwitzGrid),
    Series(ShiftTable),
}

impl GridEvaluator {
    /// Writes `F(s_g + i tau)` into `out`.
    pub fn eval_shift(&self, tau: f64, out: &mut [Complex64]) -> Result<()> {
        match self {
            GridEvaluator::Zeta(g) => g.eval_shift(tau, out),
            GridEvaluator::Periodic(g) => g.eval_shift(tau, out),
            GridEvaluator::Series(t) => {
                t.eval_shift(tau, t.len(), out);
                Ok(())
            }
        }
    }

    pub fn build(
        component: ComponentId,
        collection: &HurwitzCollection,
        spec: &EulerProductSpec,
        method: &PhiMethod,
        points: &[Complex64],
        max_shift: f64,
    ) -> Result<Self> {
        match component {
            ComponentId::Phi => match *method {
                PhiMethod::Continued => {
                    method.ambient(spec)?;
                    Ok(GridEvaluator::Zeta(HurwitzGrid::new(1.0, points, max_shift)?))
                }
                PhiMethod::Smoothed { n, sigma0_star } => {
                    let params = SmoothingParams::new(n, sigma0_star)?;
                    let coeffs = dirichlet_coefficients(spec, params.required_terms())?;
                    Ok(GridEvaluator::Series(SmoothedSeries::phi(&coeffs, &params)?.shift_table(points)))
                }
                PhiMethod::Direct { terms } => {
                    if let Some(p) = points.iter().find(|p| !(p.re > 1.0)) {
                        return Err(Error::Convergence { sigma: p.re });
                    }
                    let coeffs = dirichlet_coefficients(spec, terms)?;
                    Ok(GridEvaluator::Series(SmoothedSeries::truncated(&coeffs).shift_table(points)))
                }
            },
            ComponentId::Hurwitz { family, sequence } => {
                let fam = collection.families().get(family).ok_or_else(|| {
                    Error::InvalidInput(format!("collection has no family {}", family + 1))
                })?;
                let seq = fam.sequences.get(sequence).ok_or_else(|| {
                    Error::InvalidInput(format!("family {} has no sequence {}", family + 1, sequence + 1))
                })?;
                Ok(GridEvaluator::Periodic(PeriodicHurwitzGrid::new(fam.alpha.value(), seq, points, max_shift)?))
            }
        }
    }
}

/// Difference attached to a component.
pub fn component_difference(collection: &HurwitzCollection, component: ComponentId) -> Result<f64> {
    match component {
        ComponentId::Phi => Ok(collection.h1().value()),
        ComponentId::Hurwitz { family, sequence } => {
            if family >= collection.r() || sequence >= collection.l(family) {
                return Err(Error::InvalidInput(format!("collection has no component {component}")));
            }
            Ok(collection.h2(family, sequence).value())
        }
    }
}

fn check_admissible(report: Option<&AdmissibilityReport>, override_flag: bool) -> Result<()> {
    if override_flag {
        return Ok(());
    }
    match report {
        Some(r) if r.admissible => Ok(()),
        Some(r) => Err(Error::Inadmissible(format!(
            "rank check {}, relation found {}",
            if r.rank_ok { "passed" } else { "failed" },
            r.relation.found
        ))),
        None => Err(Error::Inadmissible("no admissibility report and no override".into())),
    }
}

struct Prepared {
    evaluator: GridEvaluator,
    target: Vec<Complex64>,
    h: f64,
}

fn prepare(
    setup: &ComponentSetup,
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    options: &ScanOptions,
) -> Result<Prepared> {
    let ambient = match setup.component {
        ComponentId::Phi => options.phi_method.ambient(spec)?,
        ComponentId::Hurwitz { .. } => hurwitz_ambient(),
    };
    setup.grid.check_inside(&ambient)?;
    let h = component_difference(collection, setup.component)?;
    let pts = setup.grid.complex_points();
    let evaluator =
        GridEvaluator::build(setup.component, collection, spec, &options.phi_method, &pts, options.n as f64 * h)?;
    let target = setup.target.values_on(&setup.grid, |id, delta, pts| {
        let mut out = vec![Complex64::new(0.0, 0.0); pts.len()];
        if id == setup.component {
            evaluator.eval_shift(delta, &mut out)?;
        } else {
            component_difference(collection, id)?;
            GridEvaluator::build(id, collection, spec, &options.phi_method, pts, delta.abs())?
                .eval_shift(delta, &mut out)?;
        }
        Ok(out)
    })?;
    Ok(Prepared { evaluator, target, h })
}

/// For each `k = 0..=n` the largest sup distance over the constrained
/// components, each shifted by `k` times its own difference, and the density
/// of `k` with that maximum below `epsilon`.
pub fn scan_density(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    setups: &[ComponentSetup],
    options: &ScanOptions,
    admissibility: Option<&AdmissibilityReport>,
) -> Result<ScanResult> {
    check_admissible(admissibility, options.override_admissibility)?;
    if setups.is_empty() {
        return Err(Error::InvalidInput("no component is constrained".into()));
    }
    if !(options.epsilon > 0.0) {
        return Err(Error::InvalidInput(format!("epsilon = {} must be positive", options.epsilon)));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(dup) = setups.iter().find(|s| !seen.insert(s.component)) {
        return Err(Error::InvalidInput(format!("component {} constrained twice", dup.component)));
    }
    let prepared: Vec<Prepared> = setups.iter().map(|s| prepare(s, collection, spec, options)).collect::<Result<_>>()?;

    let chunks: Vec<std::ops::Range<usize>> =
        (0..=options.n).step_by(K_CHUNK).map(|a| a..(a + K_CHUNK).min(options.n + 1)).collect();
    let per_chunk: Vec<std::result::Result<Vec<Vec<f64>>, (usize, Error)>> = chunks
        .par_iter()
        .map(|range| {
            let mut bufs: Vec<Vec<Complex64>> =
                prepared.iter().map(|p| vec![Complex64::new(0.0, 0.0); p.target.len()]).collect();
            let mut rows = Vec::with_capacity(range.len());
            for k in range.clone() {
                let mut sups = Vec::with_capacity(prepared.len());
                for (p, buf) in prepared.iter().zip(bufs.iter_mut()) {
                    p.evaluator.eval_shift(k as f64 * p.h, buf).map_err(|e| (k, e))?;
                    sups.push(buf.iter().zip(&p.target).map(|(v, f)| (v - f).norm()).fold(0.0, f64::max));
                }
                rows.push(sups);
            }
            Ok(rows)
        })
        .collect();

    let mut per_k_max_sup = Vec::with_capacity(options.n + 1);
    let mut hits = Vec::new();
    let mut hit_count = 0;
    for chunk in per_chunk {
        let rows = chunk.map_err(|(k, e)| Error::Evaluator { k, source: Box::new(e) })?;
        for sups in rows {
            let k = per_k_max_sup.len();
            let m = sups.iter().copied().fold(0.0, f64::max);
            if m < options.epsilon {
                hit_count += 1;
                if hits.len() < MAX_HIT_DETAIL {
                    hits.push(HitDetail { k, sups });
                }
            }
            per_k_max_sup.push(m);
        }
    }
    let components = setups
        .iter()
        .zip(&prepared)
        .map(|(s, p)| ComponentEcho {
            component: s.component,
            h: p.h,
            shape: s.grid.shape,
            resolution: s.grid.resolution,
            grid_points: s.grid.len(),
            target: s.target.kind.clone(),
        })
        .collect();
    Ok(ScanResult {
        n: options.n,
        epsilon: options.epsilon,
        hit_count,
        density: hit_count as f64 / (options.n + 1) as f64,
        per_k_max_sup,
        mode: collection.differences().mode_name().to_string(),
        phi_method: options.phi_method,
        override_admissibility: options.override_admissibility,
        components,
        hits,
    })
}
