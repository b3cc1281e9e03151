//! Configuration documents of the subcommands. Every field has a default, so
//! an empty document runs the default experiment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parameters::{preset, HurwitzCollection, RealParam, RelationSettings};
use crate::scanner::{
    make_target, ComponentId, Shape, TargetFunction, TargetKind, DEFAULT_EPSILONS, DEFAULT_N, DEFAULT_RESOLUTION,
};
use crate::smoothing::DEFAULT_SIGMA0_STAR;
use crate::torus_lab::MomentSettings;
use crate::zeta_kernels::{EulerProductSpec, PeriodicSequence};

use num_complex::Complex64;

/// A spec given by preset name or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpecRef {
    Preset(String),
    Inline(EulerProductSpec),
}

impl SpecRef {
    pub fn resolve(&self) -> Result<EulerProductSpec> {
        match self {
            SpecRef::Preset(name) => {
                EulerProductSpec::preset(name).ok_or_else(|| Error::Config(format!("unknown spec preset '{name}'")))
            }
            SpecRef::Inline(spec) => Ok(spec.clone()),
        }
    }
}

impl Default for SpecRef {
    fn default() -> Self {
        SpecRef::Preset("riemann".into())
    }
}

/// A collection given by preset name or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CollectionRef {
    Preset(String),
    Inline(HurwitzCollection),
}

impl CollectionRef {
    pub fn resolve(&self) -> Result<HurwitzCollection> {
        match self {
            CollectionRef::Preset(name) => preset(name),
            CollectionRef::Inline(c) => Ok(c.clone()),
        }
    }
}

impl Default for CollectionRef {
    fn default() -> Self {
        CollectionRef::Preset("pi-single".into())
    }
}

fn param(text: &str) -> RealParam {
    RealParam::parse(text).expect("default parameter")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalFunction {
    /// `phi` of the spec.
    Phi,
    /// `zeta(s, alpha; B)`.
    PeriodicHurwitz,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalConfig {
    pub function: EvalFunction,
    pub spec: SpecRef,
    pub alpha: RealParam,
    pub sequence: PeriodicSequence,
    /// Dirichlet-series length used for `phi` without a continuation (`sigma > 1` only).
    pub terms: usize,
    /// Points `[sigma, t]`.
    pub points: Vec<[f64; 2]>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            function: EvalFunction::Phi,
            spec: SpecRef::default(),
            alpha: param("1"),
            sequence: PeriodicSequence::ones(),
            terms: 100_000,
            points: vec![[2.0, 0.0], [0.75, 10.0]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmoothHurwitz {
    pub alpha: RealParam,
    pub sequence: PeriodicSequence,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SmoothConfig {
    pub spec: SpecRef,
    /// Evaluation point `[sigma, t]`.
    pub s: [f64; 2],
    pub ns: Vec<usize>,
    pub sigma0_star: f64,
    /// Dirichlet-series length of the reference value when the spec has no continuation.
    pub reference_terms: usize,
    pub hurwitz: Option<SmoothHurwitz>,
}

impl Default for SmoothConfig {
    fn default() -> Self {
        SmoothConfig {
            spec: SpecRef::default(),
            s: [0.9, 5.0],
            ns: vec![10, 100, 1000],
            sigma0_star: DEFAULT_SIGMA0_STAR,
            reference_terms: 100_000,
            hurwitz: Some(SmoothHurwitz { alpha: param("1/3"), sequence: PeriodicSequence::ones() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AdmissibilityConfig {
    pub collection: CollectionRef,
    #[serde(flatten)]
    pub relation: RelationSettings,
}

impl Default for AdmissibilityConfig {
    fn default() -> Self {
        AdmissibilityConfig { collection: CollectionRef::default(), relation: RelationSettings::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MomentConfig {
    pub spec: SpecRef,
    pub sigma: f64,
    pub n_shifts: u64,
    pub mc_samples: usize,
    pub n_smooth: usize,
    pub sigma0_star: f64,
    pub tolerance_se: f64,
}

impl Default for MomentConfig {
    fn default() -> Self {
        let m = MomentSettings::default();
        MomentConfig {
            spec: SpecRef::default(),
            sigma: m.sigma,
            n_shifts: m.n_shifts,
            mc_samples: m.mc_samples,
            n_smooth: m.n_smooth,
            sigma0_star: m.sigma0_star,
            tolerance_se: m.tolerance_se,
        }
    }
}

impl MomentConfig {
    pub fn settings(&self, seed: u64) -> MomentSettings {
        MomentSettings {
            sigma: self.sigma,
            n_shifts: self.n_shifts,
            mc_samples: self.mc_samples,
            n_smooth: self.n_smooth,
            sigma0_star: self.sigma0_star,
            seed,
            tolerance_se: self.tolerance_se,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TorusConfig {
    pub collection: CollectionRef,
    pub primes: Vec<u64>,
    pub ns: Vec<u64>,
    /// Random nontrivial characters checked against the closed form.
    pub characters: usize,
    pub weyl_n: u64,
    pub moments: Option<MomentConfig>,
}

impl Default for TorusConfig {
    fn default() -> Self {
        TorusConfig {
            collection: CollectionRef::default(),
            primes: vec![2, 3, 5],
            ns: vec![1000, 10_000, 100_000],
            characters: 10,
            weyl_n: 10_000,
            moments: Some(MomentConfig::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MeanValueConfig {
    pub spec: SpecRef,
    pub sigma0: f64,
    pub t_max: Vec<f64>,
    /// Simpson panels per unit length of the segment.
    pub panels_per_unit: f64,
    /// Dirichlet-series length when the spec has no continuation (`sigma0 > 1` only),
    /// also the length of the diagonal reference sum.
    pub terms: usize,
}

impl Default for MeanValueConfig {
    fn default() -> Self {
        MeanValueConfig { spec: SpecRef::default(), sigma0: 0.75, t_max: vec![100.0, 300.0], panels_per_unit: 10.0, terms: 100_000 }
    }
}

/// One constrained component of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentConfig {
    #[serde(flatten)]
    pub shape: Shape,
    #[serde(default = "default_resolution")]
    pub resolution: f64,
    pub target: TargetFunction,
}

fn default_resolution() -> f64 {
    DEFAULT_RESOLUTION
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HurwitzComponentConfig {
    /// 0-based.
    pub family: usize,
    /// 0-based.
    pub sequence: usize,
    #[serde(flatten)]
    pub setup: ComponentConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeOverride {
    /// Rewrites equal differences as per-family ones.
    PerFamily,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    pub collection: CollectionRef,
    pub spec: SpecRef,
    /// The first value is the primary threshold of the result; all are reported.
    pub epsilons: Vec<f64>,
    pub n: usize,
    pub mode: Option<ModeOverride>,
    pub override_admissibility: bool,
    pub bins: usize,
    pub phi_method: crate::scanner::PhiMethod,
    pub relation: RelationSettings,
    pub phi: Option<ComponentConfig>,
    pub hurwitz: Vec<HurwitzComponentConfig>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        let target = make_target(
            TargetKind::ExpPolynomial { inner: vec![Complex64::new(0.0, 0.0), Complex64::new(0.1, 0.0)] },
            true,
            None,
        )
        .expect("default target");
        ScanConfig {
            collection: CollectionRef::default(),
            spec: SpecRef::default(),
            epsilons: DEFAULT_EPSILONS.to_vec(),
            n: DEFAULT_N,
            mode: None,
            override_admissibility: false,
            bins: 20,
            phi_method: crate::scanner::PhiMethod::Continued,
            relation: RelationSettings::default(),
            phi: Some(ComponentConfig {
                shape: Shape::disk(Complex64::new(0.85, 0.0), 0.03),
                resolution: DEFAULT_RESOLUTION,
                target,
            }),
            hurwitz: Vec::new(),
        }
    }
}

impl ScanConfig {
    /// Scan whose every target is the zero self-shift of its component.
    pub fn self_shift_example(n: usize) -> Self {
        let self_target = |component| TargetFunction { kind: TargetKind::SelfShift { component, delta: 0.0 }, nonvanishing_required: false };
        let mut c = ScanConfig { n, epsilons: vec![1e-9, 0.1], override_admissibility: true, ..Default::default() };
        if let Some(phi) = c.phi.as_mut() {
            phi.target = self_target(ComponentId::Phi);
        }
        c.hurwitz = vec![HurwitzComponentConfig {
            family: 0,
            sequence: 0,
            setup: ComponentConfig {
                shape: Shape::rectangle(0.7, 0.8, -0.05, 0.05),
                resolution: 0.05,
                target: self_target(ComponentId::Hurwitz { family: 0, sequence: 0 }),
            },
        }];
        c
    }
}

/// Parses a configuration document.
pub fn parse_config<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

/// Renders a configuration document.
pub fn render_config<T: Serialize>(config: &T) -> Result<String> {
    toml::to_string(config).map_err(|e| Error::Config(e.to_string()))
}
