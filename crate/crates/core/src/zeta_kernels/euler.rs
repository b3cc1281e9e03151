//! Matsumoto zeta-functions: polynomial Euler products over primes and their
//! Dirichlet coefficients.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hurwitz::{hurwitz_zeta, pow_neg};
use crate::error::{Error, Result};
use crate::primes::{first_primes, primes_up_to, FactorSieve};

/// Local factor `prod_j (1 - a_j x^{f_j})^{-1}` with `x = p^{-s}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalFactor {
    /// `f(j, m)`, one per `j = 1..g(m)`.
    pub exponents: Vec<u32>,
    /// `a_m^{(j)}`.
    #[serde(with = "crate::serde_util::complex_vec")]
    pub coeffs: Vec<Complex64>,
}

impl LocalFactor {
    pub fn new(exponents: Vec<u32>, coeffs: Vec<Complex64>) -> Result<Self> {
        let f = LocalFactor { exponents, coeffs };
        f.validate()?;
        Ok(f)
    }

    /// Degree-one factor `(1 - a x)^{-1}`.
    pub fn linear(a: Complex64) -> Self {
        LocalFactor { exponents: vec![1], coeffs: vec![a] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    fn validate(&self) -> Result<()> {
        if self.coeffs.is_empty() || self.coeffs.len() != self.exponents.len() {
            return Err(Error::InvalidInput(format!(
                "local factor needs matching nonempty exponent/coefficient lists, got {} and {}",
                self.exponents.len(),
                self.coeffs.len()
            )));
        }
        if self.exponents.iter().any(|&f| f == 0) {
            return Err(Error::InvalidInput("local factor exponents must be positive".into()));
        }
        Ok(())
    }

    /// Power series coefficients of the factor in `x`, degrees `0..=max_degree`.
    pub fn series(&self, max_degree: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); max_degree + 1];
        out[0] = Complex64::new(1.0, 0.0);
        for (&f, &a) in self.exponents.iter().zip(&self.coeffs) {
            let f = f as usize;
            // multiply by 1/(1 - a x^f): out[d] += a * out[d - f], increasing d
            for d in f..=max_degree {
                let prev = out[d - f];
                out[d] += a * prev;
            }
        }
        out
    }

    /// Value of the factor at `x`.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut v = Complex64::new(1.0, 0.0);
        for (&f, &a) in self.exponents.iter().zip(&self.coeffs) {
            v /= Complex64::new(1.0, 0.0) - a * x.powu(f);
        }
        v
    }
}

/// Known analytic continuation of a preset into the critical strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Continuation {
    /// `phi = zeta`, continued through the Hurwitz kernel with `a = 1`.
    RiemannZeta,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct IndexedFactor {
    /// Prime index `m` (so the prime is `p_m`, `p_1 = 2`).
    index: usize,
    #[serde(flatten)]
    factor: LocalFactor,
}

/// Data of a polynomial Euler product
/// `prod_m prod_j (1 - a_m^{(j)} p_m^{-s f(j,m)})^{-1}` with growth constants
/// `g(m) <= C1 p_m^alpha`, `|a_m^{(j)}| <= p_m^beta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct EulerProductSpec {
    pub label: String,
    pub growth_alpha: f64,
    pub growth_beta: f64,
    pub growth_c1: f64,
    uniform: Option<LocalFactor>,
    explicit: BTreeMap<u64, LocalFactor>,
    pub continuation: Option<Continuation>,
    /// Known value of `sigma*` (mean-square abscissa), when documented.
    pub sigma_star: Option<f64>,
    /// Order-growth exponents of the class conditions; documentation only.
    pub c2: Option<f64>,
    pub c3: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    label: String,
    growth_alpha: f64,
    growth_beta: f64,
    #[serde(default = "one")]
    growth_c1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    uniform_factor: Option<LocalFactor>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    local_factors: Vec<IndexedFactor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    continuation: Option<Continuation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma_star: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c3: Option<f64>,
}

fn one() -> f64 {
    1.0
}

impl TryFrom<RawSpec> for EulerProductSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        let max_index = raw.local_factors.iter().map(|f| f.index).max().unwrap_or(0);
        let primes = first_primes(max_index);
        let mut explicit = BTreeMap::new();
        for entry in raw.local_factors {
            if entry.index == 0 {
                return Err(Error::Config("prime indices start at 1".into()));
            }
            let p = primes[entry.index - 1];
            if explicit.insert(p, entry.factor).is_some() {
                return Err(Error::Config(format!("duplicate local factor for index {}", entry.index)));
            }
        }
        let spec = EulerProductSpec {
            label: raw.label,
            growth_alpha: raw.growth_alpha,
            growth_beta: raw.growth_beta,
            growth_c1: raw.growth_c1,
            uniform: raw.uniform_factor,
            explicit,
            continuation: raw.continuation,
            sigma_star: raw.sigma_star,
            c2: raw.c2,
            c3: raw.c3,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<EulerProductSpec> for RawSpec {
    fn from(spec: EulerProductSpec) -> Self {
        let explicit: Vec<(u64, LocalFactor)> = spec.explicit.into_iter().collect();
        let max_p = explicit.last().map(|(p, _)| *p as usize).unwrap_or(0);
        let primes = primes_up_to(max_p);
        let local_factors = explicit
            .into_iter()
            .map(|(p, factor)| IndexedFactor { index: primes.binary_search(&p).map(|i| i + 1).unwrap_or(0), factor })
            .collect();
        RawSpec {
            label: spec.label,
            growth_alpha: spec.growth_alpha,
            growth_beta: spec.growth_beta,
            growth_c1: spec.growth_c1,
            uniform_factor: spec.uniform,
            local_factors,
            continuation: spec.continuation,
            sigma_star: spec.sigma_star,
            c2: spec.c2,
            c3: spec.c3,
        }
    }
}

impl EulerProductSpec {
    /// Spec with one local factor shared by every prime.
    pub fn uniform(label: &str, factor: LocalFactor, growth_alpha: f64, growth_beta: f64, growth_c1: f64) -> Result<Self> {
        let spec = EulerProductSpec {
            label: label.to_string(),
            growth_alpha,
            growth_beta,
            growth_c1,
            uniform: Some(factor),
            explicit: BTreeMap::new(),
            continuation: None,
            sigma_star: None,
            c2: None,
            c3: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Spec listing local factors for the first `factors.len()` primes only.
    pub fn explicit(label: &str, factors: Vec<LocalFactor>, growth_alpha: f64, growth_beta: f64, growth_c1: f64) -> Result<Self> {
        let primes = first_primes(factors.len());
        let spec = EulerProductSpec {
            label: label.to_string(),
            growth_alpha,
            growth_beta,
            growth_c1,
            uniform: None,
            explicit: primes.into_iter().zip(factors).collect(),
            continuation: None,
            sigma_star: None,
            c2: None,
            c3: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The Riemann zeta-function: `g = 1`, `f = 1`, `a = 1`, `alpha = beta = 0`.
    pub fn riemann() -> Self {
        let mut spec = Self::uniform("riemann", LocalFactor::linear(Complex64::new(1.0, 0.0)), 0.0, 0.0, 1.0)
            .expect("riemann preset is valid");
        spec.continuation = Some(Continuation::RiemannZeta);
        spec.sigma_star = Some(0.5);
        spec
    }

    /// `zeta(s)^2`: two degree-one factors with `a = 1` at every prime.
    pub fn zeta_squared() -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self::uniform("zeta-squared", LocalFactor::new(vec![1, 1], vec![one, one]).unwrap(), 0.0, 0.0, 2.0)
            .expect("zeta-squared preset is valid")
    }

    /// All `a = 0`, so the product is identically 1.
    pub fn trivial() -> Self {
        Self::uniform("trivial", LocalFactor::linear(Complex64::new(0.0, 0.0)), 0.0, 0.0, 1.0)
            .expect("trivial preset is valid")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "riemann" => Some(Self::riemann()),
            "zeta-squared" => Some(Self::zeta_squared()),
            "trivial" => Some(Self::trivial()),
            _ => None,
        }
    }

    /// `alpha + beta`, the abscissa shift between the raw product and `phi`.
    pub fn shift(&self) -> f64 {
        self.growth_alpha + self.growth_beta
    }

    fn check_factor(&self, p: u64, f: &LocalFactor) -> Result<()> {
        f.validate()?;
        let pf = p as f64;
        let g_bound = self.growth_c1 * pf.powf(self.growth_alpha);
        if f.degree() as f64 > g_bound * (1.0 + 1e-12) {
            return Err(Error::InvalidInput(format!(
                "degree {} at p = {p} exceeds C1 p^alpha = {g_bound}",
                f.degree()
            )));
        }
        let a_bound = pf.powf(self.growth_beta);
        if let Some(a) = f.coeffs.iter().find(|a| a.norm() > a_bound * (1.0 + 1e-12)) {
            return Err(Error::InvalidInput(format!("|a| = {} at p = {p} exceeds p^beta = {a_bound}", a.norm())));
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        if !(self.growth_c1 > 0.0) || self.growth_alpha < 0.0 || self.growth_beta < 0.0 {
            return Err(Error::InvalidInput("growth constants need C1 > 0, alpha >= 0, beta >= 0".into()));
        }
        if self.uniform.is_none() && self.explicit.is_empty() {
            return Err(Error::InvalidInput("spec defines no local factors".into()));
        }
        // p = 2 is the tightest prime for both growth bounds
        if let Some(u) = &self.uniform {
            self.check_factor(2, u)?;
        }
        for (&p, f) in &self.explicit {
            self.check_factor(p, f)?;
        }
        Ok(())
    }

    /// Local factor at the prime `p`.
    pub fn factor_at(&self, p: u64) -> Result<&LocalFactor> {
        self.explicit
            .get(&p)
            .or(self.uniform.as_ref())
            .ok_or_else(|| Error::Truncation { needed: p as usize, available: self.largest_covered_prime() as usize })
    }

    /// Largest prime with a local factor; `u64::MAX` for uniform specs.
    pub fn largest_covered_prime(&self) -> u64 {
        if self.uniform.is_some() {
            u64::MAX
        } else {
            self.explicit.keys().next_back().copied().unwrap_or(0)
        }
    }

    /// True when every coefficient `a_m^{(j)}` is real.
    pub fn is_real(&self) -> bool {
        self.uniform.iter().chain(self.explicit.values()).all(|f| f.coeffs.iter().all(|a| a.im == 0.0))
    }

    /// Continued value inside the critical strip, for presets that carry one.
    pub fn continued_eval(&self, s: Complex64) -> Result<Complex64> {
        match self.continuation {
            Some(Continuation::RiemannZeta) => hurwitz_zeta(s, 1.0),
            None => Err(Error::InvalidInput(format!("spec '{}' has no implemented continuation", self.label))),
        }
    }
}

/// `c_1, ..., c_K` of `phi(s) = sum_k c_k k^{-s}` (stored 0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletCoefficients {
    values: Vec<Complex64>,
}

impl DirichletCoefficients {
    pub fn from_values(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        if values.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite coefficient".into()));
        }
        Ok(DirichletCoefficients { values })
    }

    /// Truncation `K`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c_k` for `1 <= k <= K`.
    pub fn get(&self, k: usize) -> Complex64 {
        self.values[k - 1]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Partial sum `sum_{k <= K} c_k k^{-s}`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, c)| *c * pow_neg(((i + 1) as f64).ln(), s))
            .sum()
    }
}

/// Expands the Euler product into `c_1..c_K`, including the `k^{-(alpha+beta)}` shift.
pub fn dirichlet_coefficients(spec: &EulerProductSpec, k_max: usize) -> Result<DirichletCoefficients> {
    if k_max == 0 {
        return Err(Error::InvalidInput("K must be positive".into()));
    }
    let primes = primes_up_to(k_max);
    if let Some(&p) = primes.last() {
        if p > spec.largest_covered_prime() {
            return Err(Error::Truncation { needed: p as usize, available: spec.largest_covered_prime() as usize });
        }
    }
    let shift = spec.shift();
    let zero = Complex64::new(0.0, 0.0);
    let mut c = vec![zero; k_max + 1];
    c[1] = Complex64::new(1.0, 0.0);
    // prime powers first; uniform specs share one series
    let mut uniform_series: Option<Vec<Complex64>> = None;
    for &p in &primes {
        let mut e_max = 0usize;
        let mut pe = 1usize;
        while pe <= k_max / p as usize {
            pe *= p as usize;
            e_max += 1;
        }
        let factor = spec.factor_at(p)?;
        let series_owned;
        let series: &[Complex64] = if spec.explicit.contains_key(&p) {
            series_owned = factor.series(e_max);
            &series_owned
        } else {
            let cached = uniform_series.get_or_insert_with(|| factor.series(0));
            if cached.len() <= e_max {
                *cached = factor.series(e_max.max(2 * cached.len()));
            }
            &cached[..]
        };
        let lp = (p as f64).ln();
        let mut pe = 1usize;
        for (e, coeff) in series.iter().enumerate().take(e_max + 1).skip(1) {
            pe *= p as usize;
            c[pe] = if shift == 0.0 { *coeff } else { *coeff * (-(e as f64) * shift * lp).exp() };
        }
    }
    let sieve = FactorSieve::new(k_max);
    for k in 2..=k_max {
        let p = sieve.smallest_factor(k);
        let mut pe = p;
        while (k / pe) % p == 0 {
            pe *= p;
        }
        if pe != k {
            c[k] = c[pe] * c[k / pe];
        }
    }
    c.remove(0);
    Ok(DirichletCoefficients { values: c })
}

/// Evaluation route for [`matsumoto_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum MatsumotoMode {
    /// Product of local factors over primes `<= primes_up_to`.
    EulerProduct { primes_up_to: usize },
    /// Dirichlet series truncated at `terms`.
    DirichletSum { terms: usize },
}

/// Value of `phi(s)` with a bound on the truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsumotoValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// Evaluates `phi(s) = phi~(s + alpha + beta)` in the half-plane `sigma > 1`.
///
/// The Euler-product tail bound follows from the growth constants:
/// `log |tail| <= C1 sum_{n > P} n^{-sigma}`. The Dirichlet-sum bound uses the
/// largest `|c_k|` on `(K/2, K]` as an envelope for the remaining coefficients
/// and is heuristic for specs whose coefficients keep growing.
pub fn matsumoto_eval(spec: &EulerProductSpec, s: Complex64, mode: MatsumotoMode) -> Result<MatsumotoValue> {
    if !(s.re > 1.0) {
        return Err(Error::Convergence { sigma: s.re });
    }
    let sigma = s.re;
    match mode {
        MatsumotoMode::EulerProduct { primes_up_to: bound } => {
            let shifted = s + spec.shift();
            let mut value = Complex64::new(1.0, 0.0);
            for p in primes_up_to(bound) {
                let x = pow_neg((p as f64).ln(), shifted);
                value *= spec.factor_at(p)?.eval(x);
            }
            let p = bound.max(1) as f64;
            let log_tail = spec.growth_c1 * p.powf(1.0 - sigma) / (sigma - 1.0);
            Ok(MatsumotoValue { value, tail_bound: value.norm() * log_tail.exp_m1() })
        }
        MatsumotoMode::DirichletSum { terms } => {
            let coeffs = dirichlet_coefficients(spec, terms)?;
            let value = coeffs.eval(s);
            let envelope = coeffs.values[terms / 2..].iter().map(|c| c.norm()).fold(0.0, f64::max);
            let tail_bound = envelope * (terms as f64).powf(1.0 - sigma) / (sigma - 1.0);
            Ok(MatsumotoValue { value, tail_bound })
        }
    }
}

/// `(1/pi(x)) sum_{p <= x} |c_p|^2`, the finite-`x` approximant of the prime
/// mean square `kappa`.
pub fn steuding_kappa(coeffs: &DirichletCoefficients, x: f64) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::InvalidInput(format!("x = {x} must be at least 2")));
    }
    let bound = x.floor() as usize;
    if bound > coeffs.len() {
        return Err(Error::Truncation { needed: bound, available: coeffs.len() });
    }
    let primes = primes_up_to(bound);
    let sum: f64 = primes.iter().map(|&p| coeffs.get(p as usize).norm_sqr()).sum();
    Ok(sum / primes.len() as f64)
}
