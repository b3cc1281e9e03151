//! Smoothed truncations of the Dirichlet series and their random (torus-twisted)
//! counterparts.
//!
//! `phi_n(s) = sum_m c_m v1(m, n) m^{-s}` with `v1(m, n) = exp(-(m/n)^{sigma0*})`
//! and `zeta_n(s, alpha; B) = sum_m b_m v2(m, n, alpha) (m + alpha)^{-s}` with
//! `v2(m, n, alpha) = exp(-((m + alpha)/(n + alpha))^{sigma0*})`. Twisting by a
//! torus point multiplies the `m`-th term by `omega_1(m)` (extended
//! multiplicatively from primes) or by `omega_2j(m)`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{primes_up_to, FactorSieve};
use crate::zeta_kernels::{pow_neg, DirichletCoefficients, PeriodicSequence, ShiftTable};

/// Default exponent of the smoothing weights.
pub const DEFAULT_SIGMA0_STAR: f64 = 0.6;

/// Truncation tolerance for the smoothed series.
pub const TRUNCATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothingParams {
    pub n: usize,
    #[serde(default = "default_sigma0_star")]
    pub sigma0_star: f64,
}

fn default_sigma0_star() -> f64 {
    DEFAULT_SIGMA0_STAR
}

impl SmoothingParams {
    pub fn new(n: usize, sigma0_star: f64) -> Result<Self> {
        let p = SmoothingParams { n, sigma0_star };
        p.validate()?;
        Ok(p)
    }

    pub fn with_default_exponent(n: usize) -> Result<Self> {
        Self::new(n, DEFAULT_SIGMA0_STAR)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("smoothing parameter n must be positive".into()));
        }
        if !(self.sigma0_star > 0.5) || !self.sigma0_star.is_finite() {
            return Err(Error::InvalidInput(format!("sigma0* = {} must exceed 1/2", self.sigma0_star)));
        }
        Ok(())
    }

    /// Terms needed so the weight drops below [`TRUNCATION_TOL`], with safety factor 2.
    pub fn required_terms(&self) -> usize {
        self.required_for(self.n as f64)
    }

    /// Same for `v2`, whose scale is `n + alpha`.
    pub fn required_terms_shifted(&self, alpha: f64) -> usize {
        self.required_for(self.n as f64 + alpha)
    }

    fn required_for(&self, scale: f64) -> usize {
        let x = (1.0 / TRUNCATION_TOL).ln().powf(1.0 / self.sigma0_star);
        (2.0 * scale * x).ceil() as usize + 1
    }
}

/// `v1(m, n) = exp(-(m/n)^{sigma0*})`.
pub fn weight_v1(m: usize, params: &SmoothingParams) -> f64 {
    (-(m as f64 / params.n as f64).powf(params.sigma0_star)).exp()
}

/// `v2(m, n, alpha) = exp(-((m + alpha)/(n + alpha))^{sigma0*})`.
pub fn weight_v2(m: usize, alpha: f64, params: &SmoothingParams) -> f64 {
    (-((m as f64 + alpha) / (params.n as f64 + alpha)).powf(params.sigma0_star)).exp()
}

/// Reduces `x` to `[0, 1)`; values within `1e-12` below an integer wrap to 0.
pub fn wrap_unit(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 - 1e-12 {
        0.0
    } else {
        r
    }
}

/// A finite point of the torus `Omega_1 x Omega_21 x ... x Omega_2r`:
/// unit values `omega_1(p)` for primes `p <= P_max` and `omega_2j(m)` for
/// `0 <= m <= M_max` in each of the `r` second-kind factors.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    primes: Vec<u64>,
    omega1: Vec<Complex64>,
    omega2: Vec<Vec<Complex64>>,
    p_max: usize,
    m_max: usize,
    seed: Option<u64>,
}

impl TorusPoint {
    /// Builds a point from explicit values; every value must be unimodular.
    pub fn new(p_max: usize, m_max: usize, omega1: Vec<Complex64>, omega2: Vec<Vec<Complex64>>) -> Result<Self> {
        let primes = primes_up_to(p_max);
        if omega1.len() != primes.len() {
            return Err(Error::BoundMismatch(format!(
                "{} prime values for {} primes up to {p_max}",
                omega1.len(),
                primes.len()
            )));
        }
        if let Some(j) = omega2.iter().position(|v| v.len() != m_max + 1) {
            return Err(Error::BoundMismatch(format!("factor {j} needs {} values", m_max + 1)));
        }
        let unit = |z: &Complex64| (z.norm() - 1.0).abs() <= 1e-12;
        if !omega1.iter().all(unit) || !omega2.iter().flatten().all(unit) {
            return Err(Error::InvalidInput("torus coordinates must have modulus 1".into()));
        }
        Ok(TorusPoint { primes, omega1, omega2, p_max, m_max, seed: None })
    }

    /// Builds a point from angles measured in turns (`omega = e^{2 pi i angle}`).
    pub fn from_angles(p_max: usize, m_max: usize, angles1: &[f64], angles2: &[Vec<f64>]) -> Result<Self> {
        let omega1 = angles1.iter().map(|&a| turn(a)).collect();
        let omega2 = angles2.iter().map(|v| v.iter().map(|&a| turn(a)).collect()).collect();
        Self::new(p_max, m_max, omega1, omega2)
    }

    /// The identity element (all coordinates 1).
    pub fn identity(p_max: usize, m_max: usize, factors: usize) -> Self {
        let primes = primes_up_to(p_max);
        let one = Complex64::new(1.0, 0.0);
        TorusPoint {
            omega1: vec![one; primes.len()],
            primes,
            omega2: vec![vec![one; m_max + 1]; factors],
            p_max,
            m_max,
            seed: None,
        }
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// Number of second-kind factors.
    pub fn factors(&self) -> usize {
        self.omega2.len()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn omega1_values(&self) -> &[Complex64] {
        &self.omega1
    }

    /// `omega_1(p)` for a prime `p <= P_max`.
    pub fn omega1(&self, p: u64) -> Option<Complex64> {
        self.primes.binary_search(&p).ok().map(|i| self.omega1[i])
    }

    /// `omega_2j(m)` values of factor `j` (0-based), `m = 0..=M_max`.
    pub fn omega2(&self, j: usize) -> &[Complex64] {
        &self.omega2[j]
    }

    pub(crate) fn from_parts(p_max: usize, m_max: usize, omega1: Vec<Complex64>, omega2: Vec<Vec<Complex64>>) -> Self {
        TorusPoint { primes: primes_up_to(p_max), omega1, omega2, p_max, m_max, seed: None }
    }

    /// `omega_1(m)` for `m = 0..=limit` (entry 0 unused), extended
    /// multiplicatively from the prime coordinates.
    pub fn omega1_extended(&self, limit: usize) -> Result<Vec<Complex64>> {
        self.omega1_extended_with(&FactorSieve::new(limit.max(2)), limit)
    }

    /// Same as [`TorusPoint::omega1_extended`] with a caller-provided sieve covering `limit`.
    pub fn omega1_extended_with(&self, sieve: &FactorSieve, limit: usize) -> Result<Vec<Complex64>> {
        if limit > self.p_max || limit > sieve.limit() {
            return Err(Error::BoundMismatch(format!(
                "multiplicative extension to {limit} needs primes beyond P_max = {}",
                self.p_max
            )));
        }
        let one = Complex64::new(1.0, 0.0);
        let mut out = vec![one; limit + 1];
        for (&p, &w) in self.primes.iter().zip(&self.omega1) {
            if p as usize > limit {
                break;
            }
            out[p as usize] = w;
        }
        for m in 4..=limit {
            let p = sieve.smallest_factor(m);
            if p != m {
                out[m] = out[p] * out[m / p];
            }
        }
        Ok(out)
    }

    /// Coordinatewise product.
    pub fn multiply(&self, other: &TorusPoint) -> Result<TorusPoint> {
        if self.p_max != other.p_max || self.m_max != other.m_max || self.factors() != other.factors() {
            return Err(Error::BoundMismatch("torus points with different bounds".into()));
        }
        let omega1 = self.omega1.iter().zip(&other.omega1).map(|(a, b)| a * b).collect();
        let omega2 = self
            .omega2
            .iter()
            .zip(&other.omega2)
            .map(|(u, v)| u.iter().zip(v).map(|(a, b)| a * b).collect())
            .collect();
        Ok(TorusPoint { primes: self.primes.clone(), omega1, omega2, p_max: self.p_max, m_max: self.m_max, seed: None })
    }

    /// Compact text form: seed and bounds for sampled points, plus the angles
    /// (in turns) when `explicit` is set or no seed is known.
    pub fn to_record(&self, explicit: bool) -> TorusRecord {
        let angles = (explicit || self.seed.is_none()).then(|| TorusAngles {
            omega1: self.omega1.iter().map(angle_of).collect(),
            omega2: self.omega2.iter().map(|v| v.iter().map(angle_of).collect()).collect(),
        });
        TorusRecord { seed: self.seed, p_max: self.p_max, m_max: self.m_max, factors: self.factors(), angles }
    }

    pub fn from_record(rec: &TorusRecord) -> Result<Self> {
        match (&rec.angles, rec.seed) {
            (Some(a), seed) => {
                if a.omega2.len() != rec.factors {
                    return Err(Error::BoundMismatch(format!(
                        "{} angle rows for {} factors",
                        a.omega2.len(),
                        rec.factors
                    )));
                }
                let mut p = Self::from_angles(rec.p_max, rec.m_max, &a.omega1, &a.omega2)?;
                p.seed = seed;
                Ok(p)
            }
            (None, Some(seed)) => Ok(sample_omega(seed, rec.p_max, rec.m_max, rec.factors)),
            (None, None) => Err(Error::Config("torus record needs a seed or explicit angles".into())),
        }
    }
}

/// Serializable form of a [`TorusPoint`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub p_max: usize,
    pub m_max: usize,
    pub factors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<TorusAngles>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusAngles {
    pub omega1: Vec<f64>,
    pub omega2: Vec<Vec<f64>>,
}

/// `e^{2 pi i a}`.
pub fn turn(a: f64) -> Complex64 {
    let (s, c) = (std::f64::consts::TAU * a).sin_cos();
    Complex64::new(c, s)
}

fn angle_of(z: &Complex64) -> f64 {
    wrap_unit(z.arg() / std::f64::consts::TAU)
}

/// Haar-random torus point: independent uniform angles for every stored
/// coordinate, deterministic in `seed`.
pub fn sample_omega(seed: u64, p_max: usize, m_max: usize, factors: usize) -> TorusPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = primes_up_to(p_max);
    let omega1 = primes.iter().map(|_| turn(rng.gen::<f64>())).collect();
    let omega2 = (0..factors).map(|_| (0..=m_max).map(|_| turn(rng.gen::<f64>())).collect()).collect();
    TorusPoint { primes, omega1, omega2, p_max, m_max, seed: Some(seed) }
}

/// A finite Dirichlet-type series `sum_m w_m exp(-s L_m)` with fixed weights,
/// used for the smoothed sums and their twists.
#[derive(Debug, Clone)]
pub struct SmoothedSeries {
    /// `L_m`: `log m` or `log(m + alpha)`.
    logs: Vec<f64>,
    /// `c_m v1(m, n)` or `b_m v2(m, n, alpha)`.
    weights: Vec<Complex64>,
    /// First index `m` of the series (1 for `phi_n`, 0 for `zeta_n`).
    offset: usize,
}

impl SmoothedSeries {
    /// Terms of `phi_n`; needs at least [`SmoothingParams::required_terms`] coefficients.
    pub fn phi(coeffs: &DirichletCoefficients, params: &SmoothingParams) -> Result<Self> {
        params.validate()?;
        let k = params.required_terms();
        if coeffs.len() < k {
            return Err(Error::Truncation { needed: k, available: coeffs.len() });
        }
        let logs = (1..=k).map(|m| (m as f64).ln()).collect();
        let weights = (1..=k).map(|m| coeffs.get(m) * weight_v1(m, params)).collect();
        Ok(SmoothedSeries { logs, weights, offset: 1 })
    }

    /// Terms of `zeta_n(., alpha; B)`.
    pub fn hurwitz(alpha: f64, seq: &PeriodicSequence, params: &SmoothingParams) -> Result<Self> {
        params.validate()?;
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("alpha = {alpha} outside (0, 1]")));
        }
        let terms = params.required_terms_shifted(alpha);
        let logs = (0..terms).map(|m| (m as f64 + alpha).ln()).collect();
        let weights = (0..terms).map(|m| seq.at(m) * weight_v2(m, alpha, params)).collect();
        Ok(SmoothedSeries { logs, weights, offset: 0 })
    }

    /// Plain truncation `sum_{k <= K} c_k k^{-s}` without smoothing weights.
    pub fn truncated(coeffs: &DirichletCoefficients) -> Self {
        let k = coeffs.len();
        let logs = (1..=k).map(|m| (m as f64).ln()).collect();
        SmoothedSeries { logs, weights: coeffs.values().to_vec(), offset: 1 }
    }

    pub fn len(&self) -> usize {
        self.logs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.logs.is_empty()
    }

    /// Index `m` of the first term.
    pub fn first_index(&self) -> usize {
        self.offset
    }

    /// Largest index `m` in the series.
    pub fn last_index(&self) -> usize {
        self.offset + self.logs.len() - 1
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        check_half_plane(s)?;
        Ok(self.logs.iter().zip(&self.weights).map(|(&l, &w)| w * pow_neg(l, s)).sum())
    }

    /// Sum with the `m`-th term multiplied by `twist[m]` (indexed by `m` itself).
    pub fn eval_twisted(&self, s: Complex64, twist: &[Complex64]) -> Result<Complex64> {
        check_half_plane(s)?;
        if twist.len() <= self.last_index() {
            return Err(Error::BoundMismatch(format!(
                "twist covers m <= {}, series needs m <= {}",
                twist.len().saturating_sub(1),
                self.last_index()
            )));
        }
        let tw = &twist[self.offset..];
        Ok(self.logs.iter().zip(&self.weights).zip(tw).map(|((&l, &w), &o)| w * o * pow_neg(l, s)).sum())
    }

    /// The individual terms `w_m exp(-s L_m)` at one point.
    pub fn terms_at(&self, s: Complex64) -> Vec<Complex64> {
        self.logs.iter().zip(&self.weights).map(|(&l, &w)| w * pow_neg(l, s)).collect()
    }

    /// Shift table over a point set, for repeated vertical shifts.
    pub fn shift_table(&self, points: &[Complex64]) -> ShiftTable {
        ShiftTable::new(&self.weights, self.logs.clone(), points)
    }

    /// Same table with each weight multiplied by `twist[m]`.
    pub fn twisted_shift_table(&self, points: &[Complex64], twist: &[Complex64]) -> Result<ShiftTable> {
        if twist.len() <= self.last_index() {
            return Err(Error::BoundMismatch("twist shorter than the series".into()));
        }
        let w: Vec<Complex64> = self.weights.iter().zip(&twist[self.offset..]).map(|(a, b)| a * b).collect();
        Ok(ShiftTable::new(&w, self.logs.clone(), points))
    }

    pub fn logs(&self) -> &[f64] {
        &self.logs
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }
}

fn check_half_plane(s: Complex64) -> Result<()> {
    if !(s.re > 0.5) {
        return Err(Error::Domain(format!("smoothed series are used for sigma > 1/2, got {}", s.re)));
    }
    Ok(())
}

/// `phi_n(s)`, optionally twisted by `omega_1`.
pub fn phi_n(
    s: Complex64,
    coeffs: &DirichletCoefficients,
    params: &SmoothingParams,
    omega: Option<&TorusPoint>,
) -> Result<Complex64> {
    let series = SmoothedSeries::phi(coeffs, params)?;
    match omega {
        None => series.eval(s),
        Some(w) => series.eval_twisted(s, &w.omega1_extended(series.last_index())?),
    }
}

/// `zeta_n(s, alpha; B)`, optionally twisted by one second-kind torus factor
/// (`omega_j[m]` for `m = 0, 1, ...`).
pub fn zeta_n(
    s: Complex64,
    alpha: f64,
    seq: &PeriodicSequence,
    params: &SmoothingParams,
    omega_j: Option<&[Complex64]>,
) -> Result<Complex64> {
    let series = SmoothedSeries::hurwitz(alpha, seq, params)?;
    match omega_j {
        None => series.eval(s),
        Some(w) => series.eval_twisted(s, w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_kernels::{dirichlet_coefficients, hurwitz_zeta, EulerProductSpec};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn weight_values() {
        let p = SmoothingParams::with_default_exponent(50).unwrap();
        assert!((weight_v1(50, &p) - (-1f64).exp()).abs() < 1e-15);
        assert!((weight_v1(100, &p) - (-(2f64.powf(0.6))).exp()).abs() < 1e-15);
        let big = SmoothingParams::with_default_exponent(1_000_000).unwrap();
        assert!(weight_v1(1, &big) > 1.0 - 1e-3);
        let p9 = SmoothingParams::with_default_exponent(9).unwrap();
        assert!((weight_v2(9, 0.5, &p9) - (-1f64).exp()).abs() < 1e-15);
        assert!(weight_v2(0, 0.5, &big) > 1.0 - 1e-3);
    }

    #[test]
    fn weights_are_monotone() {
        let p = SmoothingParams::with_default_exponent(20).unwrap();
        let q = SmoothingParams::with_default_exponent(21).unwrap();
        for m in 1..200 {
            assert!(weight_v1(m + 1, &p) < weight_v1(m, &p));
            assert!(weight_v1(m, &q) > weight_v1(m, &p));
            assert!(weight_v2(m + 1, 0.3, &p) < weight_v2(m, 0.3, &p));
            assert!(weight_v2(m, 0.3, &q) > weight_v2(m, 0.3, &p));
        }
    }

    #[test]
    fn params_validation() {
        assert!(SmoothingParams::new(10, 0.5).is_err());
        assert!(SmoothingParams::new(0, 0.6).is_err());
        let p = SmoothingParams::new(10, 0.6).unwrap();
        assert!(weight_v1(p.required_terms(), &p) < TRUNCATION_TOL * 1e-3);
    }

    #[test]
    fn phi_n_approaches_zeta_where_absolutely_convergent() {
        let z2 = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap();
        let err = |n: usize| {
            let p = SmoothingParams::with_default_exponent(n).unwrap();
            let co = dirichlet_coefficients(&EulerProductSpec::riemann(), p.required_terms()).unwrap();
            (phi_n(c(2.0, 0.0), &co, &p, None).unwrap() - z2).norm()
        };
        let (e1, e2) = (err(100), err(1000));
        // leading error term is of size n^{-sigma0*}
        assert!(e2 < 0.1 && e2 < e1 / 3.0);
    }

    #[test]
    fn identity_twist_is_exact() {
        let p = SmoothingParams::with_default_exponent(30).unwrap();
        let co = dirichlet_coefficients(&EulerProductSpec::zeta_squared(), p.required_terms()).unwrap();
        let ones = TorusPoint::identity(p.required_terms(), 10, 1);
        let s = c(0.8, 3.0);
        assert_eq!(phi_n(s, &co, &p, None).unwrap(), phi_n(s, &co, &p, Some(&ones)).unwrap());
        let seq = PeriodicSequence::from_real(&[1.0, -1.0]).unwrap();
        let m = p.required_terms_shifted(0.5);
        let w = vec![c(1.0, 0.0); m + 1];
        assert_eq!(zeta_n(s, 0.5, &seq, &p, None).unwrap(), zeta_n(s, 0.5, &seq, &p, Some(&w)).unwrap());
    }

    #[test]
    fn single_term_series() {
        let p = SmoothingParams::with_default_exponent(7).unwrap();
        let co = dirichlet_coefficients(&EulerProductSpec::trivial(), p.required_terms()).unwrap();
        for s in [c(0.6, 0.0), c(2.0, 10.0)] {
            assert_eq!(phi_n(s, &co, &p, None).unwrap(), c(weight_v1(1, &p), 0.0));
        }
    }

    #[test]
    fn zeta_n_alternating_at_one() {
        let p = SmoothingParams::with_default_exponent(40).unwrap();
        let seq = PeriodicSequence::from_real(&[1.0, -1.0]).unwrap();
        let v = zeta_n(c(1.0, 0.0), 0.5, &seq, &p, None).unwrap();
        let m = p.required_terms_shifted(0.5);
        let brute: f64 = (0..m)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * (-((k as f64 + 0.5) / 40.5).powf(0.6)).exp() / (k as f64 + 0.5)
            })
            .sum();
        assert!((v.re - brute).abs() < 1e-10);
    }

    #[test]
    fn truncation_and_bounds_errors() {
        let p = SmoothingParams::with_default_exponent(10).unwrap();
        let co = dirichlet_coefficients(&EulerProductSpec::riemann(), 100).unwrap();
        assert!(matches!(phi_n(c(2.0, 0.0), &co, &p, None), Err(Error::Truncation { .. })));
        let co = dirichlet_coefficients(&EulerProductSpec::riemann(), p.required_terms()).unwrap();
        let small = sample_omega(1, 50, 5, 1);
        assert!(matches!(phi_n(c(2.0, 0.0), &co, &p, Some(&small)), Err(Error::BoundMismatch(_))));
        assert!(phi_n(c(0.5, 0.0), &co, &p, None).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_unimodular() {
        let a = sample_omega(42, 100, 20, 2);
        let b = sample_omega(42, 100, 20, 2);
        assert_eq!(a, b);
        for seed in 0..10u64 {
            assert_ne!(sample_omega(seed, 100, 20, 2), sample_omega(seed + 1000, 100, 20, 2));
        }
        assert!(a
            .omega1_values()
            .iter()
            .chain(a.omega2(0))
            .chain(a.omega2(1))
            .all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn multiplicative_extension() {
        let w = sample_omega(7, 10_000, 1, 1);
        let ext = w.omega1_extended(10_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut tested = 0;
        while tested < 100 {
            let a: usize = rng.gen_range(2..100);
            let b: usize = rng.gen_range(2..100);
            if crate::primes::gcd(a as u64, b as u64) != 1 {
                continue;
            }
            assert!((ext[a * b] - ext[a] * ext[b]).norm() < 1e-12);
            tested += 1;
        }
        assert_eq!(ext[1], c(1.0, 0.0));
        assert!((ext[8] - w.omega1(2).unwrap().powu(3)).norm() < 1e-12);
    }

    #[test]
    fn record_round_trip() {
        let w = sample_omega(11, 30, 4, 2);
        let compact = w.to_record(false);
        assert!(compact.angles.is_none());
        assert_eq!(TorusPoint::from_record(&compact).unwrap(), w);
        let explicit = w.to_record(true);
        let back = TorusPoint::from_record(&explicit).unwrap();
        for (a, b) in back.omega1_values().iter().zip(w.omega1_values()) {
            assert!((a - b).norm() < 1e-12);
        }
        let text = toml::to_string(&explicit).unwrap();
        let parsed: TorusRecord = toml::from_str(&text).unwrap();
        assert_eq!(parsed, explicit);
    }

    #[test]
    fn wrap_unit_tolerance() {
        assert_eq!(wrap_unit(1.0 - 1e-13), 0.0);
        assert_eq!(wrap_unit(-0.25), 0.75);
        assert_eq!(wrap_unit(3.5), 0.5);
    }
}
