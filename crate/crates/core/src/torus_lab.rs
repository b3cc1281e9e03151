//! Torus dynamics of the discrete shifts: trajectory points, the rotation by
//! `a_{alpha,h}`, Weyl sums of characters, coordinate discrepancies and a
//! moment comparison between shift samples and Haar-random samples.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parameters::HurwitzCollection;
use crate::primes::{primes_up_to, FactorSieve};
use crate::serde_util::complex;
use crate::smoothing::{sample_omega, turn, wrap_unit, SmoothedSeries, SmoothingParams, TorusPoint};
use crate::zeta_kernels::{dirichlet_coefficients, pow_neg, EulerProductSpec};

/// Default torus truncation `P_max = M_max`.
pub const DEFAULT_TORUS_BOUND: usize = 20;

/// Terms per chunk of the deterministic parallel sums.
const CHUNK: usize = 4096;

/// Default tolerance of the moment gates, in standard errors.
pub const DEFAULT_TOLERANCE_SE: f64 = 3.0;

/// Pairwise (tree) sum; the result depends only on the order of `v`.
pub fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => v[0],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

/// Sum of `f(k)` for `k = 0..n` computed in fixed chunks in parallel and
/// merged by a pairwise tree, so the result is independent of the thread count.
fn chunked_sum<F: Fn(usize) -> Complex64 + Sync>(n: usize, f: F) -> Complex64 {
    let chunks: Vec<Complex64> = (0..n.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| (c * CHUNK..((c + 1) * CHUNK).min(n)).map(&f).sum())
        .collect();
    pairwise_sum(&chunks)
}

/// The point `((p^{-ikh1})_{p <= P_max}, ((m + alpha_f)^{-ik h_f})_{m <= M_max, f})`
/// over the torus factors `f` of the collection.
pub fn trajectory_point(k: u64, collection: &HurwitzCollection, p_max: usize, m_max: usize) -> Result<TorusPoint> {
    if p_max < 1 || m_max < 1 {
        return Err(Error::InvalidInput("torus bounds must be at least 1".into()));
    }
    let kf = k as f64;
    let h1 = collection.h1().value();
    let omega1 = primes_up_to(p_max).iter().map(|&p| turn(-wrap_unit(kf * (h1 * (p as f64).ln() / TAU)))).collect();
    let omega2 = collection
        .torus_factors()
        .iter()
        .map(|&(alpha, h)| (0..=m_max).map(|m| turn(-wrap_unit(kf * (h * (m as f64 + alpha).ln() / TAU)))).collect())
        .collect();
    Ok(TorusPoint::from_parts(p_max, m_max, omega1, omega2))
}

/// `Phi(omega) = a_{alpha,h} omega`, where `a_{alpha,h}` is the trajectory point at `k = 1`.
pub fn rotate(point: &TorusPoint, collection: &HurwitzCollection) -> Result<TorusPoint> {
    if point.factors() != collection.torus_factor_count() {
        return Err(Error::BoundMismatch(format!(
            "point has {} second-kind factors, collection needs {}",
            point.factors(),
            collection.torus_factor_count()
        )));
    }
    let a = trajectory_point(1, collection, point.p_max().max(1), point.m_max().max(1))?;
    if point.p_max() != a.p_max() || point.m_max() != a.m_max() {
        return Err(Error::BoundMismatch("torus bounds must be at least 1".into()));
    }
    a.multiply(point)
}

/// A character of the torus: exponents `k_p` on prime coordinates and
/// `l_{m,f}` on the coordinate `m` of second-kind factor `f` (0-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterIndex {
    pub k_p: BTreeMap<u64, i64>,
    pub l_mf: BTreeMap<(usize, usize), i64>,
}

impl CharacterIndex {
    pub fn is_trivial(&self) -> bool {
        self.k_p.values().all(|&e| e == 0) && self.l_mf.values().all(|&e| e == 0)
    }

    /// `theta` with `chi(trajectory_point(k)) = e^{-ik theta}`.
    pub fn theta(&self, collection: &HurwitzCollection) -> Result<f64> {
        let h1 = collection.h1().value();
        let factors = collection.torus_factors();
        let mut theta = 0.0;
        for (&p, &e) in &self.k_p {
            theta += e as f64 * h1 * (p as f64).ln();
        }
        for (&(m, f), &e) in &self.l_mf {
            let &(alpha, h) = factors
                .get(f)
                .ok_or_else(|| Error::BoundMismatch(format!("character uses factor {f}, collection has {}", factors.len())))?;
            theta += e as f64 * h * (m as f64 + alpha).ln();
        }
        Ok(theta)
    }

    /// `chi(omega)`.
    pub fn eval(&self, point: &TorusPoint) -> Result<Complex64> {
        let mut v = Complex64::new(1.0, 0.0);
        for (&p, &e) in &self.k_p {
            let w = point.omega1(p).ok_or_else(|| Error::BoundMismatch(format!("prime {p} beyond P_max")))?;
            v *= w.powi(e as i32);
        }
        for (&(m, f), &e) in &self.l_mf {
            if f >= point.factors() || m > point.m_max() {
                return Err(Error::BoundMismatch(format!("coordinate ({m}, {f}) outside the point")));
            }
            v *= point.omega2(f)[m].powi(e as i32);
        }
        Ok(v)
    }

    fn check(&self, collection: &HurwitzCollection) -> Result<()> {
        if let Some(&p) = self.k_p.keys().find(|&&p| !crate::primes::is_prime(p)) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if self.l_mf.keys().any(|&(_, f)| f >= collection.torus_factor_count()) {
            return Err(Error::BoundMismatch("character factor index out of range".into()));
        }
        Ok(())
    }
}

/// `(1/(N+1)) sum_{k=0}^{N} chi(trajectory_point(k))`.
///
/// Each term multiplies the character's coordinates of the `k`-th point, with
/// every coordinate angle reduced mod 1 first, as stored on the torus.
pub fn weyl_sum(chi: &CharacterIndex, n: u64, collection: &HurwitzCollection) -> Result<Complex64> {
    chi.check(collection)?;
    let h1 = collection.h1().value();
    let factors = collection.torus_factors();
    // (exponent, turns per step) of each coordinate in the support
    let mut coords: Vec<(f64, f64)> = chi.k_p.iter().map(|(&p, &e)| (e as f64, h1 * (p as f64).ln() / TAU)).collect();
    coords.extend(chi.l_mf.iter().map(|(&(m, f), &e)| {
        let (alpha, h) = factors[f];
        (e as f64, h * (m as f64 + alpha).ln() / TAU)
    }));
    let count = n as usize + 1;
    let total = chunked_sum(count, |k| {
        let kf = k as f64;
        let turns: f64 = coords.iter().map(|&(e, step)| e * wrap_unit(kf * step)).sum();
        turn(-wrap_unit(turns))
    });
    Ok(total / count as f64)
}

/// Random character with one to three prime coordinates and up to two
/// second-kind coordinates, every exponent in `-3..=3` and nonzero.
pub fn random_character<R: Rng>(rng: &mut R, collection: &HurwitzCollection, prime_bound: u64, m_bound: usize) -> CharacterIndex {
    let primes = primes_up_to(prime_bound.max(2) as usize);
    let exponent = |rng: &mut R| {
        let e = rng.gen_range(1..=3i64);
        if rng.gen::<bool>() { e } else { -e }
    };
    let mut chi = CharacterIndex::default();
    for _ in 0..rng.gen_range(1..=3) {
        let p = primes[rng.gen_range(0..primes.len())];
        let e = exponent(rng);
        chi.k_p.insert(p, e);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let key = (rng.gen_range(0..=m_bound), rng.gen_range(0..collection.torus_factor_count()));
        let e = exponent(rng);
        chi.l_mf.insert(key, e);
    }
    chi
}

/// `e^{-iN theta/2} sin((N+1) theta/2) / ((N+1) sin(theta/2))`, or 1 when
/// `theta` is a multiple of `2 pi`.
pub fn weyl_sum_closed_form(theta: f64, n: u64) -> Complex64 {
    let half = 0.5 * theta;
    let s = half.sin();
    let nf = n as f64;
    if s.abs() < 1e-300 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(1.0, -nf * half) * (((nf + 1.0) * half).sin() / ((nf + 1.0) * s))
}

/// Star discrepancy `D*_N` of points in `[0, 1)` (values are first reduced
/// mod 1). `exact` uses the sorted formula, otherwise counts in 1000 bins.
pub fn star_discrepancy_1d(angles: &[f64], exact: bool) -> Result<f64> {
    if angles.is_empty() {
        return Err(Error::InvalidInput("star discrepancy of an empty sequence".into()));
    }
    let n = angles.len() as f64;
    if exact {
        let mut x: Vec<f64> = angles.iter().map(|&a| wrap_unit(a)).collect();
        x.sort_by(|a, b| a.total_cmp(b));
        Ok(x.iter()
            .enumerate()
            .map(|(i, &xi)| ((i + 1) as f64 / n - xi).max(xi - i as f64 / n))
            .fold(0.0, f64::max))
    } else {
        const BINS: usize = 1000;
        let mut counts = [0usize; BINS];
        for &a in angles {
            counts[((wrap_unit(a) * BINS as f64) as usize).min(BINS - 1)] += 1;
        }
        let mut below = 0usize;
        let mut d: f64 = 0.0;
        for (b, &c) in counts.iter().enumerate() {
            let lo = b as f64 / BINS as f64;
            let hi = (b + 1) as f64 / BINS as f64;
            // the empirical distribution jumps inside the bin: bound both sides
            d = d.max(lo - below as f64 / n);
            below += c;
            d = d.max(below as f64 / n - lo).max(hi - below as f64 / n);
        }
        Ok(d.min(1.0))
    }
}

/// `{k h log(x) / (2 pi) mod 1 : k = 0..=n}`, the angle sequence of one coordinate.
pub fn coordinate_angles(h: f64, x: f64, n: u64) -> Vec<f64> {
    let step = h * x.ln() / TAU;
    (0..=n).map(|k| wrap_unit(k as f64 * step)).collect()
}

/// One row of a discrepancy table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub prime: u64,
    pub n: u64,
    pub discrepancy: f64,
}

/// Exact star discrepancy of the prime coordinates `k h1 log p / (2 pi)` for each `n`.
pub fn discrepancy_table(collection: &HurwitzCollection, primes: &[u64], ns: &[u64]) -> Result<Vec<DiscrepancyRow>> {
    let h1 = collection.h1().value();
    let mut out = Vec::new();
    for &p in primes {
        for &n in ns {
            let d = star_discrepancy_1d(&coordinate_angles(h1, p as f64, n), true)?;
            out.push(DiscrepancyRow { prime: p, n, discrepancy: d });
        }
    }
    Ok(out)
}

/// Settings of [`compare_distributions_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSettings {
    pub sigma: f64,
    /// Shifts `k = 0..=n_shifts`.
    pub n_shifts: u64,
    pub mc_samples: usize,
    pub n_smooth: usize,
    pub sigma0_star: f64,
    pub seed: u64,
    pub tolerance_se: f64,
}

impl Default for MomentSettings {
    fn default() -> Self {
        MomentSettings {
            sigma: 1.5,
            n_shifts: 10_000,
            mc_samples: 10_000,
            n_smooth: 10,
            sigma0_star: crate::smoothing::DEFAULT_SIGMA0_STAR,
            seed: 1,
            tolerance_se: DEFAULT_TOLERANCE_SE,
        }
    }
}

/// Moments of one component in both samples, with the analytic Haar moments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentMoments {
    pub label: String,
    #[serde(with = "complex")]
    pub mean_shift: Complex64,
    #[serde(with = "complex")]
    pub mean_mc: Complex64,
    pub abs_mean_shift: f64,
    pub abs_mean_mc: f64,
    pub second_moment_shift: f64,
    pub second_moment_mc: f64,
    pub mean_se_shift: f64,
    pub mean_se_mc: f64,
    pub second_se_shift: f64,
    pub second_se_mc: f64,
    /// Haar mean (the `m = 1` term for the Euler-product component, 0 otherwise).
    #[serde(with = "complex")]
    pub oracle_mean: Complex64,
    /// Haar second moment `sum |w_m|^2 m^{-2 sigma}`.
    pub oracle_second_moment: f64,
    /// Shift and Monte Carlo means agree within tolerance.
    pub mean_ok: bool,
    pub second_moment_ok: bool,
    /// Both samples agree with the analytic moments within tolerance.
    pub oracle_ok: bool,
}

/// Moment comparison of the shift sample against Haar sampling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    pub sample_count_shift: usize,
    pub sample_count_mc: usize,
    pub sigma: f64,
    pub n_smooth: usize,
    pub tolerance_se: f64,
    pub components: Vec<ComponentMoments>,
    pub all_ok: bool,
}

/// Smoothed series of every component: the Euler-product one first, then
/// the Hurwitz components in collection order, each with its torus factor
/// and difference.
pub(crate) struct ComponentSeries {
    pub label: String,
    pub series: SmoothedSeries,
    /// `None` for the Euler-product component.
    pub factor: Option<usize>,
    pub h: f64,
}

pub(crate) fn component_series(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    params: &SmoothingParams,
) -> Result<Vec<ComponentSeries>> {
    let coeffs = dirichlet_coefficients(spec, params.required_terms())?;
    let mut out = vec![ComponentSeries {
        label: format!("phi[{}]", spec.label),
        series: SmoothedSeries::phi(&coeffs, params)?,
        factor: None,
        h: collection.h1().value(),
    }];
    for (j, l) in collection.components() {
        let fam = &collection.families()[j];
        out.push(ComponentSeries {
            label: format!("zeta_{j}_{l}"),
            series: SmoothedSeries::hurwitz(fam.alpha.value(), &fam.sequences[l], params)?,
            factor: Some(collection.torus_factor_of(j, l)),
            h: collection.h2(j, l).value(),
        });
    }
    Ok(out)
}

struct Stats {
    mean: Complex64,
    abs_mean: f64,
    second: f64,
    mean_se: f64,
    second_se: f64,
}

fn stats(v: &[Complex64]) -> Stats {
    let n = v.len() as f64;
    let mean = pairwise_sum(v) / n;
    let abs_mean = v.iter().map(|z| z.norm()).sum::<f64>() / n;
    let second = v.iter().map(|z| z.norm_sqr()).sum::<f64>() / n;
    let var = v.iter().map(|z| (z - mean).norm_sqr()).sum::<f64>() / (n - 1.0).max(1.0);
    let var2 = v.iter().map(|z| (z.norm_sqr() - second).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
    Stats { mean, abs_mean, second, mean_se: (var / n).sqrt(), second_se: (var2 / n).sqrt() }
}

/// `phi_n(sigma + ik h1)` and `zeta_n(sigma + ik h_2, alpha_j; B_jl)` for
/// `k = 0..=n_shifts`, one vector per component.
pub fn shift_samples(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    sigma: f64,
    n_shifts: u64,
    params: &SmoothingParams,
) -> Result<Vec<Vec<Complex64>>> {
    let comps = component_series(collection, spec, params)?;
    comps
        .iter()
        .map(|c| {
            let terms = c.series.terms_at(Complex64::new(sigma, 0.0));
            let logs = c.series.logs();
            Ok((0..=n_shifts)
                .into_par_iter()
                .map(|k| {
                    let tau = k as f64 * c.h;
                    terms.iter().zip(logs).map(|(&t, &l)| t * pow_neg(l, Complex64::new(0.0, tau))).sum()
                })
                .collect())
        })
        .collect()
}

/// Haar sample of every component: `mc_samples` independent torus points,
/// the `i`-th drawn by [`sample_omega`] with the `i`-th seed of a ChaCha
/// stream keyed by `seed`.
pub fn mc_samples(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    sigma: f64,
    mc_samples: usize,
    params: &SmoothingParams,
    seed: u64,
) -> Result<Vec<Vec<Complex64>>> {
    let comps = component_series(collection, spec, params)?;
    let p_max = comps[0].series.last_index();
    let m_max = comps[1..].iter().map(|c| c.series.last_index()).max().unwrap_or(1).max(1);
    let factors = collection.torus_factor_count();
    let sieve = FactorSieve::new(p_max.max(2));
    let terms: Vec<Vec<Complex64>> = comps.iter().map(|c| c.series.terms_at(Complex64::new(sigma, 0.0))).collect();
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..mc_samples).map(|_| master.next_u64()).collect();
    let rows: Vec<Vec<Complex64>> = seeds
        .par_iter()
        .map(|&s| {
            let w = sample_omega(s, p_max, m_max, factors);
            let ext = w.omega1_extended_with(&sieve, p_max)?;
            comps
                .iter()
                .zip(&terms)
                .map(|(c, t)| {
                    let (first, tw) = match c.factor {
                        None => (1, &ext[..]),
                        Some(f) => (0, w.omega2(f)),
                    };
                    Ok(t.iter().zip(&tw[first..]).map(|(a, b)| a * b).sum())
                })
                .collect::<Result<Vec<Complex64>>>()
        })
        .collect::<Result<_>>()?;
    Ok((0..comps.len()).map(|i| rows.iter().map(|r| r[i]).collect()).collect())
}

/// [`compare_distributions_with`] at the default smoothing exponent and tolerance.
pub fn compare_distributions(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    sigma: f64,
    n: u64,
    mc: usize,
    n_smooth: usize,
    seed: u64,
) -> Result<MomentReport> {
    let settings = MomentSettings { sigma, n_shifts: n, mc_samples: mc, n_smooth, seed, ..Default::default() };
    compare_distributions_with(collection, spec, &settings)
}

/// First and second moments of the shift sample and of a Haar sample, gated
/// against each other and against the analytic Haar moments.
pub fn compare_distributions_with(
    collection: &HurwitzCollection,
    spec: &EulerProductSpec,
    settings: &MomentSettings,
) -> Result<MomentReport> {
    if settings.n_shifts < 1000 || settings.mc_samples < 1000 {
        return Err(Error::InvalidInput("moment comparison needs N and mc_samples of at least 1000".into()));
    }
    if !(settings.sigma > 0.5) {
        return Err(Error::Domain(format!("sigma = {} outside sigma > 1/2", settings.sigma)));
    }
    let params = SmoothingParams::new(settings.n_smooth, settings.sigma0_star)?;
    let shift = shift_samples(collection, spec, settings.sigma, settings.n_shifts, &params)?;
    let mc = mc_samples(collection, spec, settings.sigma, settings.mc_samples, &params, settings.seed)?;
    let comps = component_series(collection, spec, &params)?;
    let tol = settings.tolerance_se;
    let mut components = Vec::new();
    for ((c, s), m) in comps.iter().zip(&shift).zip(&mc) {
        let terms = c.series.terms_at(Complex64::new(settings.sigma, 0.0));
        let oracle_mean = if c.factor.is_none() { terms[0] } else { Complex64::new(0.0, 0.0) };
        let oracle_second: f64 = terms.iter().map(|t| t.norm_sqr()).sum();
        let (a, b) = (stats(s), stats(m));
        let slack = 1e-12 * (1.0 + oracle_second);
        let mean_ok = (a.mean - b.mean).norm() <= tol * a.mean_se.hypot(b.mean_se) + slack;
        let second_ok = (a.second - b.second).abs() <= tol * a.second_se.hypot(b.second_se) + slack;
        let oracle_ok = (a.mean - oracle_mean).norm() <= tol * a.mean_se + slack
            && (b.mean - oracle_mean).norm() <= tol * b.mean_se + slack
            && (a.second - oracle_second).abs() <= tol * a.second_se + slack
            && (b.second - oracle_second).abs() <= tol * b.second_se + slack;
        components.push(ComponentMoments {
            label: c.label.clone(),
            mean_shift: a.mean,
            mean_mc: b.mean,
            abs_mean_shift: a.abs_mean,
            abs_mean_mc: b.abs_mean,
            second_moment_shift: a.second,
            second_moment_mc: b.second,
            mean_se_shift: a.mean_se,
            mean_se_mc: b.mean_se,
            second_se_shift: a.second_se,
            second_se_mc: b.second_se,
            oracle_mean,
            oracle_second_moment: oracle_second,
            mean_ok,
            second_moment_ok: second_ok,
            oracle_ok,
        });
    }
    let all_ok = components.iter().all(|c| c.mean_ok && c.second_moment_ok && c.oracle_ok);
    Ok(MomentReport {
        sample_count_shift: settings.n_shifts as usize + 1,
        sample_count_mc: settings.mc_samples,
        sigma: settings.sigma,
        n_smooth: settings.n_smooth,
        tolerance_se: tol,
        components,
        all_ok,
    })
}
