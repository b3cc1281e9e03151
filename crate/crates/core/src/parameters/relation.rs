//! Integer-relation detection on subsets of a [`LogSet`].
//!
//! Each subset `x_1..x_k` gives the lattice spanned by the rows
//! `(e_i, round(10^D x_i))`. After LLL reduction a short row whose first `k`
//! entries `c` satisfy `|sum c_i x_i| <= 10^{2-D} |c|` is a relation. If every
//! Gram-Schmidt norm exceeds the length any relation with `|c_i| <= max_coeff`
//! would have, no such relation exists at this precision. Candidates are
//! confirmed against values carried to twice the working precision, so a
//! merely short lattice vector is not mistaken for a relation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::exact::{bits_for_digits, fixed_to_f64, round_shift};
use super::lll::lll_reduce;
use super::LogSet;
use crate::error::{Error, Result};

/// Smallest accepted working precision in decimal digits.
pub const MIN_DIGITS: u32 = 30;
pub const DEFAULT_DIGITS: u32 = 50;
pub const DEFAULT_MAX_COEFF: u64 = 10_000;
pub const DEFAULT_SUBSET_SIZE: usize = 3;
/// Above this many subsets a fixed pseudo-random sample of this size is searched.
pub const SUBSET_CAP: usize = 50_000;
const SAMPLE_SEED: u64 = 0x5eed_1a77;

/// Outcome of an integer-relation search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub found: bool,
    /// Relation over all entries of the set (zeros outside the subset); empty when not found.
    pub coefficients: Vec<i64>,
    /// `|sum c_i x_i|` at working precision (0 when not found).
    pub residual: f64,
    pub precision_digits: u32,
    pub max_coeff_bound: u64,
    pub subset_size: usize,
    pub subsets_tested: usize,
    /// True when the subsets were sampled rather than enumerated.
    pub sampled: bool,
    /// Labels of the entries with nonzero coefficient.
    pub support: Vec<String>,
}

enum SubsetOutcome {
    Found { coeffs: Vec<i64>, residual: f64 },
    Absent,
    Inconclusive,
}

/// Runs the detector on every subset of `subset_size` entries (or on a
/// deterministic sample when there are more than [`SUBSET_CAP`]); the first
/// relation in lexicographic subset order is reported.
pub fn relation_search(set: &LogSet, subset_size: usize, precision_digits: u32, max_coeff: u64) -> Result<RelationReport> {
    let n = set.entries.len();
    if subset_size == 0 || subset_size > n {
        return Err(Error::InvalidInput(format!("subset size {subset_size} not in 1..={n}")));
    }
    if precision_digits < MIN_DIGITS {
        return Err(Error::PrecisionInsufficient(format!(
            "{precision_digits} digits requested, at least {MIN_DIGITS} needed"
        )));
    }
    if max_coeff == 0 || max_coeff > i64::MAX as u64 / 4 {
        return Err(Error::InvalidInput(format!("max_coeff = {max_coeff} out of range")));
    }
    let bits = bits_for_digits(2 * precision_digits) + 32;
    let fixed: Vec<BigInt> = set.entries.iter().map(|e| e.exact.to_fixed(bits)).collect::<Result<_>>()?;
    let pow10 = num_traits::pow(BigInt::from(10), precision_digits as usize);
    let scaled: Vec<BigInt> = fixed.iter().map(|x| round_shift(&(x * &pow10), bits)).collect();

    let (subsets, sampled) = choose_subsets(n, subset_size);
    let outcomes: Vec<SubsetOutcome> = subsets
        .par_iter()
        .map(|idx| {
            let xs: Vec<&BigInt> = idx.iter().map(|&i| &fixed[i]).collect();
            let ns: Vec<&BigInt> = idx.iter().map(|&i| &scaled[i]).collect();
            search_subset(&xs, &ns, bits, precision_digits, max_coeff)
        })
        .collect::<Result<_>>()?;

    let mut inconclusive = None;
    for (idx, outcome) in subsets.iter().zip(&outcomes) {
        match outcome {
            SubsetOutcome::Found { coeffs, residual } => {
                let mut full = vec![0i64; n];
                for (&i, &c) in idx.iter().zip(coeffs) {
                    full[i] = c;
                }
                let support = idx
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, &c)| c != 0)
                    .map(|(&i, _)| set.entries[i].label.clone())
                    .collect();
                return Ok(RelationReport {
                    found: true,
                    coefficients: full,
                    residual: *residual,
                    precision_digits,
                    max_coeff_bound: max_coeff,
                    subset_size,
                    subsets_tested: subsets.len(),
                    sampled,
                    support,
                });
            }
            SubsetOutcome::Inconclusive if inconclusive.is_none() => inconclusive = Some(idx),
            _ => {}
        }
    }
    if let Some(idx) = inconclusive {
        let labels: Vec<&str> = idx.iter().map(|&i| set.entries[i].label.as_str()).collect();
        return Err(Error::PrecisionInsufficient(format!(
            "{precision_digits} digits cannot separate a relation with coefficients <= {max_coeff} on {labels:?}"
        )));
    }
    Ok(RelationReport {
        found: false,
        coefficients: Vec::new(),
        residual: 0.0,
        precision_digits,
        max_coeff_bound: max_coeff,
        subset_size,
        subsets_tested: subsets.len(),
        sampled,
        support: Vec::new(),
    })
}

fn search_subset(xs: &[&BigInt], ns: &[&BigInt], bits: u64, digits: u32, max_coeff: u64) -> Result<SubsetOutcome> {
    let k = xs.len();
    let rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut r = vec![BigInt::zero(); k + 1];
            r[i] = BigInt::from(1);
            r[k] = ns[i].clone();
            r
        })
        .collect();
    let reduced = lll_reduce(rows)?;
    let tol_exp = 2.0 - 2.0 * digits as f64;
    for row in &reduced.rows {
        let c = &row[..k];
        if c.iter().all(|x| x.is_zero()) || c.iter().any(|x| x.abs() > BigInt::from(max_coeff)) {
            continue;
        }
        let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut coeffs: Vec<i64> = c.iter().map(|x| (x / &g).to_i64().expect("bounded by max_coeff")).collect();
        if coeffs.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            coeffs.iter_mut().for_each(|x| *x = -*x);
        }
        let sum: BigInt = coeffs.iter().zip(xs).map(|(&ci, &x)| BigInt::from(ci) * x).sum();
        let residual = fixed_to_f64(&sum.abs(), bits);
        let norm = coeffs.iter().map(|&x| (x as f64).powi(2)).sum::<f64>().sqrt();
        if residual == 0.0 || residual.log10() <= tol_exp + norm.log10() {
            return Ok(SubsetOutcome::Found { coeffs, residual });
        }
    }
    // any relation with |c_i| <= B gives a lattice vector of squared length
    // at most k B^2 + (k B / 2 + 100 sqrt(k) B + 1)^2
    let b = max_coeff as f64;
    let kf = k as f64;
    let last = kf * b / 2.0 + 100.0 * kf.sqrt() * b + 1.0;
    let bound_f = kf * b * b + last * last;
    let bound = BigInt::from(bound_f.ceil() as u128 + 1);
    if reduced.shortest_exceeds(&bound) {
        Ok(SubsetOutcome::Absent)
    } else {
        Ok(SubsetOutcome::Inconclusive)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

/// All `k`-subsets in lexicographic order, or a sorted deterministic sample.
fn choose_subsets(n: usize, k: usize) -> (Vec<Vec<usize>>, bool) {
    if binomial(n, k) <= SUBSET_CAP as u128 {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.clone());
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return (out, false);
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut chosen = BTreeSet::new();
    while chosen.len() < SUBSET_CAP {
        let mut s = BTreeSet::new();
        while s.len() < k {
            s.insert(rng.gen_range(0..n));
        }
        chosen.insert(s.into_iter().collect::<Vec<_>>());
    }
    (chosen.into_iter().collect(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::exact::ExactReal;

    fn set(exprs: &[&str]) -> LogSet {
        LogSet::from_exprs(exprs.iter().map(|e| ExactReal::parse(e).unwrap()).collect()).unwrap()
    }

    #[test]
    fn log_six_relation() {
        let r = relation_search(&set(&["log(2)", "log(3)", "log(6)"]), 3, 50, 10_000).unwrap();
        assert!(r.found);
        assert_eq!(r.coefficients, vec![1, 1, -1]);
        assert!(r.residual < 1e-45);
    }

    #[test]
    fn doubled_log() {
        let r = relation_search(&set(&["log(2)", "2*log(2)"]), 2, 50, 10_000).unwrap();
        assert_eq!(r.coefficients, vec![2, -1]);
    }

    #[test]
    fn independent_log_primes() {
        let r = relation_search(&set(&["log(2)", "log(3)"]), 2, 50, 1_000_000).unwrap();
        assert!(!r.found);
        let r = relation_search(&set(&["log(2)", "log(3)", "log(5)"]), 3, 50, 10_000).unwrap();
        assert!(!r.found);
    }

    #[test]
    fn subset_search_finds_hidden_relation() {
        let r = relation_search(&set(&["pi", "log(2)", "e", "log(5)", "log(10)"]), 3, 50, 100).unwrap();
        assert!(r.found);
        assert_eq!(r.coefficients, vec![0, 1, 0, 1, -1]);
        assert_eq!(r.support, vec!["x2", "x4", "x5"]);
        assert_eq!(r.subsets_tested, 10);
    }

    #[test]
    fn insufficient_precision() {
        assert!(matches!(
            relation_search(&set(&["log(2)", "log(3)"]), 2, 20, 100),
            Err(Error::PrecisionInsufficient(_))
        ));
        // coefficients up to 10^20 cannot be excluded with 30 digits
        assert!(matches!(
            relation_search(&set(&["log(2)", "log(3)", "log(5)"]), 3, 30, 100_000_000_000),
            Err(Error::PrecisionInsufficient(_))
        ));
    }

    #[test]
    fn subset_enumeration() {
        let (s, sampled) = choose_subsets(5, 3);
        assert!(!sampled);
        assert_eq!(s.len(), 10);
        assert_eq!(s[0], vec![0, 1, 2]);
        assert_eq!(s[9], vec![2, 3, 4]);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        let (s, sampled) = choose_subsets(200, 3);
        assert!(sampled);
        assert_eq!(s.len(), SUBSET_CAP);
        assert_eq!(choose_subsets(200, 3).0, s);
        assert_eq!(binomial(51, 3), 20_825);
    }
}
