//! The experimental tuple (shifts `alpha_j`, coefficient sequences, common
//! differences) and its two admissibility checks: the rank of the coefficient
//! matrices `B_j` and a heuristic search for rational relations among the logs
//! entering the independence hypothesis.
//!
//! The relation search is a numerical screen on finite truncations of infinite
//! sets. A negative result is evidence of independence, not a proof.

pub mod exact;
mod lll;
mod relation;

use std::collections::HashSet;
use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::primes::{lcm, primes_up_to};
use crate::zeta_kernels::PeriodicSequence;

pub use exact::ExactReal;
pub use lll::{lll_reduce, ReducedBasis};
pub use relation::{
    relation_search, RelationReport, DEFAULT_DIGITS, DEFAULT_MAX_COEFF, DEFAULT_SUBSET_SIZE, MIN_DIGITS, SUBSET_CAP,
};

/// Default truncation cuts of the log sets.
pub const DEFAULT_P_CUT: usize = 20;
pub const DEFAULT_M_CUT: usize = 20;

/// Relative singular-value cutoff of [`rank_check`].
pub const RANK_RTOL: f64 = 1e-10;

/// A real parameter kept both as an exact expression and as a double.
///
/// In text form it is a number or an expression string such as `"1/pi"`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealParam {
    expr: ExactReal,
    value: f64,
}

impl RealParam {
    pub fn new(expr: ExactReal) -> Self {
        let value = expr.to_f64();
        RealParam { expr, value }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(ExactReal::parse(text)?))
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        Ok(Self::new(ExactReal::from_f64(x)?))
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn expr(&self) -> &ExactReal {
        &self.expr
    }
}

impl Serialize for RealParam {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match ExactReal::from_f64(self.value) {
            Ok(e) if e == self.expr => ser.serialize_f64(self.value),
            _ => ser.serialize_str(&self.expr.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for RealParam {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Int(i64),
            Text(String),
        }
        let p = match Raw::deserialize(de)? {
            Raw::Num(x) => RealParam::from_f64(x),
            Raw::Int(n) => Ok(RealParam::new(ExactReal::integer(n))),
            Raw::Text(t) => RealParam::parse(&t),
        };
        p.map_err(serde::de::Error::custom)
    }
}

/// One Hurwitz family: a shift `alpha_j` and the sequences `B_j1, ..., B_jl(j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HurwitzFamily {
    pub alpha: RealParam,
    pub sequences: Vec<PeriodicSequence>,
}

/// Common differences of the discrete shifts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Differences {
    /// One difference `h` for every component.
    Equal { h: RealParam },
    /// `h1` for the Euler-product component and `h2[j]` for family `j`.
    PerFamily { h1: RealParam, h2: Vec<RealParam> },
    /// `h1` and a separate `h2[j][l]` for every sequence.
    PerSequence { h1: RealParam, h2: Vec<Vec<RealParam>> },
}

impl Differences {
    pub fn mode_name(&self) -> &'static str {
        match self {
            Differences::Equal { .. } => "equal",
            Differences::PerFamily { .. } => "per_family",
            Differences::PerSequence { .. } => "per_sequence",
        }
    }
}

/// The full tuple `(alpha_1..alpha_r, B_jl, differences)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCollection", into = "RawCollection")]
pub struct HurwitzCollection {
    label: Option<String>,
    families: Vec<HurwitzFamily>,
    differences: Differences,
}

#[derive(Serialize, Deserialize)]
struct RawCollection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(rename = "family")]
    families: Vec<HurwitzFamily>,
    differences: Differences,
}

impl TryFrom<RawCollection> for HurwitzCollection {
    type Error = Error;
    fn try_from(raw: RawCollection) -> Result<Self> {
        HurwitzCollection::new(raw.label, raw.families, raw.differences)
    }
}

impl From<HurwitzCollection> for RawCollection {
    fn from(c: HurwitzCollection) -> Self {
        RawCollection { label: c.label, families: c.families, differences: c.differences }
    }
}

impl HurwitzCollection {
    pub fn new(label: Option<String>, families: Vec<HurwitzFamily>, differences: Differences) -> Result<Self> {
        let c = HurwitzCollection { label, families, differences };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        if self.families.is_empty() {
            return Err(Error::InvalidInput("collection needs at least one family".into()));
        }
        for (j, f) in self.families.iter().enumerate() {
            let a = f.alpha.value();
            if !(a > 0.0 && a < 1.0) {
                return Err(Error::InvalidInput(format!("alpha_{} = {a} outside (0, 1)", j + 1)));
            }
            if f.sequences.is_empty() {
                return Err(Error::InvalidInput(format!("family {} has no sequences", j + 1)));
            }
        }
        let positive = |p: &RealParam, name: &str| {
            if p.value() > 0.0 && p.value().is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!("difference {name} = {} must be positive", p.value())))
            }
        };
        match &self.differences {
            Differences::Equal { h } => positive(h, "h")?,
            Differences::PerFamily { h1, h2 } => {
                positive(h1, "h1")?;
                if h2.len() != self.r() {
                    return Err(Error::InvalidInput(format!("{} values of h2 for r = {}", h2.len(), self.r())));
                }
                for (j, h) in h2.iter().enumerate() {
                    positive(h, &format!("h2_{}", j + 1))?;
                }
            }
            Differences::PerSequence { h1, h2 } => {
                positive(h1, "h1")?;
                if h2.len() != self.r() {
                    return Err(Error::InvalidInput(format!("{} rows of h2 for r = {}", h2.len(), self.r())));
                }
                for (j, row) in h2.iter().enumerate() {
                    if row.len() != self.l(j) {
                        return Err(Error::InvalidInput(format!(
                            "family {} has {} sequences but {} differences",
                            j + 1,
                            self.l(j),
                            row.len()
                        )));
                    }
                    for (l, h) in row.iter().enumerate() {
                        positive(h, &format!("h2_{}{}", j + 1, l + 1))?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn families(&self) -> &[HurwitzFamily] {
        &self.families
    }

    pub fn differences(&self) -> &Differences {
        &self.differences
    }

    /// Number of families `r`.
    pub fn r(&self) -> usize {
        self.families.len()
    }

    /// Number of sequences `l(j)` of family `j` (0-based).
    pub fn l(&self, j: usize) -> usize {
        self.families[j].sequences.len()
    }

    /// `lambda = l(1) + ... + l(r)`.
    pub fn lambda(&self) -> usize {
        self.families.iter().map(|f| f.sequences.len()).sum()
    }

    pub fn alpha(&self, j: usize) -> f64 {
        self.families[j].alpha.value()
    }

    /// Difference of the Euler-product component.
    pub fn h1(&self) -> &RealParam {
        match &self.differences {
            Differences::Equal { h } => h,
            Differences::PerFamily { h1, .. } | Differences::PerSequence { h1, .. } => h1,
        }
    }

    /// Difference of sequence `l` in family `j` (both 0-based).
    pub fn h2(&self, j: usize, l: usize) -> &RealParam {
        match &self.differences {
            Differences::Equal { h } => h,
            Differences::PerFamily { h2, .. } => &h2[j],
            Differences::PerSequence { h2, .. } => &h2[j][l],
        }
    }

    /// Components `(j, l)` in order: family-major, then sequence.
    pub fn components(&self) -> Vec<(usize, usize)> {
        (0..self.r()).flat_map(|j| (0..self.l(j)).map(move |l| (j, l))).collect()
    }

    /// Number of second-kind torus factors: one per sequence when the
    /// differences are per sequence, otherwise one per family.
    pub fn torus_factor_count(&self) -> usize {
        match self.differences {
            Differences::PerSequence { .. } => self.lambda(),
            _ => self.r(),
        }
    }

    /// Torus factor driving component `(j, l)`.
    pub fn torus_factor_of(&self, j: usize, l: usize) -> usize {
        match self.differences {
            Differences::PerSequence { .. } => self.families[..j].iter().map(|f| f.sequences.len()).sum::<usize>() + l,
            _ => j,
        }
    }

    /// `(alpha, difference)` of every torus factor.
    pub fn torus_factors(&self) -> Vec<(f64, f64)> {
        match &self.differences {
            Differences::PerSequence { .. } => {
                self.components().into_iter().map(|(j, l)| (self.alpha(j), self.h2(j, l).value())).collect()
            }
            _ => (0..self.r()).map(|j| (self.alpha(j), self.h2(j, 0).value())).collect(),
        }
    }

    /// Same collection with every difference replaced by per-family values
    /// (equal mode becomes per-family mode with all differences equal).
    pub fn as_per_family(&self) -> Result<HurwitzCollection> {
        let differences = match &self.differences {
            Differences::Equal { h } => Differences::PerFamily { h1: h.clone(), h2: vec![h.clone(); self.r()] },
            other => other.clone(),
        };
        HurwitzCollection::new(self.label.clone(), self.families.clone(), differences)
    }
}

/// The `k_j x l(j)` matrix of sequence values, `k_j` the lcm of the periods.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl CoefficientMatrix {
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("matrix rows must be nonempty and of equal length".into()));
        }
        let n = rows.len();
        Ok(CoefficientMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at row `m` (0-based, i.e. index `m + 1` of the sequences) and column `l`.
    pub fn get(&self, m: usize, l: usize) -> Complex64 {
        self.entries[m * self.cols + l]
    }

    pub fn row(&self, m: usize) -> &[Complex64] {
        &self.entries[m * self.cols..(m + 1) * self.cols]
    }
}

/// `B_j` for family `j` (0-based): `k_j` rows, row `m` holding the `m`-th
/// listed coefficient (`m = 1..k_j`, wrapping around each sequence's period).
pub fn build_bj_matrix(collection: &HurwitzCollection, j: usize) -> Result<CoefficientMatrix> {
    if j >= collection.r() {
        return Err(Error::InvalidInput(format!("family index {j} out of range for r = {}", collection.r())));
    }
    let seqs = &collection.families[j].sequences;
    let k = seqs.iter().fold(1u64, |acc, s| lcm(acc, s.period() as u64)) as usize;
    let rows = (0..k).map(|m| seqs.iter().map(|s| s.at(m)).collect()).collect();
    CoefficientMatrix::from_rows(rows)
}

/// Numeric rank: number of singular values above `tol`
/// (default [`RANK_RTOL`] times the largest singular value).
pub fn rank_check(m: &CoefficientMatrix, tol: Option<f64>) -> usize {
    let a = DMatrix::from_row_slice(m.rows, m.cols, &m.entries);
    let sv = a.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    let tol = tol.unwrap_or(RANK_RTOL * smax);
    sv.iter().filter(|&&s| s > tol).count()
}

/// One element of a log set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogEntry {
    pub label: String,
    pub value: f64,
    #[serde(with = "exact_text")]
    pub exact: ExactReal,
}

mod exact_text {
    use super::ExactReal;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(e: &ExactReal, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&e.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<ExactReal, D::Error> {
        ExactReal::parse(&String::deserialize(de)?).map_err(serde::de::Error::custom)
    }
}

/// A finite truncation of the set whose independence over the rationals is assumed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogSet {
    pub entries: Vec<LogEntry>,
    pub p_cut: usize,
    pub m_cut: usize,
}

impl LogSet {
    /// Ad-hoc set labelled `x1, x2, ...`.
    pub fn from_exprs(exprs: Vec<ExactReal>) -> Result<Self> {
        let mut set = LogSet { entries: Vec::new(), p_cut: 0, m_cut: 0 };
        for (i, e) in exprs.into_iter().enumerate() {
            set.push(format!("x{}", i + 1), e)?;
        }
        Ok(set)
    }

    fn push(&mut self, label: String, exact: ExactReal) -> Result<()> {
        let value = exact.to_f64();
        if !value.is_finite() {
            return Err(Error::InvalidInput(format!("entry {label} = {exact} is not finite")));
        }
        if self.entries.iter().any(|e| e.label == label) {
            return Err(Error::InvalidInput(format!("duplicate label {label}")));
        }
        self.entries.push(LogEntry { label, value, exact });
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value).collect()
    }
}

/// Truncation of the log set to primes `p <= p_cut` and `0 <= m <= m_cut`.
///
/// Equal mode: `{log p} u {log(m + alpha_j)} u {2 pi / h}`.
/// Otherwise: `{h1 log p} u {h2 log(m + alpha_j)} u {pi}`, with one scaled
/// copy per distinct difference in per-sequence mode. Entries with identical
/// expressions appear once.
pub fn build_log_set(collection: &HurwitzCollection, p_cut: usize, m_cut: usize) -> Result<LogSet> {
    if p_cut < 2 || m_cut < 2 {
        return Err(Error::InvalidInput(format!("cuts must be at least 2, got P = {p_cut}, M = {m_cut}")));
    }
    let mut set = LogSet { entries: Vec::new(), p_cut, m_cut };
    let mut seen = HashSet::new();
    let mut add = |set: &mut LogSet, label: String, e: ExactReal| -> Result<()> {
        if seen.insert(e.clone()) {
            set.push(label, e)?;
        }
        Ok(())
    };
    let equal = matches!(collection.differences, Differences::Equal { .. });
    let h1 = collection.h1().expr().clone();
    for p in primes_up_to(p_cut) {
        let lp = ExactReal::log(ExactReal::integer(p as i64));
        if equal {
            add(&mut set, format!("log({p})"), lp)?;
        } else {
            add(&mut set, format!("h1*log({p})"), ExactReal::mul(h1.clone(), lp))?;
        }
    }
    for (j, fam) in collection.families.iter().enumerate() {
        let scales: Vec<(String, Option<ExactReal>)> = match &collection.differences {
            Differences::Equal { .. } => vec![(String::new(), None)],
            Differences::PerFamily { h2, .. } => vec![(format!("h2_{}*", j + 1), Some(h2[j].expr().clone()))],
            Differences::PerSequence { h2, .. } => h2[j]
                .iter()
                .enumerate()
                .map(|(l, h)| (format!("h2_{}{}*", j + 1, l + 1), Some(h.expr().clone())))
                .collect(),
        };
        for m in 0..=m_cut {
            let arg = ExactReal::add(ExactReal::integer(m as i64), fam.alpha.expr().clone());
            for (prefix, scale) in &scales {
                let lg = ExactReal::log(arg.clone());
                let e = match scale {
                    Some(h) => ExactReal::mul(h.clone(), lg),
                    None => lg,
                };
                add(&mut set, format!("{prefix}log({m}+alpha_{})", j + 1), e)?;
            }
        }
    }
    match &collection.differences {
        Differences::Equal { h } => {
            let two_pi = ExactReal::mul(ExactReal::integer(2), ExactReal::Pi);
            add(&mut set, "2pi/h".into(), ExactReal::div(two_pi, h.expr().clone())?)?;
        }
        _ => add(&mut set, "pi".into(), ExactReal::Pi)?,
    }
    Ok(set)
}

/// Outcome of both admissibility checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    /// `(rank B_j, l(j))` per family.
    pub ranks: Vec<(usize, usize)>,
    pub rank_ok: bool,
    pub relation: RelationReport,
    pub admissible: bool,
}

/// Settings of the relation screen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RelationSettings {
    pub p_cut: usize,
    pub m_cut: usize,
    pub subset_size: usize,
    pub precision_digits: u32,
    pub max_coeff: u64,
}

impl Default for RelationSettings {
    fn default() -> Self {
        RelationSettings {
            p_cut: DEFAULT_P_CUT,
            m_cut: DEFAULT_M_CUT,
            subset_size: DEFAULT_SUBSET_SIZE,
            precision_digits: DEFAULT_DIGITS,
            max_coeff: DEFAULT_MAX_COEFF,
        }
    }
}

/// Rank condition on every `B_j` plus the relation screen.
pub fn check_admissibility(collection: &HurwitzCollection, settings: &RelationSettings) -> Result<AdmissibilityReport> {
    let ranks: Vec<(usize, usize)> = (0..collection.r())
        .map(|j| Ok((rank_check(&build_bj_matrix(collection, j)?, None), collection.l(j))))
        .collect::<Result<_>>()?;
    let rank_ok = ranks.iter().all(|(r, l)| r == l);
    let set = build_log_set(collection, settings.p_cut, settings.m_cut)?;
    let relation = relation_search(&set, settings.subset_size.min(set.len()), settings.precision_digits, settings.max_coeff)?;
    let admissible = rank_ok && !relation.found;
    Ok(AdmissibilityReport { ranks, rank_ok, relation, admissible })
}

fn family(alpha: &str, seqs: &[&[f64]]) -> HurwitzFamily {
    HurwitzFamily {
        alpha: RealParam::parse(alpha).expect("preset alpha"),
        sequences: seqs.iter().map(|s| PeriodicSequence::from_real(s).expect("preset sequence")).collect(),
    }
}

fn param(text: &str) -> RealParam {
    RealParam::parse(text).expect("preset parameter")
}

/// Curated admissible instances. Their stored relation reports are available
/// from [`stored_relation_report`].
pub fn presets() -> Vec<HurwitzCollection> {
    let build = |label: &str, families, differences| {
        HurwitzCollection::new(Some(label.to_string()), families, differences).expect("preset is valid")
    };
    vec![
        build("pi-single", vec![family("1/pi", &[&[1.0]])], Differences::Equal { h: param("1") }),
        build(
            "two-family",
            vec![family("1/pi", &[&[1.0], &[1.0, -1.0]]), family("1/e", &[&[1.0]])],
            Differences::PerFamily { h1: param("1"), h2: vec![param("1/2"), param("2/3")] },
        ),
        build(
            "per-sequence",
            vec![family("pi/4", &[&[1.0], &[1.0, 0.0, 0.0]])],
            Differences::PerSequence { h1: param("1"), h2: vec![vec![param("1"), param("pi/3")]] },
        ),
        build("alternating-e", vec![family("1/e", &[&[1.0, -1.0]])], Differences::Equal { h: param("1/2") }),
    ]
}

pub fn preset(name: &str) -> Result<HurwitzCollection> {
    presets()
        .into_iter()
        .find(|c| c.label() == Some(name))
        .ok_or_else(|| Error::Config(format!("unknown collection preset '{name}'")))
}

/// Relation report of a preset at the default settings, computed once per process.
pub fn stored_relation_report(name: &str) -> Result<RelationReport> {
    static REPORTS: OnceLock<Vec<(String, Result<RelationReport>)>> = OnceLock::new();
    let reports = REPORTS.get_or_init(|| {
        let s = RelationSettings::default();
        presets()
            .into_iter()
            .map(|c| {
                let rep = build_log_set(&c, s.p_cut, s.m_cut)
                    .and_then(|set| relation_search(&set, s.subset_size, s.precision_digits, s.max_coeff));
                (c.label().unwrap_or_default().to_string(), rep)
            })
            .collect()
    });
    reports
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r.clone())
        .ok_or_else(|| Error::Config(format!("unknown collection preset '{name}'")))?
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[f64]) -> PeriodicSequence {
        PeriodicSequence::from_real(v).unwrap()
    }

    fn single_family(seqs: Vec<PeriodicSequence>) -> HurwitzCollection {
        HurwitzCollection::new(
            None,
            vec![HurwitzFamily { alpha: param("1/pi"), sequences: seqs }],
            Differences::Equal { h: param("1") },
        )
        .unwrap()
    }

    #[test]
    fn bj_matrix_examples() {
        let c = single_family(vec![seq(&[1.0]), seq(&[1.0, -1.0])]);
        let m = build_bj_matrix(&c, 0).unwrap();
        assert_eq!(m, CoefficientMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]).unwrap());
        let c = single_family(vec![seq(&[1.0])]);
        assert_eq!(build_bj_matrix(&c, 0).unwrap().rows(), 1);
        let c = single_family(vec![seq(&[1.0, 0.0, 0.0]), seq(&[0.0, 1.0, 0.0])]);
        let m = build_bj_matrix(&c, 0).unwrap();
        assert_eq!(m, CoefficientMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap());
        assert!(build_bj_matrix(&c, 1).is_err());
    }

    #[test]
    fn rank_examples() {
        let m = CoefficientMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]).unwrap();
        assert_eq!(rank_check(&m, None), 2);
        let m = CoefficientMatrix::from_real_rows(&[vec![1.0, 1.0], vec![2.0, 2.0]]).unwrap();
        assert_eq!(rank_check(&m, None), 1);
        let m = CoefficientMatrix::from_real_rows(&[vec![0.0, 0.0]]).unwrap();
        assert_eq!(rank_check(&m, None), 0);
        let z = Complex64::new(0.0, 1.0);
        let m = CoefficientMatrix::from_rows(vec![vec![Complex64::new(1.0, 0.0), z], vec![z, Complex64::new(-1.0, 0.0)]])
            .unwrap();
        assert_eq!(rank_check(&m, None), 1);
    }

    #[test]
    fn log_set_equal_mode() {
        let c = HurwitzCollection::new(
            None,
            vec![HurwitzFamily { alpha: param("1/2"), sequences: vec![PeriodicSequence::ones()] }],
            Differences::Equal { h: param("2*pi") },
        )
        .unwrap();
        let set = build_log_set(&c, 3, 2).unwrap();
        let labels: Vec<&str> = set.entries.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["log(2)", "log(3)", "log(0+alpha_1)", "log(1+alpha_1)", "log(2+alpha_1)", "2pi/h"]);
        assert!((set.entries[5].value - 1.0).abs() < 1e-15);
        assert!(set.entries[2].value < 0.0);
    }

    #[test]
    fn log_set_multi_modes() {
        let c = &presets()[1];
        let set = build_log_set(c, 3, 2).unwrap();
        assert!((set.entries[0].value - 0.693147).abs() < 1e-6);
        assert!((set.entries[1].value - 1.098612).abs() < 1e-6);
        assert_eq!(set.entries.last().unwrap().label, "pi");
        assert_eq!(set.len(), 2 + 3 + 3 + 1);
        let per_seq = &presets()[2];
        let set = build_log_set(per_seq, 2, 2).unwrap();
        assert_eq!(set.len(), 1 + 6 + 1);
        assert!(build_log_set(per_seq, 1, 5).is_err());
    }

    #[test]
    fn duplicated_differences_collapse() {
        let c = HurwitzCollection::new(
            None,
            vec![family("1/3", &[&[1.0], &[1.0, -1.0]])],
            Differences::PerSequence { h1: param("1"), h2: vec![vec![param("1/2"), param("1/2")]] },
        )
        .unwrap();
        assert_eq!(build_log_set(&c, 2, 2).unwrap().len(), 1 + 3 + 1);
    }

    #[test]
    fn collection_validation() {
        let bad_alpha = HurwitzCollection::new(None, vec![family("1", &[&[1.0]])], Differences::Equal { h: param("1") });
        assert!(bad_alpha.is_err());
        let bad_h = HurwitzCollection::new(None, vec![family("1/3", &[&[1.0]])], Differences::Equal { h: param("-1") });
        assert!(bad_h.is_err());
        let bad_len = HurwitzCollection::new(
            None,
            vec![family("1/3", &[&[1.0]])],
            Differences::PerFamily { h1: param("1"), h2: vec![param("1"), param("2")] },
        );
        assert!(bad_len.is_err());
    }

    #[test]
    fn torus_factor_layout() {
        let p = &presets()[2];
        assert_eq!(p.lambda(), 2);
        assert_eq!(p.torus_factor_count(), 2);
        assert_eq!(p.torus_factor_of(0, 1), 1);
        let f = p.torus_factors();
        assert!((f[1].1 - std::f64::consts::PI / 3.0).abs() < 1e-15);
        let two = &presets()[1];
        assert_eq!(two.torus_factor_count(), 2);
        assert_eq!(two.torus_factor_of(0, 1), 0);
        assert_eq!(two.h2(1, 0).value(), 2.0 / 3.0);
    }

    #[test]
    fn presets_pass_rank_check() {
        let ps = presets();
        assert!(ps.len() >= 3);
        for c in &ps {
            for j in 0..c.r() {
                assert_eq!(rank_check(&build_bj_matrix(c, j).unwrap(), None), c.l(j), "{:?}", c.label());
            }
        }
    }

    #[test]
    fn collection_toml_round_trip() {
        for c in presets() {
            let text = toml::to_string(&c).unwrap();
            let back: HurwitzCollection = toml::from_str(&text).unwrap();
            assert_eq!(back, c, "{text}");
        }
        let text = r#"
            [[family]]
            alpha = 0.25
            sequences = [{ coeffs = [1.0, [0.0, 1.0]] }]
            [differences]
            mode = "equal"
            h = "pi/3"
        "#;
        let c: HurwitzCollection = toml::from_str(text).unwrap();
        assert_eq!(c.alpha(0), 0.25);
        assert_eq!(c.h1().value(), std::f64::consts::PI / 3.0);
    }

    #[test]
    fn per_family_view_of_equal_mode() {
        let c = &presets()[0];
        let pf = c.as_per_family().unwrap();
        assert_eq!(pf.differences().mode_name(), "per_family");
        assert_eq!(pf.torus_factors(), c.torus_factors());
    }
}
