use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::grid::CompactSetGrid;
use crate::error::{Error, Result};
use crate::serde_util::complex_vec;

/// Smallest modulus over the grid accepted as "nonzero".
pub const NONVANISHING_MARGIN: f64 = 1e-6;

/// Which function of the collection a self-shift target follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentId {
    Phi,
    /// 0-based family and sequence indices.
    Hurwitz { family: usize, sequence: usize },
}

impl std::fmt::Display for ComponentId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentId::Phi => write!(f, "phi"),
            ComponentId::Hurwitz { family, sequence } => write!(f, "zeta_{}_{}", family + 1, sequence + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetKind {
    /// `sum_k a_k k^{-s}`, `coeffs[0] = a_1`.
    DirichletPolynomial {
        #[serde(with = "complex_vec")]
        coeffs: Vec<Complex64>,
    },
    /// `sum_i c_i s^i`.
    Polynomial {
        #[serde(with = "complex_vec")]
        coeffs: Vec<Complex64>,
    },
    /// `exp(sum_i c_i s^i)`.
    ExpPolynomial {
        #[serde(with = "complex_vec")]
        inner: Vec<Complex64>,
    },
    /// `F(s + i delta)` for the component `F`.
    SelfShift { component: ComponentId, delta: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetFunction {
    #[serde(flatten)]
    pub kind: TargetKind,
    #[serde(default)]
    pub nonvanishing_required: bool,
}

fn horner(coeffs: &[Complex64], s: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * s + c)
}

impl TargetFunction {
    /// Value at `s`; `None` for self-shift targets, which need the component's evaluator.
    pub fn eval(&self, s: Complex64) -> Option<Complex64> {
        match &self.kind {
            TargetKind::DirichletPolynomial { coeffs } => Some(
                coeffs.iter().enumerate().map(|(i, a)| a * crate::zeta_kernels::pow_neg(((i + 1) as f64).ln(), s)).sum(),
            ),
            TargetKind::Polynomial { coeffs } => Some(horner(coeffs, s)),
            TargetKind::ExpPolynomial { inner } => Some(horner(inner, s).exp()),
            TargetKind::SelfShift { .. } => None,
        }
    }

    /// Target values on the grid, resolving self-shifts through `shifted`,
    /// which must return `F(s + i delta)` at the given points.
    pub fn values_on<F>(&self, grid: &CompactSetGrid, shifted: F) -> Result<Vec<Complex64>>
    where
        F: FnOnce(ComponentId, f64, &[Complex64]) -> Result<Vec<Complex64>>,
    {
        let pts = grid.complex_points();
        let vals = match &self.kind {
            TargetKind::SelfShift { component, delta } => shifted(*component, *delta, &pts)?,
            _ => pts.iter().map(|&s| self.eval(s).expect("closed-form target")).collect(),
        };
        if self.nonvanishing_required && !matches!(self.kind, TargetKind::ExpPolynomial { .. }) {
            check_nonvanishing(&vals)?;
        }
        Ok(vals)
    }
}

fn check_nonvanishing(vals: &[Complex64]) -> Result<()> {
    let min = vals.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
    if !(min > NONVANISHING_MARGIN) {
        return Err(Error::Nonvanishing(format!("minimum modulus {min:e} on the grid")));
    }
    Ok(())
}

/// Builds a target. When `nonvanishing_required`, closed-form targets other
/// than exponentials are checked on `grid` (which must then be given);
/// self-shift targets are checked once their values are known.
pub fn make_target(kind: TargetKind, nonvanishing_required: bool, grid: Option<&CompactSetGrid>) -> Result<TargetFunction> {
    match &kind {
        TargetKind::DirichletPolynomial { coeffs } | TargetKind::Polynomial { coeffs } if coeffs.is_empty() => {
            return Err(Error::InvalidInput("target needs at least one coefficient".into()));
        }
        TargetKind::ExpPolynomial { inner } if inner.is_empty() => {
            return Err(Error::InvalidInput("exp target needs at least one inner coefficient".into()));
        }
        TargetKind::SelfShift { delta, .. } if !delta.is_finite() => {
            return Err(Error::InvalidInput(format!("self-shift delta {delta} not finite")));
        }
        _ => {}
    }
    let target = TargetFunction { kind, nonvanishing_required };
    let needs_check = nonvanishing_required
        && matches!(target.kind, TargetKind::DirichletPolynomial { .. } | TargetKind::Polynomial { .. });
    if needs_check {
        let grid = grid.ok_or_else(|| Error::Nonvanishing("no grid to certify the target on".into()))?;
        let vals: Vec<Complex64> = grid.points.iter().map(|p| target.eval(p.to_c64()).expect("closed form")).collect();
        check_nonvanishing(&vals)?;
    }
    Ok(target)
}

/// `max_{s in grid} |F(s + i shift) - f(s)|`. Self-shift targets are resolved
/// through the same evaluator.
pub fn sup_distance<F>(evaluator: &F, shift: f64, target: &TargetFunction, grid: &CompactSetGrid) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64> + ?Sized,
{
    let mut sup = 0.0f64;
    for p in &grid.points {
        let s = p.to_c64();
        let f = match &target.kind {
            TargetKind::SelfShift { delta, .. } => evaluator(s + Complex64::new(0.0, *delta))?,
            _ => target.eval(s).expect("closed form"),
        };
        let d = (evaluator(s + Complex64::new(0.0, shift))? - f).norm();
        sup = sup.max(d);
    }
    Ok(sup)
}
