//! Zeta-function kernels: Hurwitz and periodic Hurwitz functions, Matsumoto
//! zeta-functions given by polynomial Euler products, and the analytic
//! diagnostics used to check the class conditions (mean square, prime mean
//! square of coefficients).

mod bernoulli;
mod euler;
mod hurwitz;
mod meanvalue;
mod table;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use euler::{
    dirichlet_coefficients, matsumoto_eval, steuding_kappa, Continuation, DirichletCoefficients,
    EulerProductSpec, LocalFactor, MatsumotoMode, MatsumotoValue,
};
pub use hurwitz::{
    em_cut, hurwitz_zeta, hurwitz_zeta_regular, periodic_hurwitz_zeta, residue_b, HurwitzGrid,
    PeriodicHurwitzGrid, PeriodicSequence, CORRECTION_ORDER,
};
pub(crate) use hurwitz::{pow_neg, RawComplex};
pub use meanvalue::{mean_square_on_line, MeanSquare};
pub use table::ShiftTable;

/// A point `s = sigma + i t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub t: f64,
}

impl ComplexPoint {
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !sigma.is_finite() || !t.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite point ({sigma}, {t})")));
        }
        Ok(ComplexPoint { sigma, t })
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.to_c64()
    }
}

/// Vertical strip `sigma_lo < sigma < sigma_hi`, `|t| < t_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripRegion {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub t_bound: f64,
}

impl StripRegion {
    pub fn new(sigma_lo: f64, sigma_hi: f64, t_bound: f64) -> Result<Self> {
        if !(sigma_lo < sigma_hi) || !(t_bound > 0.0) {
            return Err(Error::InvalidInput(format!(
                "invalid strip sigma in ({sigma_lo}, {sigma_hi}), |t| < {t_bound}"
            )));
        }
        Ok(StripRegion { sigma_lo, sigma_hi, t_bound })
    }

    /// `D(1/2, 1)` truncated at height `t_bound`.
    pub fn critical(t_bound: f64) -> Self {
        StripRegion { sigma_lo: 0.5, sigma_hi: 1.0, t_bound }
    }

    pub fn contains(&self, s: Complex64) -> bool {
        s.re > self.sigma_lo && s.re < self.sigma_hi && s.im.abs() < self.t_bound
    }
}
