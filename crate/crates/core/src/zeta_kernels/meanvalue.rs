use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Jumps of `|phi|^2` between neighbouring nodes above this fraction of the
/// mean trigger the resolution warning.
pub const OSCILLATION_THRESHOLD: f64 = 0.5;

/// Result of [`mean_square_on_line`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSquare {
    /// `(1/T) int_0^T |phi(sigma0 + it)|^2 dt`.
    pub value: f64,
    /// Largest change of `|phi|^2` between adjacent quadrature nodes, relative
    /// to `max(1, value)`.
    pub max_relative_jump: f64,
    pub resolution_warning: bool,
}

/// Mean square of `evaluator` on the segment `sigma0 + it`, `0 <= t <= T`, by
/// composite Simpson quadrature with `steps` panels (two subintervals each).
///
/// Nodes are evaluated in parallel; the sum runs in node order, so the result
/// does not depend on the worker count.
pub fn mean_square_on_line<F>(evaluator: &F, sigma0: f64, t_max: f64, steps: usize) -> Result<MeanSquare>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync + ?Sized,
{
    if steps < 100 {
        return Err(Error::InvalidInput(format!("need at least 100 panels, got {steps}")));
    }
    if !(t_max > 0.0) || !sigma0.is_finite() {
        return Err(Error::InvalidInput(format!("invalid segment sigma0 = {sigma0}, T = {t_max}")));
    }
    let intervals = 2 * steps;
    let h = t_max / intervals as f64;
    let values: Vec<f64> = (0..=intervals)
        .into_par_iter()
        .map(|i| evaluator(Complex64::new(sigma0, i as f64 * h)).map(|v| v.norm_sqr()))
        .collect::<Result<_>>()?;
    let mut sum = values[0] + values[intervals];
    for (i, v) in values.iter().enumerate().take(intervals).skip(1) {
        sum += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    let value = sum * h / 3.0 / t_max;
    let max_jump = values.windows(2).map(|w| (w[1] - w[0]).abs()).fold(0.0, f64::max);
    let max_relative_jump = max_jump / value.max(1.0);
    Ok(MeanSquare { value, max_relative_jump, resolution_warning: max_relative_jump > OSCILLATION_THRESHOLD })
}
