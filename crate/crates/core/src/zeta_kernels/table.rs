use num_complex::Complex64;

/// Dirichlet-type terms `w_m exp(-s_g L_m)` precomputed for a fixed point set
/// `{s_g}`, so that `sum_m w_m exp(-(s_g + i tau) L_m)` costs one `sin_cos` per
/// term for all points at once.
///
/// Storage is term-major with split real/imaginary parts.
#[derive(Debug, Clone)]
pub struct ShiftTable {
    logs: Vec<f64>,
    width: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl ShiftTable {
    pub fn new(weights: &[Complex64], logs: Vec<f64>, points: &[Complex64]) -> Self {
        assert_eq!(weights.len(), logs.len());
        let width = points.len();
        let mut re = Vec::with_capacity(width * logs.len());
        let mut im = Vec::with_capacity(width * logs.len());
        for (w, &l) in weights.iter().zip(&logs) {
            for p in points {
                let v = *w * super::hurwitz::pow_neg(l, *p);
                re.push(v.re);
                im.push(v.im);
            }
        }
        ShiftTable { logs, width, re, im }
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.logs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.logs.is_empty()
    }

    /// Sums the first `terms` terms at shift `tau` into `out` (overwriting it).
    pub fn eval_shift(&self, tau: f64, terms: usize, out: &mut [Complex64]) {
        assert_eq!(out.len(), self.width);
        assert!(terms <= self.logs.len());
        let w = self.width;
        let mut acc_re = vec![0.0f64; w];
        let mut acc_im = vec![0.0f64; w];
        for (m, &l) in self.logs[..terms].iter().enumerate() {
            let (us, uc) = (-tau * l).sin_cos();
            let row_re = &self.re[m * w..(m + 1) * w];
            let row_im = &self.im[m * w..(m + 1) * w];
            for g in 0..w {
                acc_re[g] += uc * row_re[g] - us * row_im[g];
                acc_im[g] += uc * row_im[g] + us * row_re[g];
            }
        }
        for (o, (r, i)) in out.iter_mut().zip(acc_re.into_iter().zip(acc_im)) {
            *o = Complex64::new(r, i);
        }
    }
}
