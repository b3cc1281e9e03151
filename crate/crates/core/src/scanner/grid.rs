use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_util::complex;
use crate::zeta_kernels::{ComplexPoint, StripRegion};

/// Default grid resolution.
pub const DEFAULT_RESOLUTION: f64 = 0.01;

/// Slack for floating-point comparisons of grid geometry.
const GEOM_EPS: f64 = 1e-12;

/// A compact subset of the strip.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Rectangle { sigma_lo: f64, sigma_hi: f64, t_lo: f64, t_hi: f64 },
    Disk {
        #[serde(with = "complex")]
        center: Complex64,
        radius: f64,
    },
}

impl Shape {
    pub fn rectangle(sigma_lo: f64, sigma_hi: f64, t_lo: f64, t_hi: f64) -> Self {
        Shape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi }
    }

    pub fn disk(center: Complex64, radius: f64) -> Self {
        Shape::Disk { center, radius }
    }

    /// `(sigma_min, sigma_max, t_min, t_max)`.
    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        match *self {
            Shape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi } => (sigma_lo, sigma_hi, t_lo, t_hi),
            Shape::Disk { center, radius } => {
                (center.re - radius, center.re + radius, center.im - radius, center.im + radius)
            }
        }
    }

    pub fn contains(&self, s: Complex64) -> bool {
        match *self {
            Shape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi } => {
                s.re >= sigma_lo && s.re <= sigma_hi && s.im >= t_lo && s.im <= t_hi
            }
            Shape::Disk { center, radius } => (s - center).norm() <= radius,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Shape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi } => {
                [sigma_lo, sigma_hi, t_lo, t_hi].iter().all(|x| x.is_finite()) && sigma_lo <= sigma_hi && t_lo <= t_hi
            }
            Shape::Disk { center, radius } => center.re.is_finite() && center.im.is_finite() && radius >= 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("malformed shape {self:?}")))
        }
    }
}

/// Grid points covering a shape, at most `resolution` apart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompactSetGrid {
    pub shape: Shape,
    pub resolution: f64,
    pub points: Vec<ComplexPoint>,
}

impl CompactSetGrid {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn complex_points(&self) -> Vec<Complex64> {
        self.points.iter().map(|p| p.to_c64()).collect()
    }

    /// Checks that the shape sits inside `ambient` with margin at least the resolution.
    pub fn check_inside(&self, ambient: &StripRegion) -> Result<()> {
        check_shape(&self.shape, self.resolution, ambient)
    }
}

fn check_shape(shape: &Shape, resolution: f64, ambient: &StripRegion) -> Result<()> {
    let (s0, s1, t0, t1) = shape.bounds();
    let margin = resolution - GEOM_EPS;
    if shape.contains(Complex64::new(1.0, 0.0)) {
        return Err(Error::ShapeOutsideStrip(format!("{shape:?} contains the pole s = 1")));
    }
    if s0 - ambient.sigma_lo < margin || ambient.sigma_hi - s1 < margin || ambient.t_bound - t0.abs().max(t1.abs()) < margin
    {
        return Err(Error::ShapeOutsideStrip(format!(
            "{shape:?} is not inside sigma in ({}, {}), |t| < {} with margin {resolution}",
            ambient.sigma_lo, ambient.sigma_hi, ambient.t_bound
        )));
    }
    Ok(())
}

fn axis(lo: f64, hi: f64, resolution: f64) -> Vec<f64> {
    let span = hi - lo;
    if span <= 0.0 {
        return vec![lo];
    }
    let n = (span / resolution - GEOM_EPS).ceil() as usize + 1;
    (0..n).map(|i| if i + 1 == n { hi } else { lo + span * i as f64 / (n - 1) as f64 }).collect()
}

/// Regular grid over `shape`: an evenly spaced tensor grid including the edges
/// for rectangles, lattice points of spacing `resolution` around the center for disks.
pub fn grid_compact(shape: Shape, resolution: f64, ambient: &StripRegion) -> Result<CompactSetGrid> {
    if !(resolution > 0.0) || !resolution.is_finite() {
        return Err(Error::InvalidInput(format!("resolution {resolution} must be positive")));
    }
    shape.validate()?;
    check_shape(&shape, resolution, ambient)?;
    let points: Vec<ComplexPoint> = match shape {
        Shape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi } => {
            let ss = axis(sigma_lo, sigma_hi, resolution);
            let ts = axis(t_lo, t_hi, resolution);
            ss.iter().flat_map(|&s| ts.iter().map(move |&t| ComplexPoint { sigma: s, t })).collect()
        }
        Shape::Disk { center, radius } => {
            let r = (radius / resolution + GEOM_EPS).floor() as i64;
            let lim = (radius / resolution).powi(2) * (1.0 + GEOM_EPS) + GEOM_EPS;
            let mut pts = Vec::new();
            for i in -r..=r {
                for j in -r..=r {
                    if ((i * i + j * j) as f64) <= lim {
                        pts.push(ComplexPoint {
                            sigma: center.re + i as f64 * resolution,
                            t: center.im + j as f64 * resolution,
                        });
                    }
                }
            }
            pts
        }
    };
    if points.is_empty() {
        return Err(Error::InvalidInput("grid has no points".into()));
    }
    Ok(CompactSetGrid { shape, resolution, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip() -> StripRegion {
        StripRegion::critical(f64::INFINITY)
    }

    #[test]
    fn rectangle_count() {
        let g = grid_compact(Shape::rectangle(0.8, 0.9, -0.1, 0.1), 0.05, &strip()).unwrap();
        assert_eq!(g.len(), 15);
        assert!(g.points.iter().any(|p| p.sigma == 0.9 && p.t == 0.1));
    }

    #[test]
    fn disk_matches_lattice_count() {
        let center = Complex64::new(0.85, 0.0);
        let g = grid_compact(Shape::disk(center, 0.04), 0.01, &strip()).unwrap();
        let brute = (-4i32..=4).flat_map(|i| (-4i32..=4).map(move |j| (i, j))).filter(|(i, j)| i * i + j * j <= 16).count();
        assert_eq!(g.len(), brute);
        assert!(g.points.iter().all(|p| (p.to_c64() - center).norm() <= 0.04 + 1e-12));
        assert_eq!(grid_compact(Shape::disk(center, 0.03), 0.01, &strip()).unwrap().len(), 29);
    }

    #[test]
    fn shapes_outside_strip() {
        let touch = grid_compact(Shape::rectangle(0.8, 1.0, -0.1, 0.1), 0.05, &strip());
        assert!(matches!(touch, Err(Error::ShapeOutsideStrip(_))));
        let close = grid_compact(Shape::rectangle(0.8, 0.97, -0.1, 0.1), 0.05, &strip());
        assert!(matches!(close, Err(Error::ShapeOutsideStrip(_))));
        let wide = StripRegion::new(0.5, 2.0, 10.0).unwrap();
        let pole = grid_compact(Shape::disk(Complex64::new(1.0, 0.0), 0.1), 0.05, &wide);
        assert!(matches!(pole, Err(Error::ShapeOutsideStrip(_))));
        let high = grid_compact(Shape::rectangle(0.7, 0.8, 9.0, 9.98), 0.05, &wide);
        assert!(matches!(high, Err(Error::ShapeOutsideStrip(_))));
    }

    #[test]
    fn spacing_bound() {
        let g = grid_compact(Shape::rectangle(0.6, 0.73, 0.0, 0.3), 0.04, &strip()).unwrap();
        let mut sig: Vec<f64> = g.points.iter().map(|p| p.sigma).collect();
        sig.sort_by(f64::total_cmp);
        sig.dedup();
        assert!(sig.windows(2).all(|w| w[1] - w[0] <= 0.04 + 1e-12));
        assert_eq!(sig.first(), Some(&0.6));
        assert_eq!(sig.last(), Some(&0.73));
    }
}
