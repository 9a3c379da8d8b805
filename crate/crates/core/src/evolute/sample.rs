use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::scalar::truncate_f64;
use crate::geometry::{Point, Polygon};

/// Decimal digits kept when converting sampled coordinates to rationals.
pub const SAMPLE_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ParametricCurve {
    /// `(a cos t, b sin t)`.
    Ellipse { a: f64, b: f64 },
    /// Polar curve `r = 1 + amplitude * sin(petals * t)`.
    Flower { petals: u32, amplitude: f64 },
}

impl ParametricCurve {
    pub fn point(&self, t: f64) -> (f64, f64) {
        match *self {
            ParametricCurve::Ellipse { a, b } => (a * t.cos(), b * t.sin()),
            ParametricCurve::Flower { petals, amplitude } => {
                let r = 1.0 + amplitude * (petals as f64 * t).sin();
                (r * t.cos(), r * t.sin())
            }
        }
    }
}

/// Samples `m` equally spaced parameters in `[0, 2pi)`, truncating each
/// coordinate to [`SAMPLE_DIGITS`] decimals.
pub fn sample_parametric(curve: ParametricCurve, m: usize) -> Result<Polygon> {
    if m < 8 {
        return Err(Error::TooFewVertices { required: 8, found: m });
    }
    let vertices = (0..m)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / m as f64;
            let (x, y) = curve.point(t);
            Ok(Point::new(truncate_f64(x, SAMPLE_DIGITS)?, truncate_f64(y, SAMPLE_DIGITS)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Polygon::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_convex;

    #[test]
    fn ellipse_sample_is_convex_counterclockwise() {
        let p = sample_parametric(ParametricCurve::Ellipse { a: 1.0, b: 0.63 }, 64).unwrap();
        assert_eq!(p.len(), 64);
        assert!(!p.was_reoriented());
        assert!(is_convex(&p));
        assert_eq!(p.vertices()[0], Point::from_ints(1, 0));
    }

    #[test]
    fn too_few_samples() {
        assert!(sample_parametric(ParametricCurve::Ellipse { a: 1.0, b: 1.0 }, 7).is_err());
    }
}
