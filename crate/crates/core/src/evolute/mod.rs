//! Discrete evolutes and winding numbers.
//!
//! The evolute of a polygon is the closed polygonal line through the centres
//! of its neighbouring circles, taken in the polygon's vertex order.

mod sample;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremality::{
    curvature_compare, local_extremality, vertex_sign, CurvatureRelation, Extremality, VertexSign,
};
use crate::geometry::{circumcenter, left_angle_of, Angle, Point, Polygon};

pub use sample::{sample_parametric, ParametricCurve};

/// Default tolerance for recognising angle differences of `0` and `pi`.
pub const CUSP_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evolute {
    /// Centre of the neighbouring circle at each vertex.
    pub centers: Vec<Point>,
    /// True when every centre coincides.
    pub degenerate: bool,
}

/// Centres of all neighbouring circles.
pub fn evolute(p: &Polygon) -> Result<Evolute> {
    p.require_closed()?;
    let centers = (0..p.len())
        .map(|i| {
            circumcenter(p.vertex(p.prev(i)), p.vertex(i), p.vertex(p.next(i)))
                .map_err(|_| Error::CollinearTriple { index: i })
        })
        .collect::<Result<Vec<_>>>()?;
    let degenerate = centers.iter().all(|c| *c == centers[0]);
    Ok(Evolute { centers, degenerate })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WindingNumber {
    pub value: i64,
    /// Unrounded turning sum divided by `2pi`.
    pub raw: f64,
}

/// Left angles of a closed point cycle, in the order given.
pub fn cycle_angles(points: &[Point]) -> Result<Vec<Angle>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewVertices { required: 3, found: n });
    }
    (0..n)
        .map(|i| {
            left_angle_of(&points[(i + n - 1) % n], &points[i], &points[(i + 1) % n])
                .ok_or(Error::DegenerateAngle { index: i })
        })
        .collect()
}

/// `sum(pi - angle) / 2pi` over a closed point cycle.
pub fn winding_of_cycle(points: &[Point]) -> Result<WindingNumber> {
    let angles = cycle_angles(points)?;
    let total: f64 = angles.iter().map(|a| PI - a.radians()).sum();
    let raw = total / (2.0 * PI);
    Ok(WindingNumber { value: raw.round() as i64, raw })
}

/// Winding number (turning number) of a closed polygon.
pub fn winding_number(p: &Polygon) -> Result<WindingNumber> {
    p.require_closed()?;
    winding_of_cycle(p.vertices())
}

/// Winding number of the evolute.
pub fn evolute_winding_number(p: &Polygon) -> Result<WindingNumber> {
    let e = evolute(p)?;
    if e.degenerate {
        return Err(Error::DegenerateEvolute);
    }
    winding_of_cycle(&e.centers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CuspFlag {
    /// Polygon and evolute angles differ by `pi`.
    Cusp,
    /// Polygon and evolute angles agree.
    Flat,
}

/// Cusp flags of the evolute, from `angle(V[i]) - angle(O[i])`.
pub fn cusp_flags(p: &Polygon, tolerance: f64) -> Result<Vec<CuspFlag>> {
    let e = evolute(p)?;
    if e.degenerate {
        return Err(Error::DegenerateEvolute);
    }
    let va = cycle_angles(p.vertices())?;
    let oa = cycle_angles(&e.centers)?;
    let flags = va
        .iter()
        .zip(&oa)
        .enumerate()
        .map(|(i, (v, o))| {
            let d = v.radians() - o.radians();
            if (d.abs() - PI).abs() < tolerance {
                Ok(CuspFlag::Cusp)
            } else if d.abs() < tolerance {
                Ok(CuspFlag::Flat)
            } else {
                Err(Error::UnclassifiableAngle { index: i, difference: d })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if cfg!(debug_assertions) {
        for (i, f) in flags.iter().enumerate() {
            if let Ok(l) = local_extremality(p, i) {
                debug_assert_eq!(*f == CuspFlag::Cusp, l.is_extremal(), "cusp at vertex {i}");
            }
        }
    }
    Ok(flags)
}

/// Both sides of `N+ - N- = 2 wind(P) - 2 wind(E)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EvoluteIdentity {
    /// Local extremes at positive vertices.
    pub n_plus: usize,
    /// Local extremes at negative vertices.
    pub n_minus: usize,
    pub wind_polygon: WindingNumber,
    pub wind_evolute: WindingNumber,
    pub holds: bool,
}

pub fn verify_evolute_identity(p: &Polygon) -> Result<EvoluteIdentity> {
    let n = p.len();
    let relations = (0..n).map(|i| curvature_compare(p, i)).collect::<Result<Vec<_>>>()?;
    let (mut n_plus, mut n_minus) = (0, 0);
    for i in 0..n {
        let before = relations[(i + n - 1) % n];
        if before == relations[i] {
            continue;
        }
        match vertex_sign(p, i)? {
            VertexSign::Positive => n_plus += 1,
            VertexSign::Negative => n_minus += 1,
        }
    }
    let wind_polygon = winding_number(p)?;
    let wind_evolute = evolute_winding_number(p)?;
    let holds = n_plus as i64 - n_minus as i64 == 2 * wind_polygon.value - 2 * wind_evolute.value;
    Ok(EvoluteIdentity { n_plus, n_minus, wind_polygon, wind_evolute, holds })
}

/// Local extremes with their kind, as computed from curvature relations.
pub fn local_extremes(p: &Polygon) -> Result<Vec<(usize, Extremality)>> {
    let n = p.len();
    let relations = (0..n).map(|i| curvature_compare(p, i)).collect::<Result<Vec<_>>>()?;
    Ok((0..n)
        .filter_map(|i| match (relations[(i + n - 1) % n], relations[i]) {
            (CurvatureRelation::Less, CurvatureRelation::Greater) => Some((i, Extremality::Max)),
            (CurvatureRelation::Greater, CurvatureRelation::Less) => Some((i, Extremality::Min)),
            _ => None,
        })
        .collect())
}
