use serde::Serialize;

use super::scalar::{self, Scalar};
use crate::error::Result;

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Point {
    #[serde(with = "scalar::serde_scalar")]
    pub x: Scalar,
    #[serde(with = "scalar::serde_scalar")]
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(scalar::from_int(x), scalar::from_int(y))
    }

    /// Parses both coordinates exactly from decimal text.
    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Point::new(scalar::parse_scalar(x)?, scalar::parse_scalar(y)?))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (scalar::to_f64(&self.x), scalar::to_f64(&self.y))
    }

    pub fn dist_sq(&self, other: &Point) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", scalar::format_scalar(&self.x), scalar::format_scalar(&self.y))
    }
}

/// A circle stored by centre and squared radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circle {
    pub center: Point,
    #[serde(with = "scalar::serde_scalar")]
    pub radius_sq: Scalar,
}

/// A turning angle in radians.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct Angle(pub f64);

impl Angle {
    pub fn radians(self) -> f64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CirclePosition {
    Inside,
    Outside,
    On,
}
