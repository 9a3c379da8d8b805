//! Exact points, polygons and the predicates everything else is built on.

mod checks;
pub(crate) mod lattice;
mod point;
mod polygon;
mod predicates;
pub mod scalar;

pub use checks::{
    convexity_witness, genericity_witness, genericity_witnesses, is_coherent_at, is_convex, polygon_predicates,
    polygon_predicates_limited, require_convex, require_generic, PolygonPredicates, MAX_WITNESSES,
};
pub use point::{Angle, Circle, CirclePosition, Orientation, Point};
pub use polygon::Polygon;
pub use predicates::{circumcenter, circumcircle, circumradius_sq, in_circle, left_angle_of, orientation};
pub use scalar::Scalar;

/// Left turning angle at vertex `i` of `p`.
pub fn left_angle(p: &Polygon, i: usize) -> crate::error::Result<Angle> {
    p.left_angle(i)
}
