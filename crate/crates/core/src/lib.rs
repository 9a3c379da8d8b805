//! Exact computational geometry for discrete four-vertex theorems.
//!
//! Polygons carry rational coordinates and every combinatorial predicate is
//! evaluated exactly. The crate classifies extremal vertices (global, local
//! and radial), builds evolutes, computes Delaunay and anti-Delaunay
//! triangulations of convex polygons, splits polygons along diagonals, and
//! checks the resulting counting identities over random and fixed inputs.

pub mod decomposition;
pub mod error;
pub mod evolute;
pub mod extremality;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod render;
pub mod triangulation;

pub use error::{Error, GenericityWitness, Result};
pub use geometry::{
    circumcenter, circumradius_sq, in_circle, left_angle, orientation, polygon_predicates, Angle, Circle,
    CirclePosition, Orientation, Point, Polygon, PolygonPredicates, Scalar,
};
