//! Shared inputs for the benchmarks.

use fourvertex::harness::{generate, GeneratorConfig, GeneratorKind};
use fourvertex::Polygon;

/// A convex generic polygon with `n` vertices, fixed per `n`.
pub fn convex_polygon(n: usize) -> Polygon {
    generate(&GeneratorConfig::new(n, 0xB0B + n as u64, GeneratorKind::ConvexGeneric)).expect("generator succeeds")
}
