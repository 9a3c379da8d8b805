use serde::Serialize;
use thiserror::Error;

/// A witness that a polygon is not in general position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericityWitness {
    /// Three vertices on a common line.
    Collinear([usize; 3]),
    /// Four vertices on a common circle.
    Concyclic([usize; 4]),
}

impl std::fmt::Display for GenericityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenericityWitness::Collinear(t) => write!(f, "vertices {t:?} are collinear"),
            GenericityWitness::Concyclic(q) => write!(f, "vertices {q:?} are concyclic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error("points are collinear")]
    CollinearInput,
    #[error("vertex {index} and its neighbours are collinear")]
    CollinearTriple { index: usize },
    #[error("turning angle at vertex {index} is undefined (collinear neighbours)")]
    DegenerateAngle { index: usize },
    #[error("vertex {index}: the next-but-one vertex lies on the neighbouring circle")]
    OnCircleDegenerate { index: usize },
    #[error("vertex {fourth} lies on the circle through vertices {triple:?}")]
    OnCircleWitness { triple: [usize; 3], fourth: usize },
    #[error("neighbouring circles at vertices {first} and {second} have equal radii")]
    RadiusTie { first: usize, second: usize },
    #[error("polygon is not generic: {0}")]
    NotGeneric(GenericityWitness),
    #[error("polygon is not convex (witness vertex {index})")]
    NotConvex { index: usize },
    #[error("operation requires a closed polygon")]
    NotClosed,
    #[error("need at least {required} vertices, found {found}")]
    TooFewVertices { required: usize, found: usize },
    #[error("vertices {first} and {second} coincide")]
    DuplicateVertex { first: usize, second: usize },
    #[error("index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("evolute is degenerate (all centres coincide)")]
    DegenerateEvolute,
    #[error("vertex {index}: angle difference {difference} is neither 0 nor pi")]
    UnclassifiableAngle { index: usize, difference: f64 },
    #[error("triangulation has no balanced diagonal")]
    NoBalancedDiagonal,
    #[error("diagonal endpoints {a} and {b} are adjacent or equal")]
    AdjacentEndpoints { a: usize, b: usize },
    #[error("diagonal ({a}, {b}) leaves a part with only {smaller} vertices")]
    PartTooSmall { a: usize, b: usize, smaller: usize },
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("edge flipping did not terminate within {flips} flips")]
    FlipBudgetExceeded { flips: usize },
    #[error("base case with {n} vertices has count {count}, expected 2")]
    RecursionBaseViolated { n: usize, count: usize },
    #[error("inequality {name} failed: {lhs} < {rhs}")]
    InequalityViolated { name: String, lhs: i64, rhs: i64 },
    #[error("no acceptable polygon after {attempts} attempts")]
    RejectionBudgetExceeded { attempts: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
