//! Global, local and radial extremal vertices.
//!
//! The neighbouring circle `C[i]` passes through `V[i-1], V[i], V[i+1]`.
//! A vertex is globally maximal when `C[i]` is empty (no other vertex strictly
//! inside) and globally minimal when it is full. Local extremality compares
//! consecutive vertices by discrete curvature; radial extremality compares the
//! radii of consecutive neighbouring circles.

mod bose;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{circumradius_sq, CirclePosition, Orientation, Polygon, Scalar};

pub(crate) use bose::bose_counts_with;
pub use bose::{bose_counts, classify_circle, Adjacency, BoseCounts, CircleClassification, Containment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexSign {
    /// Left turn on a counterclockwise traversal.
    Positive,
    Negative,
}

/// Discrete curvature order between consecutive vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureRelation {
    Greater,
    Less,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremality {
    Max,
    Min,
    Neither,
}

impl Extremality {
    pub fn is_extremal(self) -> bool {
        self != Extremality::Neither
    }

    /// Swaps `Max` and `Min`.
    pub fn opposite(self) -> Self {
        match self {
            Extremality::Max => Extremality::Min,
            Extremality::Min => Extremality::Max,
            Extremality::Neither => Extremality::Neither,
        }
    }
}

/// How radial extremality treats equal consecutive radii.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialMode {
    /// Equal radii are an error.
    #[default]
    Strict,
    /// A run of equal radii is extremal as a whole when both outer
    /// neighbours are on the same side.
    PlateauExtremal,
}

pub fn vertex_sign(p: &Polygon, i: usize) -> Result<VertexSign> {
    p.check_index(i)?;
    match p.turn_at(i) {
        Orientation::Left => Ok(VertexSign::Positive),
        Orientation::Right => Ok(VertexSign::Negative),
        Orientation::Collinear => Err(Error::CollinearTriple { index: i }),
    }
}

fn require_curvature_window(p: &Polygon) -> Result<()> {
    p.require_closed()?;
    if p.len() < 4 {
        return Err(Error::TooFewVertices { required: 4, found: p.len() });
    }
    Ok(())
}

/// Compares the discrete curvature of `V[i]` with that of `V[i+1]`.
///
/// `V[i]` exceeds `V[i+1]` exactly when `V[i+2]` lies outside `C[i]` and
/// `V[i+1]` is positive, or inside `C[i]` and `V[i+1]` is negative. Swapping
/// both "greater/less" and "inside/outside" for a negative `V[i]` leaves the
/// rule unchanged, so the sign of `V[i]` only matters through `C[i]` itself.
pub fn curvature_compare(p: &Polygon, i: usize) -> Result<CurvatureRelation> {
    p.check_index(i)?;
    require_curvature_window(p)?;
    vertex_sign(p, i)?;
    let next_sign = vertex_sign(p, p.next(i))?;
    let pos =
        p.in_circle_at(p.prev(i), i, p.next(i), p.offset(i, 2)).map_err(|_| Error::CollinearTriple { index: i })?;
    let greater = match (next_sign, pos) {
        (_, CirclePosition::On) => return Err(Error::OnCircleDegenerate { index: i }),
        (VertexSign::Positive, CirclePosition::Outside) | (VertexSign::Negative, CirclePosition::Inside) => true,
        _ => false,
    };
    Ok(if greater { CurvatureRelation::Greater } else { CurvatureRelation::Less })
}

/// Local extremality: `V[i-1] < V[i] > V[i+1]` is a maximum.
pub fn local_extremality(p: &Polygon, i: usize) -> Result<Extremality> {
    let before = curvature_compare(p, p.prev(i))?;
    let after = curvature_compare(p, i)?;
    let label = local_from_relations(before, after);
    if cfg!(debug_assertions) && crate::geometry::is_convex(p) {
        debug_assert_eq!(convex_two_point_label(p, i), Ok(label), "vertex {i}");
    }
    Ok(label)
}

fn local_from_relations(before: CurvatureRelation, after: CurvatureRelation) -> Extremality {
    match (before, after) {
        (CurvatureRelation::Less, CurvatureRelation::Greater) => Extremality::Max,
        (CurvatureRelation::Greater, CurvatureRelation::Less) => Extremality::Min,
        _ => Extremality::Neither,
    }
}

/// For convex polygons: maximal iff `V[i-2]` and `V[i+2]` are both outside
/// `C[i]`, minimal iff both are inside.
pub fn convex_two_point_label(p: &Polygon, i: usize) -> Result<Extremality> {
    require_curvature_window(p)?;
    let (a, c) = (p.prev(i), p.next(i));
    let left = p.in_circle_at(a, i, c, p.offset(i, -2))?;
    let right = p.in_circle_at(a, i, c, p.offset(i, 2))?;
    Ok(match (left, right) {
        (CirclePosition::Outside, CirclePosition::Outside) => Extremality::Max,
        (CirclePosition::Inside, CirclePosition::Inside) => Extremality::Min,
        (CirclePosition::On, _) | (_, CirclePosition::On) => return Err(Error::OnCircleDegenerate { index: i }),
        _ => Extremality::Neither,
    })
}

/// Global extremality from the contents of the neighbouring circle.
///
/// For a triangle the neighbouring circle holds no other vertex and counts
/// as empty.
pub fn global_extremality(p: &Polygon, i: usize) -> Result<Extremality> {
    p.check_index(i)?;
    p.require_closed()?;
    let c = classify_circle(p, p.prev(i), i, p.next(i))?;
    Ok(match c.containment {
        Containment::Empty => Extremality::Max,
        Containment::Full => Extremality::Min,
        Containment::Mixed => Extremality::Neither,
    })
}

/// Squared radii of all neighbouring circles.
pub fn neighbour_radii_sq(p: &Polygon) -> Result<Vec<Scalar>> {
    p.require_closed()?;
    (0..p.len())
        .map(|i| {
            circumradius_sq(p.vertex(p.prev(i)), p.vertex(i), p.vertex(p.next(i)))
                .map_err(|_| Error::CollinearTriple { index: i })
        })
        .collect()
}

/// Radial extremality: `R[i-1] < R[i] > R[i+1]` is a maximum.
pub fn radial_extremality(p: &Polygon, i: usize, mode: RadialMode) -> Result<Extremality> {
    p.check_index(i)?;
    let radii = neighbour_radii_sq(p)?;
    radial_label(&radii, i, mode)
}

pub(crate) fn radial_label(radii: &[Scalar], i: usize, mode: RadialMode) -> Result<Extremality> {
    let n = radii.len();
    let (prev, next) = ((i + n - 1) % n, (i + 1) % n);
    match mode {
        RadialMode::Strict => {
            for j in [prev, next] {
                if radii[j] == radii[i] {
                    let (first, second) = if j == prev { (prev, i) } else { (i, next) };
                    return Err(Error::RadiusTie { first, second });
                }
            }
            Ok(if radii[prev] < radii[i] && radii[next] < radii[i] {
                Extremality::Max
            } else if radii[prev] > radii[i] && radii[next] > radii[i] {
                Extremality::Min
            } else {
                Extremality::Neither
            })
        }
        RadialMode::PlateauExtremal => {
            let r = &radii[i];
            let mut lo = 0;
            while lo < n && radii[(i + n - lo - 1) % n] == *r {
                lo += 1;
            }
            if lo == n {
                return Ok(Extremality::Neither);
            }
            let mut hi = 0;
            while radii[(i + hi + 1) % n] == *r {
                hi += 1;
            }
            let left = &radii[(i + n - lo - 1) % n];
            let right = &radii[(i + hi + 1) % n];
            Ok(if left < r && right < r {
                Extremality::Max
            } else if left > r && right > r {
                Extremality::Min
            } else {
                Extremality::Neither
            })
        }
    }
}

/// Deletes vertex `i`.
pub fn remove_vertex(p: &Polygon, i: usize) -> Result<Polygon> {
    p.without_vertex(i)
}

/// Labels of one vertex under the three notions of extremality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLabels {
    pub sign: VertexSign,
    pub global: Extremality,
    pub local: Extremality,
    pub radial: Extremality,
}

/// Per-vertex labels and their counts.
///
/// `s_*`, `l_*` and `r_*` count global, local and radial extremes; the
/// `_plus` counts are minima and `_minus` counts maxima.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalityReport {
    pub labels: Vec<VertexLabels>,
    pub s_plus: usize,
    pub s_minus: usize,
    pub l_plus: usize,
    pub l_minus: usize,
    pub r_plus: usize,
    pub r_minus: usize,
    /// Present for convex polygons within the size limit.
    pub bose: Option<BoseCounts>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub radial_mode: RadialMode,
    /// Largest polygon for which the cubic circle census runs.
    pub bose_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { radial_mode: RadialMode::Strict, bose_limit: 64 }
    }
}

/// Labels every vertex.
pub fn analyze(p: &Polygon) -> Result<ExtremalityReport> {
    analyze_with(p, AnalyzeOptions::default())
}

pub fn analyze_with(p: &Polygon, opts: AnalyzeOptions) -> Result<ExtremalityReport> {
    require_curvature_window(p)?;
    let n = p.len();
    let signs = (0..n).map(|i| vertex_sign(p, i)).collect::<Result<Vec<_>>>()?;
    let relations = (0..n).map(|i| curvature_compare(p, i)).collect::<Result<Vec<_>>>()?;
    let radii = neighbour_radii_sq(p)?;
    let convex = crate::geometry::is_convex(p);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let local = local_from_relations(relations[(i + n - 1) % n], relations[i]);
        if cfg!(debug_assertions) && convex {
            debug_assert_eq!(convex_two_point_label(p, i), Ok(local), "vertex {i}");
        }
        labels.push(VertexLabels {
            sign: signs[i],
            global: global_extremality(p, i)?,
            local,
            radial: radial_label(&radii, i, opts.radial_mode)?,
        });
    }
    let count = |f: &dyn Fn(&VertexLabels) -> bool| labels.iter().filter(|l| f(l)).count();
    let bose = if convex && n <= opts.bose_limit { Some(bose_counts(p)?) } else { None };
    Ok(ExtremalityReport {
        s_plus: count(&|l| l.global == Extremality::Min),
        s_minus: count(&|l| l.global == Extremality::Max),
        l_plus: count(&|l| l.local == Extremality::Min),
        l_minus: count(&|l| l.local == Extremality::Max),
        r_plus: count(&|l| l.radial == Extremality::Min),
        r_minus: count(&|l| l.radial == Extremality::Max),
        labels,
        bose,
    })
}

/// Number of global maxima (empty neighbouring circles).
pub fn count_global_max(p: &Polygon) -> Result<usize> {
    count_global(p, Extremality::Max)
}

/// Number of global minima (full neighbouring circles).
pub fn count_global_min(p: &Polygon) -> Result<usize> {
    count_global(p, Extremality::Min)
}

fn count_global(p: &Polygon, which: Extremality) -> Result<usize> {
    let mut k = 0;
    for i in 0..p.len() {
        if global_extremality(p, i)? == which {
            k += 1;
        }
    }
    Ok(k)
}

/// Number of local maxima.
pub fn count_local_max(p: &Polygon) -> Result<usize> {
    require_curvature_window(p)?;
    let n = p.len();
    let rel = (0..n).map(|i| curvature_compare(p, i)).collect::<Result<Vec<_>>>()?;
    Ok((0..n).filter(|&i| local_from_relations(rel[(i + n - 1) % n], rel[i]) == Extremality::Max).count())
}

/// Number of local minima.
pub fn count_local_min(p: &Polygon) -> Result<usize> {
    require_curvature_window(p)?;
    let n = p.len();
    let rel = (0..n).map(|i| curvature_compare(p, i)).collect::<Result<Vec<_>>>()?;
    Ok((0..n).filter(|&i| local_from_relations(rel[(i + n - 1) % n], rel[i]) == Extremality::Min).count())
}
