//! Splitting convex polygons along diagonals and comparing extremal counts of
//! the whole with those of the parts.

mod certificate;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremality::{count_global_max, count_global_min, count_local_max, count_local_min};
use crate::geometry::{require_convex, require_generic, Polygon};
use crate::triangulation::{is_boundary, EdgeClassifier, EdgeKind};

pub use certificate::{
    four_vertex_via_decomposition, CertificateNode, CertificateStep, FourVertexCertificate, Quantity, SplitRule,
};

/// Smallest part a decomposition may produce.
pub const MIN_PART: usize = 4;

/// A polygon cut along the diagonal `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub parent: Polygon,
    pub diagonal: (usize, usize),
    /// Vertices `a..=b`.
    pub part1: Polygon,
    /// Vertices `b..n` followed by `0..=a`.
    pub part2: Polygon,
    /// Parent index of each vertex of `part1`.
    pub part1_indices: Vec<usize>,
    pub part2_indices: Vec<usize>,
}

impl Decomposition {
    /// Splits without checking convexity.
    pub fn split(p: &Polygon, a: usize, b: usize) -> Result<Self> {
        p.require_closed()?;
        p.check_index(a)?;
        p.check_index(b)?;
        let n = p.len();
        if a == b || is_boundary(n, a, b) {
            return Err(Error::AdjacentEndpoints { a, b });
        }
        let (a, b) = (a.min(b), a.max(b));
        let part1_indices: Vec<usize> = (a..=b).collect();
        let part2_indices: Vec<usize> = (b..n).chain(0..=a).collect();
        let smaller = part1_indices.len().min(part2_indices.len());
        if smaller < MIN_PART {
            return Err(Error::PartTooSmall { a, b, smaller });
        }
        Ok(Decomposition {
            parent: p.clone(),
            diagonal: (a, b),
            part1: p.select(&part1_indices)?,
            part2: p.select(&part2_indices)?,
            part1_indices,
            part2_indices,
        })
    }
}

/// Cuts a convex polygon along the diagonal `(a, b)`.
pub fn decompose(p: &Polygon, a: usize, b: usize) -> Result<Decomposition> {
    p.require_closed()?;
    p.check_index(a)?;
    p.check_index(b)?;
    if a == b || is_boundary(p.len(), a, b) {
        return Err(Error::AdjacentEndpoints { a, b });
    }
    require_convex(p)?;
    Decomposition::split(p, a, b)
}

/// Global and local extremal counts of one polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub n: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub l_plus: usize,
    pub l_minus: usize,
}

impl Counts {
    pub fn of(p: &Polygon) -> Result<Self> {
        Ok(Counts {
            n: p.len(),
            s_plus: count_global_min(p)?,
            s_minus: count_global_max(p)?,
            l_plus: count_local_min(p)?,
            l_minus: count_local_max(p)?,
        })
    }
}

/// One instance of `lhs >= rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityRecord {
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub holds: bool,
}

impl InequalityRecord {
    /// `whole >= first + second - loss`.
    pub fn new(whole: usize, first: usize, second: usize, loss: i64) -> Self {
        let lhs = whole as i64;
        let rhs = first as i64 + second as i64 - loss;
        InequalityRecord { lhs, rhs, slack: lhs - rhs, holds: lhs >= rhs }
    }
}

/// Every applicable split inequality for one decomposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub diagonal: (usize, usize),
    pub edge_kind: EdgeKind,
    pub parent: Counts,
    pub part1: Counts,
    pub part2: Counts,
    /// Global maxima lose at most three: `s-(P) >= s-(P1) + s-(P2) - 3`.
    pub global_max_any: InequalityRecord,
    /// Hexagons lose at most two.
    pub global_max_hexagon: Option<InequalityRecord>,
    /// Delaunay diagonals lose at most two global maxima.
    pub global_max_delaunay: Option<InequalityRecord>,
    /// Anti-Delaunay diagonals lose at most two global minima.
    pub global_min_anti_delaunay: Option<InequalityRecord>,
    /// Local maxima lose at most two.
    pub local_max_any: InequalityRecord,
}

impl InequalityReport {
    pub fn records(&self) -> impl Iterator<Item = (&'static str, InequalityRecord)> + '_ {
        [
            ("global_max_any", Some(self.global_max_any)),
            ("global_max_hexagon", self.global_max_hexagon),
            ("global_max_delaunay", self.global_max_delaunay),
            ("global_min_anti_delaunay", self.global_min_anti_delaunay),
            ("local_max_any", Some(self.local_max_any)),
        ]
        .into_iter()
        .filter_map(|(name, r)| r.map(|r| (name, r)))
    }

    pub fn all_hold(&self) -> bool {
        self.records().all(|(_, r)| r.holds)
    }
}

/// Evaluates the split inequalities for `d`.
pub fn verify_inequalities(d: &Decomposition) -> Result<InequalityReport> {
    require_generic(&d.parent)?;
    let classifier = EdgeClassifier::new(&d.parent)?;
    let parent = Counts::of(&d.parent)?;
    verify_with(d, &classifier, parent)
}

pub(crate) fn verify_with(d: &Decomposition, classifier: &EdgeClassifier, parent: Counts) -> Result<InequalityReport> {
    let (a, b) = d.diagonal;
    let edge_kind = classifier.kind(a, b)?;
    let p1 = Counts::of(&d.part1)?;
    let p2 = Counts::of(&d.part2)?;
    let global_max = |loss| InequalityRecord::new(parent.s_minus, p1.s_minus, p2.s_minus, loss);
    Ok(InequalityReport {
        diagonal: d.diagonal,
        edge_kind,
        parent,
        part1: p1,
        part2: p2,
        global_max_any: global_max(3),
        global_max_hexagon: (parent.n == 6).then(|| global_max(2)),
        global_max_delaunay: (edge_kind == EdgeKind::Delaunay).then(|| global_max(2)),
        global_min_anti_delaunay: (edge_kind == EdgeKind::AntiDelaunay)
            .then(|| InequalityRecord::new(parent.s_plus, p1.s_plus, p2.s_plus, 2)),
        local_max_any: InequalityRecord::new(parent.l_minus, p1.l_minus, p2.l_minus, 2),
    })
}

/// Reports for every valid diagonal and the smallest slack of each inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub reports: Vec<InequalityReport>,
    pub worst_slack: Vec<(String, i64)>,
    pub all_hold: bool,
}

/// Runs [`verify_inequalities`] on every diagonal leaving two parts of at
/// least four vertices.
pub fn audit_all_diagonals(p: &Polygon) -> Result<AuditReport> {
    require_convex(p)?;
    require_generic(p)?;
    let n = p.len();
    if n < 6 {
        return Err(Error::TooFewVertices { required: 6, found: n });
    }
    let classifier = EdgeClassifier::new(p)?;
    let parent = Counts::of(p)?;
    let diagonals: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !is_boundary(n, a, b))
        .filter(|&(a, b)| {
            let k = b - a + 1;
            k >= MIN_PART && n + 2 - k >= MIN_PART
        })
        .collect();
    let reports = diagonals
        .par_iter()
        .map(|&(a, b)| verify_with(&Decomposition::split(p, a, b)?, &classifier, parent))
        .collect::<Result<Vec<_>>>()?;
    let mut worst: Vec<(String, i64)> = Vec::new();
    for r in &reports {
        for (name, rec) in r.records() {
            match worst.iter_mut().find(|(k, _)| k == name) {
                Some((_, s)) => *s = (*s).min(rec.slack),
                None => worst.push((name.to_string(), rec.slack)),
            }
        }
    }
    let all_hold = reports.iter().all(InequalityReport::all_hold);
    Ok(AuditReport { reports, worst_slack: worst, all_hold })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> Polygon {
        Polygon::from_ints(&[(0, 0), (6, -1), (11, 1), (12, 6), (5, 9), (-1, 5)]).unwrap()
    }

    #[test]
    fn hexagon_splits_into_quadrilaterals() {
        let d = decompose(&hexagon(), 1, 4).unwrap();
        assert_eq!(d.part1.len(), 4);
        assert_eq!(d.part2.len(), 4);
        assert_eq!(d.part1_indices, vec![1, 2, 3, 4]);
        assert_eq!(d.part2_indices, vec![4, 5, 0, 1]);
    }

    #[test]
    fn small_parts_and_adjacent_endpoints_rejected() {
        assert_eq!(decompose(&hexagon(), 1, 3), Err(Error::PartTooSmall { a: 1, b: 3, smaller: 3 }));
        assert_eq!(decompose(&hexagon(), 5, 0), Err(Error::AdjacentEndpoints { a: 5, b: 0 }));
    }

    #[test]
    fn nonconvex_parent_rejected() {
        let p = Polygon::from_ints(&[(0, 0), (4, 0), (6, 2), (4, 4), (2, 1), (0, 4)]).unwrap();
        assert!(matches!(decompose(&p, 0, 3), Err(Error::NotConvex { .. })));
        assert!(Decomposition::split(&p, 0, 3).is_ok());
    }

    #[test]
    fn hexagon_inequalities_hold() {
        let d = decompose(&hexagon(), 0, 3).unwrap();
        let r = verify_inequalities(&d).unwrap();
        assert!(r.global_max_hexagon.is_some());
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.part1.s_minus, 2);
        assert_eq!(r.part2.s_minus, 2);
    }
}
