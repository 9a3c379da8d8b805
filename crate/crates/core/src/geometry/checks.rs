//! Whole-polygon predicates with witnesses.

use std::cmp::Ordering;

use serde::Serialize;

use super::point::{CirclePosition, Orientation};
use super::polygon::Polygon;
use super::predicates::circumcenter;
use crate::error::{Error, GenericityWitness, Result};

/// Witness lists are truncated to this many entries.
pub const MAX_WITNESSES: usize = 32;

/// Structural predicates of a polygon, each with the indices that refute it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolygonPredicates {
    pub convex: bool,
    pub simple: bool,
    pub ccw: bool,
    /// `None` when the exhaustive check was skipped.
    pub generic: Option<bool>,
    pub coherent: bool,
    pub reflex_vertices: Vec<usize>,
    pub crossing_edges: Vec<(usize, usize)>,
    pub collinear_triples: Vec<[usize; 3]>,
    pub concyclic_quadruples: Vec<[usize; 4]>,
    pub incoherent_vertices: Vec<usize>,
    /// Consecutive vertices whose neighbouring circles have equal radii.
    pub radius_ties: Vec<(usize, usize)>,
}

/// Evaluates every predicate, including the exhaustive genericity scan.
pub fn polygon_predicates(p: &Polygon) -> PolygonPredicates {
    polygon_predicates_limited(p, usize::MAX)
}

/// Like [`polygon_predicates`], skipping the quartic genericity scan when the
/// polygon has more than `generic_limit` vertices.
pub fn polygon_predicates_limited(p: &Polygon, generic_limit: usize) -> PolygonPredicates {
    let reflex_vertices: Vec<usize> = (0..p.len()).filter(|&i| p.turn_at(i) != Orientation::Left).collect();
    let crossing_edges = crossing_edges(p);
    let simple = crossing_edges.is_empty();
    let ccw = p.is_ccw();
    let convex = reflex_vertices.is_empty() && simple && ccw;
    let (generic, collinear_triples, concyclic_quadruples) = if p.len() <= generic_limit {
        let (c3, c4) = genericity_witnesses(p, MAX_WITNESSES);
        (Some(c3.is_empty() && c4.is_empty()), c3, c4)
    } else {
        (None, Vec::new(), Vec::new())
    };
    let incoherent_vertices: Vec<usize> = (0..p.len()).filter(|&i| !coherent_at(p, i, ccw)).collect();
    PolygonPredicates {
        convex,
        simple,
        ccw,
        generic,
        coherent: incoherent_vertices.is_empty(),
        reflex_vertices,
        crossing_edges,
        collinear_triples,
        concyclic_quadruples,
        incoherent_vertices,
        radius_ties: radius_ties(p),
    }
}

fn crossing_edges(p: &Polygon) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..n {
        // Consecutive edges meet at a vertex; they overlap only if they fold back.
        let (a, b, c) = (i, p.next(i), p.next(p.next(i)));
        if p.orientation_at(a, b, c) == Orientation::Collinear
            && p.lattice().dot_sign((b, a), (b, c)) == Ordering::Greater
        {
            out.push((i, p.next(i)));
        }
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if p.segments_touch((i, p.next(i)), (j, p.next(j))) {
                out.push((i, j));
                if out.len() >= MAX_WITNESSES {
                    return out;
                }
            }
        }
    }
    out
}

/// Fast convexity test: all left turns and a single winding of edge directions.
pub fn is_convex(p: &Polygon) -> bool {
    convexity_witness(p).is_none()
}

/// First vertex where convexity fails, if any.
pub fn convexity_witness(p: &Polygon) -> Option<usize> {
    let n = p.len();
    if let Some(i) = (0..n).find(|&i| p.turn_at(i) != Orientation::Left) {
        return Some(i);
    }
    // With only left turns the edge directions rotate monotonically; count wraps past 2pi.
    let mut wraps = 0;
    for i in 0..n {
        let e = (i, p.next(i));
        let f = (p.next(i), p.next(p.next(i)));
        if p.lattice().direction_cmp(f, e) != Ordering::Greater {
            wraps += 1;
        }
    }
    if wraps == 1 {
        None
    } else {
        Some(0)
    }
}

pub fn require_convex(p: &Polygon) -> Result<()> {
    match convexity_witness(p) {
        None => Ok(()),
        Some(index) => Err(Error::NotConvex { index }),
    }
}

/// Collinear triples and concyclic quadruples, up to `limit` of each.
pub fn genericity_witnesses(p: &Polygon, limit: usize) -> (Vec<[usize; 3]>, Vec<[usize; 4]>) {
    let n = p.len();
    let mut collinear = Vec::new();
    let mut concyclic = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if p.orientation_at(i, j, k) == Orientation::Collinear {
                    if collinear.len() < limit {
                        collinear.push([i, j, k]);
                    }
                    continue;
                }
                if concyclic.len() >= limit {
                    continue;
                }
                for l in k + 1..n {
                    if p.in_circle_at(i, j, k, l) == Ok(CirclePosition::On) {
                        concyclic.push([i, j, k, l]);
                        if concyclic.len() >= limit {
                            break;
                        }
                    }
                }
            }
        }
    }
    (collinear, concyclic)
}

/// First genericity witness, if any.
pub fn genericity_witness(p: &Polygon) -> Option<GenericityWitness> {
    let (c3, c4) = genericity_witnesses(p, 1);
    c3.first()
        .map(|t| GenericityWitness::Collinear(*t))
        .or_else(|| c4.first().map(|q| GenericityWitness::Concyclic(*q)))
}

pub fn require_generic(p: &Polygon) -> Result<()> {
    match genericity_witness(p) {
        None => Ok(()),
        Some(w) => Err(Error::NotGeneric(w)),
    }
}

/// Whether the centre of the neighbouring circle at `i` lies in the closed
/// cone spanned by the polygon's interior at `V[i]`.
pub fn is_coherent_at(p: &Polygon, i: usize) -> bool {
    coherent_at(p, i, p.is_ccw())
}

fn coherent_at(p: &Polygon, i: usize, ccw: bool) -> bool {
    let (a, c) = (p.prev(i), p.next(i));
    let (va, vi, vc) = (p.vertex(a), p.vertex(i), p.vertex(c));
    let Ok(center) = circumcenter(va, vi, vc) else {
        return false;
    };
    // The interior lies to the left of each edge of a counterclockwise polygon.
    let side = |from, to| {
        let o = super::predicates::orientation(from, to, &center);
        let o = if ccw { o } else { flip(o) };
        o != Orientation::Right
    };
    let after = side(vi, vc);
    let before = side(va, vi);
    let turn = if ccw { p.turn_at(i) } else { flip(p.turn_at(i)) };
    match turn {
        Orientation::Left => after && before,
        _ => after || before,
    }
}

fn flip(o: Orientation) -> Orientation {
    match o {
        Orientation::Left => Orientation::Right,
        Orientation::Right => Orientation::Left,
        Orientation::Collinear => Orientation::Collinear,
    }
}

fn radius_ties(p: &Polygon) -> Vec<(usize, usize)> {
    let n = p.len();
    let radii: Vec<Option<_>> = (0..n)
        .map(|i| super::predicates::circumradius_sq(p.vertex(p.prev(i)), p.vertex(i), p.vertex(p.next(i))).ok())
        .collect();
    (0..n)
        .filter_map(|i| {
            let j = p.next(i);
            match (&radii[i], &radii[j]) {
                (Some(r), Some(s)) if r == s => Some((i, j)),
                _ => None,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_is_convex_simple_not_generic() {
        let p = Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let pr = polygon_predicates(&p);
        assert!(pr.convex && pr.simple && pr.ccw && pr.coherent);
        assert_eq!(pr.generic, Some(false));
        assert_eq!(pr.concyclic_quadruples, vec![[0, 1, 2, 3]]);
        assert_eq!(pr.radius_ties.len(), 4);
    }

    #[test]
    fn bowtie_is_not_simple() {
        let p = Polygon::as_given(
            [(0, 0), (2, 2), (2, 0), (0, 2)].iter().map(|&(x, y)| crate::geometry::Point::from_ints(x, y)).collect(),
        )
        .unwrap();
        let pr = polygon_predicates(&p);
        assert!(!pr.simple);
        assert!(!pr.convex);
        assert_eq!(pr.crossing_edges, vec![(0, 2)]);
    }

    #[test]
    fn pentagram_is_not_convex_despite_left_turns() {
        let star = Polygon::from_ints(&[(0, 100), (59, -81), (-95, 31), (95, 31), (-59, -81)]).unwrap();
        assert!((0..5).all(|i| star.turn_at(i) == Orientation::Left));
        assert!(!is_convex(&star));
        let pentagon = Polygon::from_ints(&[(0, 100), (-95, 31), (-59, -81), (59, -81), (95, 31)]).unwrap();
        assert!(is_convex(&pentagon));
    }

    #[test]
    fn reflex_vertex_reported() {
        let p = Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)]).unwrap();
        let pr = polygon_predicates(&p);
        assert!(pr.simple);
        assert!(!pr.convex);
        assert_eq!(pr.reflex_vertices, vec![3]);
    }

    #[test]
    fn obtuse_neighbour_breaks_coherence() {
        // The triangle (0,0),(10,0),(9,2) is obtuse at (9,2), pushing the centre
        // of the circle at vertex 1 below the x-axis.
        let p = Polygon::from_ints(&[(0, 0), (10, 0), (9, 2), (0, 3)]).unwrap();
        assert!(is_convex(&p));
        assert!(!is_coherent_at(&p, 1));
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert!((0..4).all(|i| is_coherent_at(&sq, i)));
    }
}
