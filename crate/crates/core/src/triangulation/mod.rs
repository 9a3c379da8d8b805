//! Delaunay and anti-Delaunay triangulations of convex polygons.
//!
//! Both are obtained by edge flipping from a fan. A diagonal is legal for the
//! Delaunay triangulation when the vertex opposite it lies outside the
//! circumcircle of the adjacent triangle, and for the anti-Delaunay
//! triangulation when it lies inside.

mod enumerate;

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{require_convex, require_generic, CirclePosition, Polygon};

pub use enumerate::{enumerate_triangulations, random_triangulation};

/// A triangulation of a convex `n`-gon by non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Validates and builds a triangulation of an `n`-gon from its diagonals.
    pub fn from_diagonals(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { required: 3, found: n });
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            let d = (a.min(b), a.max(b));
            if d.1 >= n || is_boundary(n, d.0, d.1) || d.0 == d.1 {
                return Err(Error::InvalidTriangulation(format!("({a}, {b}) is not a diagonal")));
            }
            set.insert(d);
        }
        if set.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!("expected {} diagonals, got {}", n - 3, set.len())));
        }
        let list: Vec<_> = set.iter().copied().collect();
        for (x, &d) in list.iter().enumerate() {
            for &e in &list[x + 1..] {
                if chords_cross(d, e) {
                    return Err(Error::InvalidTriangulation(format!("{d:?} crosses {e:?}")));
                }
            }
        }
        let triangles = triangles_of(n, &set);
        Ok(Triangulation { n, diagonals: set, triangles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonals as `(low, high)` index pairs.
    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    /// Triangles as sorted index triples.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        is_boundary(self.n, a, b) || self.diagonals.contains(&(a, b))
    }
}

pub(crate) fn is_boundary(n: usize, a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    b - a == 1 || (a == 0 && b == n - 1)
}

/// Whether two chords of a convex polygon cross in their interiors.
pub(crate) fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let inside = |x: usize| a < x && x < b;
    let outside = |x: usize| x < a || x > b;
    (inside(c) && outside(d)) || (inside(d) && outside(c))
}

fn triangles_of(n: usize, diagonals: &BTreeSet<(usize, usize)>) -> Vec<[usize; 3]> {
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        adj[i].push((i + 1) % n);
        adj[(i + 1) % n].push(i);
    }
    for &(a, b) in diagonals {
        adj[a].push(b);
        adj[b].push(a);
    }
    let edges: HashSet<(usize, usize)> =
        (0..n).flat_map(|i| adj[i].iter().map(move |&j| (i.min(j), i.max(j)))).collect();
    let mut out = Vec::new();
    for &(a, b) in &edges {
        for &c in &adj[b] {
            if c > b && edges.contains(&(a, c)) {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangulationKind {
    Delaunay,
    AntiDelaunay,
}

/// The unique Delaunay triangulation of a generic convex polygon.
pub fn delaunay(p: &Polygon) -> Result<Triangulation> {
    flip_triangulation(p, TriangulationKind::Delaunay, None)
}

/// The unique anti-Delaunay triangulation of a generic convex polygon.
pub fn anti_delaunay(p: &Polygon) -> Result<Triangulation> {
    flip_triangulation(p, TriangulationKind::AntiDelaunay, None)
}

/// Runs the flip algorithm, choosing among illegal diagonals at random when a
/// seed is given and otherwise taking the smallest.
pub fn flip_triangulation(p: &Polygon, kind: TriangulationKind, order_seed: Option<u64>) -> Result<Triangulation> {
    require_convex(p)?;
    require_generic(p)?;
    flip_unchecked(p, kind, order_seed)
}

pub(crate) fn flip_unchecked(p: &Polygon, kind: TriangulationKind, order_seed: Option<u64>) -> Result<Triangulation> {
    let n = p.len();
    let mut diagonals: BTreeSet<(usize, usize)> = (2..n.saturating_sub(1)).map(|k| (0, k)).collect();
    let mut rng = order_seed.map(ChaCha8Rng::seed_from_u64);
    let budget = n * n * n + 16;
    let mut flips = 0;
    loop {
        let mut illegal = Vec::new();
        for &d in &diagonals {
            let (x, y) = apexes(n, &diagonals, d);
            let pos = p.in_circle_at(d.0, x, d.1, y)?;
            let bad = match (kind, pos) {
                (_, CirclePosition::On) => {
                    let mut q = [d.0, d.1, x, y];
                    q.sort_unstable();
                    return Err(Error::NotGeneric(crate::error::GenericityWitness::Concyclic(q)));
                }
                (TriangulationKind::Delaunay, CirclePosition::Inside) => true,
                (TriangulationKind::AntiDelaunay, CirclePosition::Outside) => true,
                _ => false,
            };
            if bad {
                illegal.push((d, (x.min(y), x.max(y))));
            }
        }
        let Some(&(old, new)) = (match rng.as_mut() {
            Some(r) => illegal.choose(r),
            None => illegal.first(),
        }) else {
            break;
        };
        diagonals.remove(&old);
        diagonals.insert(new);
        flips += 1;
        if flips > budget {
            return Err(Error::FlipBudgetExceeded { flips });
        }
    }
    Triangulation::from_diagonals(n, diagonals)
}

/// Apexes of the two triangles on either side of diagonal `(a, b)`.
fn apexes(n: usize, diagonals: &BTreeSet<(usize, usize)>, (a, b): (usize, usize)) -> (usize, usize) {
    let edge = |i: usize, j: usize| {
        let (lo, hi) = (i.min(j), i.max(j));
        is_boundary(n, lo, hi) || diagonals.contains(&(lo, hi))
    };
    let inner = (a + 1..b).find(|&x| edge(a, x) && edge(x, b)).expect("valid triangulation");
    let outer = (b + 1..n).chain(0..a).find(|&x| edge(a, x) && edge(x, b)).expect("valid triangulation");
    (inner, outer)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Delaunay,
    AntiDelaunay,
    Neither,
    /// Polygon boundary edges belong to every triangulation.
    Both,
}

/// Both triangulations of one polygon, for repeated edge queries.
#[derive(Clone, Debug)]
pub struct EdgeClassifier {
    pub delaunay: Triangulation,
    pub anti_delaunay: Triangulation,
}

impl EdgeClassifier {
    pub fn new(p: &Polygon) -> Result<Self> {
        Ok(EdgeClassifier { delaunay: delaunay(p)?, anti_delaunay: anti_delaunay(p)? })
    }

    pub fn kind(&self, i: usize, j: usize) -> Result<EdgeKind> {
        let n = self.delaunay.n();
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidArgument(format!("({i}, {j}) is not an edge or diagonal")));
        }
        Ok(match (self.delaunay.contains_edge(i, j), self.anti_delaunay.contains_edge(i, j)) {
            (true, true) => EdgeKind::Both,
            (true, false) => EdgeKind::Delaunay,
            (false, true) => EdgeKind::AntiDelaunay,
            (false, false) => EdgeKind::Neither,
        })
    }
}

/// Kind of the edge or diagonal `(i, j)`.
pub fn edge_kind(p: &Polygon, i: usize, j: usize) -> Result<EdgeKind> {
    EdgeClassifier::new(p)?.kind(i, j)
}

/// Vertex counts of the two sides of diagonal `(a, b)` in an `n`-gon.
pub fn side_sizes(n: usize, a: usize, b: usize) -> (usize, usize) {
    let k = (b + n - a) % n + 1;
    (k, n - k + 2)
}

/// A diagonal leaving at least four vertices on each side.
pub fn balanced_diagonal(t: &Triangulation) -> Result<(usize, usize)> {
    t.diagonals
        .iter()
        .copied()
        .find(|&(a, b)| {
            let (k, m) = side_sizes(t.n, a, b);
            k >= 4 && m >= 4
        })
        .ok_or(Error::NoBalancedDiagonal)
}

/// Same triangulation recomputed under several random flip orders.
pub fn flip_order_independent(p: &Polygon, kind: TriangulationKind, seeds: &[u64]) -> Result<bool> {
    let base = flip_triangulation(p, kind, None)?;
    for &s in seeds {
        if flip_triangulation(p, kind, Some(s))? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad() -> Polygon {
        // Long thin quadrilateral: the short diagonal (1,3) is Delaunay.
        Polygon::from_ints(&[(0, 0), (5, -1), (10, 0), (5, 2)]).unwrap()
    }

    #[test]
    fn quadrilateral_diagonals_are_complementary() {
        let p = quad();
        let dt = delaunay(&p).unwrap();
        let adt = anti_delaunay(&p).unwrap();
        assert_eq!(dt.diagonals().iter().copied().collect::<Vec<_>>(), vec![(1, 3)]);
        assert_eq!(adt.diagonals().iter().copied().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(edge_kind(&p, 1, 3).unwrap(), EdgeKind::Delaunay);
        assert_eq!(edge_kind(&p, 0, 2).unwrap(), EdgeKind::AntiDelaunay);
        assert_eq!(edge_kind(&p, 3, 0).unwrap(), EdgeKind::Both);
    }

    #[test]
    fn validation_rejects_crossings_and_wrong_counts() {
        assert!(Triangulation::from_diagonals(5, [(0, 2), (1, 3)]).is_err());
        assert!(Triangulation::from_diagonals(5, [(0, 2)]).is_err());
        assert!(Triangulation::from_diagonals(5, [(0, 1), (0, 2)]).is_err());
        let t = Triangulation::from_diagonals(5, [(0, 2), (0, 3)]).unwrap();
        assert_eq!(t.triangles(), &[[0, 1, 2], [0, 2, 3], [0, 3, 4]]);
    }

    #[test]
    fn hexagon_balance() {
        let snowflake = Triangulation::from_diagonals(6, [(1, 3), (3, 5), (5, 1)]).unwrap();
        assert_eq!(balanced_diagonal(&snowflake), Err(Error::NoBalancedDiagonal));
        let fan = Triangulation::from_diagonals(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(balanced_diagonal(&fan), Ok((1, 4)));
        assert_eq!(side_sizes(6, 1, 4), (4, 4));
    }

    #[test]
    fn square_is_not_generic() {
        let sq = Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert!(matches!(delaunay(&sq), Err(Error::NotGeneric(_))));
    }
}
