use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::lattice::Lattice;
use super::point::{Angle, CirclePosition, Orientation, Point};
use super::predicates::{self, in_circle_on};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A cyclic sequence of distinct points.
///
/// [`Polygon::new`] stores closed polygons counterclockwise, reversing the
/// input when its signed area is negative.
#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<Point>,
    closed: bool,
    reoriented: bool,
    lattice: Lattice,
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Self) -> bool {
        self.closed == other.closed && self.vertices == other.vertices
    }
}

impl Polygon {
    /// Closed polygon, reordered counterclockwise if needed.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let mut p = Polygon::build(vertices, true, None)?;
        if p.signed_area_twice().is_negative() {
            p = p.reversed();
            p.reoriented = true;
        }
        Ok(p)
    }

    /// Closed polygon in the given vertex order.
    pub fn as_given(vertices: Vec<Point>) -> Result<Self> {
        Polygon::build(vertices, true, None)
    }

    /// Open polygonal curve in the given order.
    pub fn open(vertices: Vec<Point>) -> Result<Self> {
        Polygon::build(vertices, false, None)
    }

    /// Closed polygon from decimal coordinate pairs.
    pub fn from_decimals(coords: &[(&str, &str)]) -> Result<Self> {
        let vertices = coords.iter().map(|(x, y)| Point::parse(x, y)).collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices)
    }

    /// Closed polygon from integer coordinate pairs.
    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Polygon::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    fn build(vertices: Vec<Point>, closed: bool, lattice: Option<Lattice>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices { required: 3, found: vertices.len() });
        }
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if let Some(&first) = seen.get(v) {
                return Err(Error::DuplicateVertex { first, second: i });
            }
            seen.insert(v, i);
        }
        let lattice = lattice.unwrap_or_else(|| Lattice::new(&vertices));
        Ok(Polygon { vertices, closed, reoriented: false, lattice })
    }

    /// Polygon on a subsequence of this polygon's vertices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange { index: i, len: self.len() });
            }
        }
        let vertices = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        Polygon::build(vertices, self.closed, Some(self.lattice.subset(indices)))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    /// Vertex at cyclic position `i`.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.len()]
    }

    /// Reduces a signed offset to a vertex index.
    pub fn wrap(&self, i: isize) -> usize {
        i.rem_euclid(self.len() as isize) as usize
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    /// Cyclic offset of `i` by `k`.
    pub fn offset(&self, i: usize, k: isize) -> usize {
        self.wrap(i as isize + k)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// True when [`Polygon::new`] reversed the input order.
    pub fn was_reoriented(&self) -> bool {
        self.reoriented
    }

    /// Twice the signed (shoelace) area.
    pub fn signed_area_twice(&self) -> Scalar {
        let n = self.len();
        let mut acc = Scalar::zero();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            acc += &a.x * &b.y - &b.x * &a.y;
        }
        acc
    }

    pub fn is_ccw(&self) -> bool {
        self.signed_area_twice().is_positive()
    }

    /// Same vertices traversed in the opposite direction, starting at vertex 0.
    pub fn reversed(&self) -> Polygon {
        let mut order: Vec<usize> = (0..self.len()).rev().collect();
        order.rotate_right(1);
        let mut p = self.select(&order).expect("indices are in range");
        p.reoriented = false;
        p
    }

    /// Polygon with vertex `i` deleted.
    pub fn without_vertex(&self, i: usize) -> Result<Polygon> {
        self.check_index(i)?;
        if self.len() <= 3 {
            return Err(Error::TooFewVertices { required: 4, found: self.len() });
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        self.select(&keep)
    }

    /// Vertices `a, a+1, ..., b` (cyclically) as a closed polygon.
    pub fn chain(&self, a: usize, b: usize) -> Result<Polygon> {
        self.check_index(a)?;
        self.check_index(b)?;
        let n = self.len();
        let count = (b + n - a) % n + 1;
        let idx: Vec<usize> = (0..count).map(|k| (a + k) % n).collect();
        let mut p = self.select(&idx)?;
        p.closed = true;
        Ok(p)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            Err(Error::IndexOutOfRange { index: i, len: self.len() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_closed(&self) -> Result<()> {
        if self.closed {
            Ok(())
        } else {
            Err(Error::NotClosed)
        }
    }

    /// Orientation of vertices `i, j, k` (indices taken cyclically).
    pub fn orientation_at(&self, i: usize, j: usize, k: usize) -> Orientation {
        let n = self.len();
        self.lattice.orientation(i % n, j % n, k % n)
    }

    /// Position of vertex `l` relative to the circle through vertices `i, j, k`.
    pub fn in_circle_at(&self, i: usize, j: usize, k: usize, l: usize) -> Result<CirclePosition> {
        let n = self.len();
        in_circle_on(&self.lattice, [i % n, j % n, k % n, l % n])
    }

    /// Turn at vertex `i`: orientation of `V[i-1], V[i], V[i+1]`.
    pub fn turn_at(&self, i: usize) -> Orientation {
        self.orientation_at(self.prev(i), i, self.next(i))
    }

    /// Left turning angle at vertex `i`.
    pub fn left_angle(&self, i: usize) -> Result<Angle> {
        self.check_index(i)?;
        self.require_closed()?;
        let (a, c) = (self.prev(i), self.next(i));
        predicates::left_angle_with(self.turn_at(i), &self.vertices[a], &self.vertices[i], &self.vertices[c])
            .ok_or(Error::DegenerateAngle { index: i })
    }

    /// Whether segments `a-b` and `c-d` (vertex indices) share a point.
    pub(crate) fn segments_touch(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
        let o1 = self.lattice.orientation(a, b, c);
        let o2 = self.lattice.orientation(a, b, d);
        let o3 = self.lattice.orientation(c, d, a);
        let o4 = self.lattice.orientation(c, d, b);
        let opposite = |x: Orientation, y: Orientation| {
            matches!((x, y), (Orientation::Left, Orientation::Right) | (Orientation::Right, Orientation::Left))
        };
        if opposite(o1, o2) && opposite(o3, o4) {
            return true;
        }
        let on = |s: (usize, usize), q: usize, o: Orientation| o == Orientation::Collinear && self.within_box(s, q);
        on((a, b), c, o1) || on((a, b), d, o2) || on((c, d), a, o3) || on((c, d), b, o4)
    }

    fn within_box(&self, (a, b): (usize, usize), q: usize) -> bool {
        let (pa, pb, pq) = (&self.vertices[a], &self.vertices[b], &self.vertices[q]);
        let between = |u: &Scalar, v: &Scalar, w: &Scalar| (u.min(v) <= w) && (w <= u.max(v));
        between(&pa.x, &pb.x, &pq.x) && between(&pa.y, &pb.y, &pq.y)
    }

    pub(crate) fn lattice(&self) -> &Lattice {
        &self.lattice
    }
}
