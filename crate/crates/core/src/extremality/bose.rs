//! Census of empty and full circles through vertex triples.

use serde::Serialize;

use crate::error::{Error, GenericityWitness, Result};
use crate::geometry::{require_convex, CirclePosition, Orientation, Polygon};

/// What a circle through three vertices contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    /// No other vertex strictly inside.
    Empty,
    /// Every other vertex strictly inside.
    Full,
    Mixed,
}

/// How the three defining vertices sit along the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjacency {
    /// Three consecutive vertices.
    Neighboring,
    /// Exactly one pair of consecutive vertices.
    Intermediate,
    /// No two of the vertices are consecutive.
    Disjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CircleClassification {
    pub containment: Containment,
    pub adjacency: Adjacency,
}

/// Empty (`_minus`) and full (`_plus`) circles, split by adjacency:
/// `s` neighbouring, `t` disjoint, `u` intermediate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoseCounts {
    pub s_plus: usize,
    pub s_minus: usize,
    pub t_plus: usize,
    pub t_minus: usize,
    pub u_plus: usize,
    pub u_minus: usize,
}

impl BoseCounts {
    /// `(s - t - 2, s + t + u - (n - 2))` for empty and full circles; all
    /// zero for a generic convex polygon.
    pub fn residuals(&self, n: usize) -> [i64; 4] {
        let n = n as i64;
        let (sp, sm) = (self.s_plus as i64, self.s_minus as i64);
        let (tp, tm) = (self.t_plus as i64, self.t_minus as i64);
        let (up, um) = (self.u_plus as i64, self.u_minus as i64);
        [sm - tm - 2, sp - tp - 2, sm + tm + um - (n - 2), sp + tp + up - (n - 2)]
    }

    pub fn identities_hold(&self, n: usize) -> bool {
        self.residuals(n) == [0; 4]
    }
}

pub(crate) fn adjacency_of(n: usize, i: usize, j: usize, k: usize) -> Adjacency {
    let adjacent = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
    let pairs = [adjacent(i, j), adjacent(j, k), adjacent(i, k)].iter().filter(|&&b| b).count();
    match pairs {
        0 => Adjacency::Disjoint,
        1 => Adjacency::Intermediate,
        _ => Adjacency::Neighboring,
    }
}

/// Classifies the circle through vertices `i, j, k`.
pub fn classify_circle(p: &Polygon, i: usize, j: usize, k: usize) -> Result<CircleClassification> {
    for idx in [i, j, k] {
        p.check_index(idx)?;
    }
    if i == j || j == k || i == k {
        return Err(Error::InvalidArgument(format!("vertices {i}, {j}, {k} are not distinct")));
    }
    if p.orientation_at(i, j, k) == Orientation::Collinear {
        return Err(Error::CollinearInput);
    }
    let mut oracle = |q: [usize; 4]| p.in_circle_at(q[0], q[1], q[2], q[3]);
    classify_with(p.len(), [i, j, k], &mut oracle)
}

type Oracle<'a> = dyn FnMut([usize; 4]) -> Result<CirclePosition> + 'a;

fn classify_with(n: usize, [i, j, k]: [usize; 3], oracle: &mut Oracle<'_>) -> Result<CircleClassification> {
    let (mut inside, mut outside) = (0usize, 0usize);
    for l in (0..n).filter(|&l| l != i && l != j && l != k) {
        match oracle([i, j, k, l])? {
            CirclePosition::Inside => inside += 1,
            CirclePosition::Outside => outside += 1,
            CirclePosition::On => return Err(Error::OnCircleWitness { triple: [i, j, k], fourth: l }),
        }
    }
    let containment = match (inside, outside) {
        (0, _) => Containment::Empty,
        (_, 0) => Containment::Full,
        _ => Containment::Mixed,
    };
    Ok(CircleClassification { containment, adjacency: adjacency_of(n, i, j, k) })
}

/// Counts empty and full circles over all vertex triples of a generic convex
/// polygon.
pub fn bose_counts(p: &Polygon) -> Result<BoseCounts> {
    let mut oracle = |q: [usize; 4]| p.in_circle_at(q[0], q[1], q[2], q[3]);
    bose_counts_with(p, &mut oracle)
}

/// [`bose_counts`] with an injectable in-circle oracle.
pub(crate) fn bose_counts_with(p: &Polygon, oracle: &mut Oracle<'_>) -> Result<BoseCounts> {
    require_convex(p)?;
    let n = p.len();
    let mut c = BoseCounts::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let cls = classify_with(n, [i, j, k], oracle).map_err(|e| match e {
                    Error::OnCircleWitness { triple, fourth } => {
                        let mut q = [triple[0], triple[1], triple[2], fourth];
                        q.sort_unstable();
                        Error::NotGeneric(GenericityWitness::Concyclic(q))
                    }
                    other => other,
                })?;
                let slot = match (cls.containment, cls.adjacency) {
                    (Containment::Mixed, _) => continue,
                    (Containment::Empty, Adjacency::Neighboring) => &mut c.s_minus,
                    (Containment::Empty, Adjacency::Disjoint) => &mut c.t_minus,
                    (Containment::Empty, Adjacency::Intermediate) => &mut c.u_minus,
                    (Containment::Full, Adjacency::Neighboring) => &mut c.s_plus,
                    (Containment::Full, Adjacency::Disjoint) => &mut c.t_plus,
                    (Containment::Full, Adjacency::Intermediate) => &mut c.u_plus,
                };
                *slot += 1;
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_classes() {
        assert_eq!(adjacency_of(6, 0, 1, 2), Adjacency::Neighboring);
        assert_eq!(adjacency_of(6, 5, 0, 1), Adjacency::Neighboring);
        assert_eq!(adjacency_of(6, 0, 1, 3), Adjacency::Intermediate);
        assert_eq!(adjacency_of(6, 0, 2, 4), Adjacency::Disjoint);
        assert_eq!(adjacency_of(4, 0, 1, 3), Adjacency::Neighboring);
    }

    #[test]
    fn pentagon_identities() {
        let p = Polygon::from_ints(&[(0, 0), (5, -1), (9, 2), (6, 7), (1, 5)]).unwrap();
        let c = bose_counts(&p).unwrap();
        assert!(c.identities_hold(5), "{c:?}");
    }

    #[test]
    fn square_is_reported_non_generic() {
        let p = Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(bose_counts(&p), Err(Error::NotGeneric(GenericityWitness::Concyclic([0, 1, 2, 3]))));
    }

    #[test]
    fn classify_rejects_repeated_vertices() {
        let p = Polygon::from_ints(&[(0, 0), (5, -1), (9, 2), (6, 7), (1, 5)]).unwrap();
        assert!(classify_circle(&p, 1, 1, 2).is_err());
        let c = classify_circle(&p, 0, 2, 3).unwrap();
        assert_eq!(c.adjacency, Adjacency::Intermediate);
    }
}
