use std::cmp::Ordering;

use num_traits::Zero;

use super::lattice::Lattice;
use super::point::{Angle, Circle, CirclePosition, Orientation, Point};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    Lattice::new([a, b, c]).orientation(0, 1, 2)
}

/// Position of `q` relative to the circle through `a`, `b`, `c`.
///
/// The answer does not depend on the order of `a`, `b`, `c`.
pub fn in_circle(a: &Point, b: &Point, c: &Point, q: &Point) -> Result<CirclePosition> {
    let lattice = Lattice::new([a, b, c, q]);
    in_circle_on(&lattice, [0, 1, 2, 3])
}

pub(crate) fn in_circle_on(lattice: &Lattice, [a, b, c, q]: [usize; 4]) -> Result<CirclePosition> {
    let turn = match lattice.orientation(a, b, c) {
        Orientation::Left => Ordering::Greater,
        Orientation::Right => Ordering::Less,
        Orientation::Collinear => return Err(Error::CollinearInput),
    };
    let det = lattice.in_circle_det(a, b, c, q);
    Ok(match (det, turn) {
        (Ordering::Equal, _) => CirclePosition::On,
        (d, t) if d == t => CirclePosition::Inside,
        _ => CirclePosition::Outside,
    })
}

/// Exact centre of the circle through three points.
pub fn circumcenter(a: &Point, b: &Point, c: &Point) -> Result<Point> {
    // 2 [ax-cx ay-cy; bx-cx by-cy] o = [|a|^2-|c|^2; |b|^2-|c|^2]
    let m11 = (&a.x - &c.x) * Scalar::from_integer(2.into());
    let m12 = (&a.y - &c.y) * Scalar::from_integer(2.into());
    let m21 = (&b.x - &c.x) * Scalar::from_integer(2.into());
    let m22 = (&b.y - &c.y) * Scalar::from_integer(2.into());
    let norm = |p: &Point| &p.x * &p.x + &p.y * &p.y;
    let r1 = norm(a) - norm(c);
    let r2 = norm(b) - norm(c);
    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return Err(Error::CollinearInput);
    }
    let x = (&r1 * &m22 - &m12 * &r2) / &det;
    let y = (&m11 * &r2 - &r1 * &m21) / &det;
    Ok(Point::new(x, y))
}

/// Squared radius of the circle through three points.
pub fn circumradius_sq(a: &Point, b: &Point, c: &Point) -> Result<Scalar> {
    Ok(circumcenter(a, b, c)?.dist_sq(a))
}

pub fn circumcircle(a: &Point, b: &Point, c: &Point) -> Result<Circle> {
    let center = circumcenter(a, b, c)?;
    let radius_sq = center.dist_sq(a);
    Ok(Circle { center, radius_sq })
}

/// Angle at `cur` on the left of the path `prev -> cur -> next`, in `(0, 2pi)`.
///
/// Returns `None` when the three points are collinear.
pub fn left_angle_of(prev: &Point, cur: &Point, next: &Point) -> Option<Angle> {
    let turn = orientation(prev, cur, next);
    left_angle_with(turn, prev, cur, next)
}

pub(crate) fn left_angle_with(turn: Orientation, prev: &Point, cur: &Point, next: &Point) -> Option<Angle> {
    let (px, py) = prev.to_f64();
    let (cx, cy) = cur.to_f64();
    let (nx, ny) = next.to_f64();
    let s1 = [px - cx, py - cy];
    let s2 = [nx - cx, ny - cy];
    // Unsigned angle between the two sides; atan2 keeps precision near 0 and pi.
    let cross = (s1[0] * s2[1] - s1[1] * s2[0]).abs();
    let dot = s1[0] * s2[0] + s1[1] * s2[1];
    let inner = cross.atan2(dot);
    match turn {
        Orientation::Left => Some(Angle(inner)),
        Orientation::Right => Some(Angle(2.0 * std::f64::consts::PI - inner)),
        Orientation::Collinear => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scalar;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Right);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(3, 3)), Orientation::Collinear);
    }

    #[test]
    fn in_circle_unit_square() {
        let (a, b, c) = (p(0, 0), p(2, 0), p(0, 2));
        assert_eq!(in_circle(&a, &b, &c, &p(1, 1)).unwrap(), CirclePosition::Inside);
        assert_eq!(in_circle(&a, &b, &c, &p(2, 2)).unwrap(), CirclePosition::On);
        assert_eq!(in_circle(&a, &b, &c, &p(3, 3)).unwrap(), CirclePosition::Outside);
        assert_eq!(in_circle(&c, &b, &a, &p(1, 1)).unwrap(), CirclePosition::Inside);
        assert_eq!(in_circle(&a, &p(1, 1), &p(2, 2), &p(0, 5)), Err(Error::CollinearInput));
    }

    #[test]
    fn circumcenter_of_right_triangle_is_hypotenuse_midpoint() {
        let o = circumcenter(&p(0, 0), &p(4, 0), &p(0, 2)).unwrap();
        assert_eq!(o, p(2, 1));
        assert_eq!(circumradius_sq(&p(0, 0), &p(4, 0), &p(0, 2)).unwrap(), scalar::from_int(5));
        assert!(circumcenter(&p(0, 0), &p(1, 1), &p(2, 2)).is_err());
    }

    #[test]
    fn left_angle_convention() {
        // Counterclockwise square: interior angle pi/2 on the left.
        let a = left_angle_of(&p(0, 0), &p(1, 0), &p(1, 1)).unwrap();
        assert!((a.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let b = left_angle_of(&p(1, 1), &p(1, 0), &p(0, 0)).unwrap();
        assert!((b.radians() - 3.0 * std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(left_angle_of(&p(0, 0), &p(1, 0), &p(2, 0)).is_none());
    }
}
