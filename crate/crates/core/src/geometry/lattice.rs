//! Integer images of rational point sets.
//!
//! Scaling every point by the common denominator preserves the sign of
//! orientation and in-circle determinants, so the predicates can run on
//! integers. Small coordinates take an `i128` path.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::point::{Orientation, Point};

/// Coordinates below this bound keep every in-circle term inside `i128`.
const SMALL_BOUND: i64 = 1 << 28;

#[derive(Clone, Debug)]
pub(crate) enum Lattice {
    Small(Vec<[i64; 2]>),
    Big(Vec<[BigInt; 2]>),
}

impl Lattice {
    pub(crate) fn new<'a>(points: impl IntoIterator<Item = &'a Point> + Clone) -> Self {
        let mut den = BigInt::one();
        for p in points.clone() {
            den = den.lcm(p.x.denom()).lcm(p.y.denom());
        }
        let big: Vec<[BigInt; 2]> = points
            .into_iter()
            .map(|p| [p.x.numer() * (&den / p.x.denom()), p.y.numer() * (&den / p.y.denom())])
            .collect();
        Lattice::from_big(big)
    }

    fn from_big(big: Vec<[BigInt; 2]>) -> Self {
        let small: Option<Vec<[i64; 2]>> = big
            .iter()
            .map(|[x, y]| {
                let x = x.to_i64().filter(|v| v.abs() < SMALL_BOUND)?;
                let y = y.to_i64().filter(|v| v.abs() < SMALL_BOUND)?;
                Some([x, y])
            })
            .collect();
        match small {
            Some(s) => Lattice::Small(s),
            None => Lattice::Big(big),
        }
    }

    /// Lattice over a subsequence of the points, sharing the same scale.
    pub(crate) fn subset(&self, indices: &[usize]) -> Self {
        match self {
            Lattice::Small(v) => Lattice::Small(indices.iter().map(|&i| v[i]).collect()),
            Lattice::Big(v) => Lattice::from_big(indices.iter().map(|&i| v[i].clone()).collect()),
        }
    }

    pub(crate) fn orientation(&self, a: usize, b: usize, c: usize) -> Orientation {
        let sign = match self {
            Lattice::Small(v) => {
                let (a, b, c) = (v[a], v[b], v[c]);
                let d = (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128 - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128;
                d.cmp(&0)
            }
            Lattice::Big(v) => {
                let (a, b, c) = (&v[a], &v[b], &v[c]);
                let d = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
                sign_of(&d)
            }
        };
        match sign {
            Ordering::Greater => Orientation::Left,
            Ordering::Less => Orientation::Right,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    /// Sign of the in-circle determinant with `d` translated to the origin.
    /// Positive means `d` is inside when `a, b, c` turn left.
    pub(crate) fn in_circle_det(&self, a: usize, b: usize, c: usize, d: usize) -> Ordering {
        match self {
            Lattice::Small(v) => {
                let d = v[d];
                let row = |p: [i64; 2]| {
                    let x = (p[0] - d[0]) as i128;
                    let y = (p[1] - d[1]) as i128;
                    (x, y, x * x + y * y)
                };
                let (ax, ay, al) = row(v[a]);
                let (bx, by, bl) = row(v[b]);
                let (cx, cy, cl) = row(v[c]);
                let det = ax * (by * cl - bl * cy) - ay * (bx * cl - bl * cx) + al * (bx * cy - by * cx);
                det.cmp(&0)
            }
            Lattice::Big(v) => {
                let d = &v[d];
                let row = |p: &[BigInt; 2]| {
                    let x = &p[0] - &d[0];
                    let y = &p[1] - &d[1];
                    let l = &x * &x + &y * &y;
                    (x, y, l)
                };
                let (ax, ay, al) = row(&v[a]);
                let (bx, by, bl) = row(&v[b]);
                let (cx, cy, cl) = row(&v[c]);
                let det = &ax * (&by * &cl - &bl * &cy) - &ay * (&bx * &cl - &bl * &cx) + &al * (&bx * &cy - &by * &cx);
                sign_of(&det)
            }
        }
    }

    /// Orders the direction of `b - a` against `d - c` by angle in `[0, 2pi)`.
    pub(crate) fn direction_cmp(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> Ordering {
        match self {
            Lattice::Small(v) => {
                let u = [(v[b][0] - v[a][0]) as i128, (v[b][1] - v[a][1]) as i128];
                let w = [(v[d][0] - v[c][0]) as i128, (v[d][1] - v[c][1]) as i128];
                let half = |p: [i128; 2]| p[1] < 0 || (p[1] == 0 && p[0] < 0);
                half(u).cmp(&half(w)).then_with(|| (u[1] * w[0] - u[0] * w[1]).cmp(&0))
            }
            Lattice::Big(v) => {
                let u = [&v[b][0] - &v[a][0], &v[b][1] - &v[a][1]];
                let w = [&v[d][0] - &v[c][0], &v[d][1] - &v[c][1]];
                let half = |p: &[BigInt; 2]| p[1].is_negative() || (p[1].is_zero() && p[0].is_negative());
                half(&u).cmp(&half(&w)).then_with(|| sign_of(&(&u[1] * &w[0] - &u[0] * &w[1])))
            }
        }
    }

    /// Sign of the dot product `(b - a) . (d - c)`.
    pub(crate) fn dot_sign(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> Ordering {
        match self {
            Lattice::Small(v) => {
                let dot = (v[b][0] - v[a][0]) as i128 * (v[d][0] - v[c][0]) as i128
                    + (v[b][1] - v[a][1]) as i128 * (v[d][1] - v[c][1]) as i128;
                dot.cmp(&0)
            }
            Lattice::Big(v) => {
                let dot = (&v[b][0] - &v[a][0]) * (&v[d][0] - &v[c][0]) + (&v[b][1] - &v[a][1]) * (&v[d][1] - &v[c][1]);
                sign_of(&dot)
            }
        }
    }
}

fn sign_of(v: &BigInt) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(&str, &str)]) -> Vec<Point> {
        raw.iter().map(|(x, y)| Point::parse(x, y).unwrap()).collect()
    }

    #[test]
    fn small_and_big_paths_agree() {
        let p = pts(&[("0", "0"), ("1", "0"), ("0", "1"), ("0.3", "0.3"), ("1", "1")]);
        let small = Lattice::new(&p);
        assert!(matches!(small, Lattice::Small(_)));
        let big = match &small {
            Lattice::Small(v) => Lattice::Big(v.iter().map(|&[x, y]| [BigInt::from(x), BigInt::from(y)]).collect()),
            Lattice::Big(_) => unreachable!(),
        };
        for q in 3..5 {
            assert_eq!(small.in_circle_det(0, 1, 2, q), big.in_circle_det(0, 1, 2, q));
        }
        assert_eq!(small.orientation(0, 1, 2), big.orientation(0, 1, 2));
        assert_eq!(small.in_circle_det(0, 1, 2, 3), Ordering::Greater);
        assert_eq!(small.in_circle_det(0, 1, 2, 4), Ordering::Equal);
    }

    #[test]
    fn large_coordinates_use_bignum() {
        let p = pts(&[("0.000000000001", "0"), ("1", "0"), ("0", "1")]);
        assert!(matches!(Lattice::new(&p), Lattice::Big(_)));
    }
}
