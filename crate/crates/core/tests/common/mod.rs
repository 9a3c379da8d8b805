//! Independent exact oracles for the integration tests.
//!
//! Nothing here calls the crate's predicates: coordinates are rebuilt from
//! their decimal text and circles are compared through explicit centres.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;
pub type Pt = (Q, Q);

/// Parses `-12.345` style decimals.
pub fn decimal(text: &str) -> Q {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let scale = BigInt::from(10).pow(frac.len() as u32);
    let v = Q::new(digits, scale);
    if neg {
        -v
    } else {
        v
    }
}

pub fn pts(xs: &[&str], ys: &[&str]) -> Vec<Pt> {
    xs.iter().zip(ys).map(|(x, y)| (decimal(x), decimal(y))).collect()
}

pub fn from_polygon(p: &fourvertex::Polygon) -> Vec<Pt> {
    p.vertices().iter().map(|v| (v.x.clone(), v.y.clone())).collect()
}

fn sub(a: &Pt, b: &Pt) -> Pt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

pub fn cross(o: &Pt, a: &Pt, b: &Pt) -> Q {
    let (u, v) = (sub(a, o), sub(b, o));
    &u.0 * &v.1 - &u.1 * &v.0
}

pub fn dist2(a: &Pt, b: &Pt) -> Q {
    let d = sub(a, b);
    &d.0 * &d.0 + &d.1 * &d.1
}

/// Centre of the circle through three non-collinear points, by Cramer's rule
/// on the two perpendicular-bisector equations.
pub fn centre(a: &Pt, b: &Pt, c: &Pt) -> Pt {
    let two = Q::from_integer(BigInt::from(2));
    let (a1, b1) = (&two * (&b.0 - &a.0), &two * (&b.1 - &a.1));
    let c1 = (&b.0 * &b.0 + &b.1 * &b.1) - (&a.0 * &a.0 + &a.1 * &a.1);
    let (a2, b2) = (&two * (&c.0 - &a.0), &two * (&c.1 - &a.1));
    let c2 = (&c.0 * &c.0 + &c.1 * &c.1) - (&a.0 * &a.0 + &a.1 * &a.1);
    let det = &a1 * &b2 - &a2 * &b1;
    assert!(!det.is_zero(), "collinear triple");
    ((&c1 * &b2 - &c2 * &b1) / &det, (&a1 * &c2 - &a2 * &c1) / &det)
}

/// `Less` inside, `Equal` on, `Greater` outside the circle through `a, b, c`.
pub fn position(a: &Pt, b: &Pt, c: &Pt, q: &Pt) -> Ordering {
    let o = centre(a, b, c);
    dist2(&o, q).cmp(&dist2(&o, a))
}

/// Vertices whose neighbouring circle contains no vertex (maxima) and all
/// vertices (minima), found by brute force.
pub fn global_extremes(p: &[Pt]) -> (Vec<usize>, Vec<usize>) {
    let n = p.len();
    let (mut max, mut min) = (Vec::new(), Vec::new());
    for i in 0..n {
        let (a, b, c) = (&p[(i + n - 1) % n], &p[i], &p[(i + 1) % n]);
        let others: Vec<Ordering> = (0..n)
            .filter(|&j| j != i && j != (i + 1) % n && j != (i + n - 1) % n)
            .map(|j| position(a, b, c, &p[j]))
            .collect();
        if others.iter().all(|o| *o == Ordering::Greater) {
            max.push(i);
        }
        if others.iter().all(|o| *o == Ordering::Less) {
            min.push(i);
        }
    }
    (max, min)
}

/// Whether some circle through `p[i], p[j]` is empty and whether some is full,
/// from the interval of centres along the perpendicular bisector.
pub fn chord_circles(p: &[Pt], i: usize, j: usize) -> (bool, bool) {
    let two = Q::from_integer(BigInt::from(2));
    let (vi, vj) = (&p[i], &p[j]);
    let m = ((&vi.0 + &vj.0) / &two, (&vi.1 + &vj.1) / &two);
    let d = sub(vj, vi);
    let normal = (-d.1.clone(), d.0.clone());
    let a = sub(&m, vi);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (k, vk) in p.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let b = sub(&m, vk);
        let amb = sub(vk, vi);
        let denom = &two * (&amb.0 * &normal.0 + &amb.1 * &normal.1);
        let t = ((&b.0 * &b.0 + &b.1 * &b.1) - (&a.0 * &a.0 + &a.1 * &a.1)) / denom;
        if cross(vi, vj, vk).is_positive() {
            left.push(t);
        } else {
            right.push(t);
        }
    }
    // A left point is inside the circle with centre parameter t iff t > t_k;
    // a right point iff t < t_k.
    let max = |v: &[Q]| v.iter().max().cloned();
    let min = |v: &[Q]| v.iter().min().cloned();
    let empty = match (max(&right), min(&left)) {
        (Some(r), Some(l)) => r < l,
        _ => true,
    };
    let full = match (max(&left), min(&right)) {
        (Some(l), Some(r)) => l < r,
        _ => true,
    };
    (empty, full)
}

pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
