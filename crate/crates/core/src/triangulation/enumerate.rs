//! Exhaustive and random triangulations of a convex `n`-gon.

use rand::Rng;

use super::Triangulation;

/// Every triangulation of a convex `n`-gon (Catalan many).
pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    if n < 3 {
        return Vec::new();
    }
    chords(0, n - 1)
        .into_iter()
        .map(|d| Triangulation::from_diagonals(n, d).expect("enumerated triangulations are valid"))
        .collect()
}

/// Diagonal sets triangulating the sub-polygon `i..=j`, excluding chord `(i, j)`.
fn chords(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let left = chords(i, k);
        let right = chords(k, j);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                if k - i >= 2 {
                    d.push((i, k));
                }
                if j - k >= 2 {
                    d.push((k, j));
                }
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                out.push(d);
            }
        }
    }
    out
}

/// A random triangulation built by choosing each apex uniformly.
pub fn random_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Triangulation {
    let mut diagonals = Vec::new();
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = rng.gen_range(i + 1..j);
        for (a, b) in [(i, k), (k, j)] {
            if b - a >= 2 {
                diagonals.push((a, b));
                stack.push((a, b));
            }
        }
    }
    Triangulation::from_diagonals(n, diagonals).expect("random triangulations are valid")
}
