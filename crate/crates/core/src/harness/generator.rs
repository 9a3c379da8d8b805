//! Deterministic random polygons on a decimal grid.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    genericity_witness, is_coherent_at, is_convex, polygon_predicates_limited, Point, Polygon, Scalar,
};

/// Coordinates are rounded to multiples of `10^-GRID_DIGITS`.
pub const GRID_DIGITS: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    ConvexGeneric,
    ConvexGenericCoherent,
    SimpleNonconvex,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 3] =
        [GeneratorKind::ConvexGeneric, GeneratorKind::ConvexGenericCoherent, GeneratorKind::SimpleNonconvex];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::ConvexGeneric => "convex-generic",
            GeneratorKind::ConvexGenericCoherent => "convex-generic-coherent",
            GeneratorKind::SimpleNonconvex => "simple-nonconvex",
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" | "convex-generic" => Ok(GeneratorKind::ConvexGeneric),
            "coherent" | "convex-generic-coherent" => Ok(GeneratorKind::ConvexGenericCoherent),
            "nonconvex" | "simple-nonconvex" => Ok(GeneratorKind::SimpleNonconvex),
            other => Err(Error::InvalidArgument(format!("unknown generator kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    pub kind: GeneratorKind,
    /// Radial perturbation as a fraction of the circumradius.
    #[serde(with = "crate::geometry::scalar::serde_scalar")]
    pub perturbation: Scalar,
    pub max_attempts: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64, kind: GeneratorKind) -> Self {
        GeneratorConfig {
            n,
            seed,
            kind,
            perturbation: BigRational::new(BigInt::from(1), BigInt::from(64)),
            max_attempts: 20_000,
        }
    }
}

/// A generated polygon and the number of draws it took.
#[derive(Clone, Debug)]
pub struct Generated {
    pub polygon: Polygon,
    pub attempts: usize,
}

pub fn generate(cfg: &GeneratorConfig) -> Result<Polygon> {
    generate_counted(cfg).map(|g| g.polygon)
}

/// Draws candidates until one satisfies the kind's predicates.
pub fn generate_counted(cfg: &GeneratorConfig) -> Result<Generated> {
    let min_n = if cfg.kind == GeneratorKind::SimpleNonconvex { 4 } else { 3 };
    if cfg.n < min_n {
        return Err(Error::TooFewVertices { required: min_n, found: cfg.n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let eps = crate::geometry::scalar::to_f64(&cfg.perturbation);
    for attempt in 1..=cfg.max_attempts {
        let candidate = match cfg.kind {
            GeneratorKind::ConvexGeneric => draw_on_circle(&mut rng, cfg.n, eps, sorted_uniform_angles),
            GeneratorKind::ConvexGenericCoherent => draw_on_circle(&mut rng, cfg.n, eps, jittered_even_angles),
            GeneratorKind::SimpleNonconvex => draw_star(&mut rng, cfg.n),
        };
        let Some(p) = candidate else { continue };
        if accepts(cfg.kind, &p) {
            return Ok(Generated { polygon: p, attempts: attempt });
        }
    }
    Err(Error::RejectionBudgetExceeded { attempts: cfg.max_attempts })
}

fn accepts(kind: GeneratorKind, p: &Polygon) -> bool {
    match kind {
        GeneratorKind::ConvexGeneric => is_convex(p) && genericity_witness(p).is_none(),
        GeneratorKind::ConvexGenericCoherent => {
            is_convex(p) && (0..p.len()).all(|i| is_coherent_at(p, i)) && genericity_witness(p).is_none()
        }
        GeneratorKind::SimpleNonconvex => {
            let pr = polygon_predicates_limited(p, usize::MAX);
            pr.simple && !pr.convex && pr.generic == Some(true)
        }
    }
}

fn grid(v: f64) -> Scalar {
    let scale = 10f64.powi(GRID_DIGITS as i32);
    BigRational::new(BigInt::from((v * scale).round() as i64), BigInt::from(10i64.pow(GRID_DIGITS)))
}

fn sorted_uniform_angles(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut a: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
    a.sort_by(f64::total_cmp);
    a
}

/// Evenly spaced angles, each moved by up to a quarter of the spacing.
fn jittered_even_angles(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let step = 2.0 * PI / n as f64;
    let offset = rng.gen_range(0.0..step);
    (0..n).map(|k| offset + step * k as f64 + rng.gen_range(-0.25..0.25) * step).collect()
}

fn draw_on_circle(
    rng: &mut ChaCha8Rng,
    n: usize,
    eps: f64,
    angles: fn(&mut ChaCha8Rng, usize) -> Vec<f64>,
) -> Option<Polygon> {
    let pts = angles(rng, n)
        .into_iter()
        .map(|t| {
            let r = 1.0 + rng.gen_range(-eps..=eps);
            Point::new(grid(r * t.cos()), grid(r * t.sin()))
        })
        .collect();
    Polygon::new(pts).ok()
}

/// Star-shaped polygon around the origin with strongly varying radii.
fn draw_star(rng: &mut ChaCha8Rng, n: usize) -> Option<Polygon> {
    let pts = sorted_uniform_angles(rng, n)
        .into_iter()
        .map(|t| {
            let r = rng.gen_range(0.3..1.0);
            Point::new(grid(r * t.cos()), grid(r * t.sin()))
        })
        .collect();
    Polygon::new(pts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon_predicates;

    #[test]
    fn deterministic_per_seed() {
        let cfg = GeneratorConfig::new(8, 42, GeneratorKind::ConvexGeneric);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        let other = GeneratorConfig::new(8, 43, GeneratorKind::ConvexGeneric);
        assert_ne!(generate(&cfg).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn each_kind_meets_its_predicates() {
        for n in 4..=10 {
            for kind in GeneratorKind::ALL {
                let p = generate(&GeneratorConfig::new(n, n as u64, kind)).unwrap();
                let pr = polygon_predicates(&p);
                assert_eq!(pr.generic, Some(true));
                assert!(pr.simple && pr.ccw);
                match kind {
                    GeneratorKind::ConvexGeneric => assert!(pr.convex),
                    GeneratorKind::ConvexGenericCoherent => assert!(pr.convex && pr.coherent),
                    GeneratorKind::SimpleNonconvex => assert!(!pr.convex),
                }
            }
        }
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let mut cfg = GeneratorConfig::new(3, 1, GeneratorKind::SimpleNonconvex);
        assert!(matches!(generate(&cfg), Err(Error::TooFewVertices { .. })));
        cfg.n = 40;
        cfg.kind = GeneratorKind::ConvexGeneric;
        cfg.max_attempts = 1;
        cfg.perturbation = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(generate(&cfg), Err(Error::RejectionBudgetExceeded { attempts: 1 }));
    }
}
