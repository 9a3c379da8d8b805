//! Inductive lower bounds on extremal counts, carried out as a computation.
//!
//! Each branch descends by splitting along a diagonal (or, for pentagons, by
//! deleting an extremal vertex) until only quadrilaterals remain, which have
//! exactly two extremes of each kind. Every step records the inequality it
//! relies on and checks it against the actual counts.

use serde::Serialize;

use super::{decompose, Counts, InequalityRecord};
use crate::error::{Error, Result};
use crate::extremality::{global_extremality, local_extremality, Extremality};
use crate::geometry::{require_convex, require_generic, Polygon};
use crate::triangulation::{anti_delaunay, balanced_diagonal, delaunay};

/// The count a certificate branch bounds from below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `s-`: empty neighbouring circles.
    GlobalMax,
    /// `s+`: full neighbouring circles.
    GlobalMin,
    /// `l-`: local maxima.
    LocalMax,
}

impl Quantity {
    fn count(self, c: &Counts) -> usize {
        match self {
            Quantity::GlobalMax => c.s_minus,
            Quantity::GlobalMin => c.s_plus,
            Quantity::LocalMax => c.l_minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    /// Any diagonal of a hexagon; parts lose at most two.
    Hexagon,
    /// Balanced Delaunay diagonal; global maxima lose at most two.
    Delaunay,
    /// Balanced anti-Delaunay diagonal; global minima lose at most two.
    AntiDelaunay,
    /// Any diagonal; local maxima lose at most two.
    AnyDiagonal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStep {
    /// Quadrilateral with exactly two extremes.
    Quadrilateral,
    /// Pentagon reduced by deleting an extremal vertex, which cannot raise the count.
    VertexRemoval {
        removed: usize,
    },
    Split {
        diagonal: (usize, usize),
        rule: SplitRule,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateNode {
    pub n: usize,
    pub count: usize,
    /// Lower bound proven for `count` by this subtree.
    pub bound: usize,
    pub step: CertificateStep,
    /// Inequality used at this step, checked against the actual counts.
    pub inequality: Option<InequalityRecord>,
    pub children: Vec<CertificateNode>,
}

impl CertificateNode {
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FourVertexCertificate {
    pub counts: Counts,
    pub global_max: CertificateNode,
    pub global_min: CertificateNode,
    pub local_max: CertificateNode,
    pub depth: usize,
    /// `s+ + s- >= 4` follows from the two global branches.
    pub global_four_vertex: bool,
    /// `l+ = l-` and the local branch gives `l+ + l- >= 4`.
    pub local_four_vertex: bool,
}

/// Builds lower-bound certificates for `s-`, `s+` and `l-`.
pub fn four_vertex_via_decomposition(p: &Polygon) -> Result<FourVertexCertificate> {
    require_convex(p)?;
    require_generic(p)?;
    if p.len() < 4 {
        return Err(Error::TooFewVertices { required: 4, found: p.len() });
    }
    let counts = Counts::of(p)?;
    let global_max = certify(p, Quantity::GlobalMax)?;
    let global_min = certify(p, Quantity::GlobalMin)?;
    let local_max = certify(p, Quantity::LocalMax)?;
    let depth = global_max.depth().max(global_min.depth()).max(local_max.depth());
    Ok(FourVertexCertificate {
        global_four_vertex: global_max.bound + global_min.bound >= 4
            && counts.s_minus >= global_max.bound
            && counts.s_plus >= global_min.bound,
        local_four_vertex: counts.l_plus == counts.l_minus
            && 2 * local_max.bound >= 4
            && counts.l_minus >= local_max.bound,
        counts,
        global_max,
        global_min,
        local_max,
        depth,
    })
}

fn certify(p: &Polygon, q: Quantity) -> Result<CertificateNode> {
    let n = p.len();
    let count = q.count(&Counts::of(p)?);
    match n {
        4 => {
            if count != 2 {
                return Err(Error::RecursionBaseViolated { n, count });
            }
            Ok(CertificateNode {
                n,
                count,
                bound: 2,
                step: CertificateStep::Quadrilateral,
                inequality: None,
                children: vec![],
            })
        }
        5 => {
            let removed = (0..n)
                .find(|&i| is_extreme(p, i, q).unwrap_or(false))
                .ok_or(Error::RecursionBaseViolated { n, count })?;
            let child = certify(&p.without_vertex(removed)?, q)?;
            let rec = InequalityRecord::new(count, child.count, 0, 0);
            check(&rec, "vertex removal")?;
            Ok(CertificateNode {
                n,
                count,
                bound: child.bound,
                step: CertificateStep::VertexRemoval { removed },
                inequality: Some(rec),
                children: vec![child],
            })
        }
        _ => {
            let (diagonal, rule) = choose_split(p, q)?;
            let d = decompose(p, diagonal.0, diagonal.1)?;
            let left = certify(&d.part1, q)?;
            let right = certify(&d.part2, q)?;
            let loss = 2;
            let rec = InequalityRecord::new(count, left.count, right.count, loss);
            check(&rec, &format!("{rule:?} split"))?;
            let bound = (left.bound + right.bound).saturating_sub(loss as usize);
            Ok(CertificateNode {
                n,
                count,
                bound,
                step: CertificateStep::Split { diagonal: d.diagonal, rule },
                inequality: Some(rec),
                children: vec![left, right],
            })
        }
    }
}

fn choose_split(p: &Polygon, q: Quantity) -> Result<((usize, usize), SplitRule)> {
    let balanced = match q {
        Quantity::GlobalMax | Quantity::LocalMax => balanced_diagonal(&delaunay(p)?),
        Quantity::GlobalMin => balanced_diagonal(&anti_delaunay(p)?),
    };
    match (balanced, q) {
        (Ok(d), Quantity::GlobalMax) => Ok((d, SplitRule::Delaunay)),
        (Ok(d), Quantity::GlobalMin) => Ok((d, SplitRule::AntiDelaunay)),
        (Ok(d), Quantity::LocalMax) => Ok((d, SplitRule::AnyDiagonal)),
        (Err(Error::NoBalancedDiagonal), Quantity::LocalMax) => Ok(((0, 3), SplitRule::AnyDiagonal)),
        (Err(Error::NoBalancedDiagonal), _) if p.len() == 6 => Ok(((0, 3), SplitRule::Hexagon)),
        (Err(e), _) => Err(e),
    }
}

fn is_extreme(p: &Polygon, i: usize, q: Quantity) -> Result<bool> {
    Ok(match q {
        Quantity::GlobalMax => global_extremality(p, i)? == Extremality::Max,
        Quantity::GlobalMin => global_extremality(p, i)? == Extremality::Min,
        Quantity::LocalMax => local_extremality(p, i)? == Extremality::Max,
    })
}

fn check(rec: &InequalityRecord, name: &str) -> Result<()> {
    if rec.holds {
        Ok(())
    } else {
        Err(Error::InequalityViolated { name: name.to_string(), lhs: rec.lhs, rhs: rec.rhs })
    }
}
