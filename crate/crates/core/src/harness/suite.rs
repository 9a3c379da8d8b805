//! Property suite over generated and corpus polygons.
//!
//! Every tag names one claim. A case that does not meet a tag's
//! preconditions is counted as excluded, never as failed.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::corpus::corpus;
use super::generator::{generate_counted, GeneratorConfig, GeneratorKind};
use crate::decomposition::{audit_all_diagonals, four_vertex_via_decomposition, AuditReport, Counts, Decomposition};
use crate::error::{Error, Result};
use crate::evolute::{cusp_flags, local_extremes, verify_evolute_identity, winding_number, CuspFlag, CUSP_TOLERANCE};
use crate::extremality::classify_circle;
use crate::extremality::{
    analyze_with, bose_counts_with, curvature_compare, global_extremality, local_extremality, neighbour_radii_sq,
    AnalyzeOptions, Containment, CurvatureRelation, Extremality, ExtremalityReport,
};
use crate::geometry::{
    circumcenter, in_circle, is_convex, orientation, polygon_predicates, CirclePosition, Orientation, Polygon,
};
use crate::triangulation::{
    anti_delaunay, balanced_diagonal, delaunay, flip_order_independent, Triangulation, TriangulationKind,
};

/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 20_240_607;

/// Deliberate fault injected to check that the suite can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Inverts the answer of the given in-circle query (by call order) in
    /// every empty/full circle census.
    FlipInCircle { query: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Draws per generator kind.
    pub count: usize,
    pub seed: u64,
    pub kinds: Vec<GeneratorKind>,
    /// Run only these tags; `None` runs all.
    pub tags: Option<BTreeSet<String>>,
    pub include_corpus: bool,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_min: 4,
            n_max: 12,
            count: 500,
            seed: DEFAULT_SEED,
            kinds: GeneratorKind::ALL.to_vec(),
            tags: None,
            include_corpus: true,
            mutation: None,
        }
    }
}

/// A polygon under test with its cached predicates.
pub struct Case {
    pub source: String,
    pub polygon: Polygon,
    pub convex: bool,
    pub simple: bool,
    pub generic: bool,
    pub coherent: bool,
    seed: u64,
    report: OnceLock<Result<ExtremalityReport>>,
    audit: OnceLock<Result<AuditReport>>,
}

impl Case {
    pub fn new(source: String, polygon: Polygon, seed: u64) -> Self {
        let pr = polygon_predicates(&polygon);
        Case {
            source,
            convex: pr.convex,
            simple: pr.simple,
            generic: pr.generic == Some(true),
            coherent: pr.coherent,
            polygon,
            seed,
            report: OnceLock::new(),
            audit: OnceLock::new(),
        }
    }

    fn convex_generic(&self) -> bool {
        self.convex && self.generic
    }

    fn report(&self) -> std::result::Result<&ExtremalityReport, &Error> {
        let opts = AnalyzeOptions { bose_limit: 0, ..AnalyzeOptions::default() };
        self.report.get_or_init(|| analyze_with(&self.polygon, opts)).as_ref()
    }

    fn audit(&self) -> std::result::Result<&AuditReport, &Error> {
        self.audit.get_or_init(|| audit_all_diagonals(&self.polygon)).as_ref()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Excluded,
}

type Check = fn(&Case, &SuiteConfig) -> Outcome;

fn pass_if(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    };
}

macro_rules! require {
    ($cond:expr) => {
        if !$cond {
            return Outcome::Excluded;
        }
    };
}

/// Every tag with its check.
pub const TAGS: &[(&str, Check)] = &[
    ("bose-identities", check_bose),
    ("global-four-vertex", check_global_four),
    ("local-four-vertex", check_local_four),
    ("radial-four-vertex", check_radial_four),
    ("extreme-balance", check_balance),
    ("maximal-existence", check_existence),
    ("global-implies-local", check_global_local),
    ("coherent-local-radial", check_coherent_radial),
    ("quadrilateral-extremes", check_quadrilateral),
    ("circle-exchange", check_circle_exchange),
    ("vertex-removal-global", check_removal_global),
    ("vertex-removal-local", check_removal_local),
    ("evolute-winding-identity", check_evolute_identity),
    ("evolute-cusps", check_cusps),
    ("evolute-convex-winding", check_convex_evolute_winding),
    ("winding-simple", check_winding_simple),
    ("winding-reversal", check_winding_reversal),
    ("delaunay-circles", check_delaunay_circles),
    ("flip-order-independence", check_flip_order),
    ("edge-kind-exclusive", check_edge_exclusive),
    ("balanced-diagonal", check_balanced),
    ("split-global-max-any", check_split_any),
    ("split-global-max-hexagon", check_split_hexagon),
    ("split-global-max-delaunay", check_split_delaunay),
    ("split-global-min-anti-delaunay", check_split_anti),
    ("split-local-max-any", check_split_local),
    ("split-parts-generic", check_parts_generic),
    ("split-empty-persistence", check_empty_persistence),
    ("four-vertex-certificate", check_certificate),
    ("in-circle-symmetry", check_in_circle_symmetry),
];

pub fn tag_names() -> Vec<&'static str> {
    TAGS.iter().map(|(t, _)| *t).collect()
}

fn check_bose(c: &Case, cfg: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let p = &c.polygon;
    let mut calls = 0usize;
    let flip = cfg.mutation.map(|Mutation::FlipInCircle { query }| query);
    let mut oracle = |q: [usize; 4]| {
        let r = p.in_circle_at(q[0], q[1], q[2], q[3]);
        let hit = flip == Some(calls);
        calls += 1;
        match (hit, r) {
            (true, Ok(CirclePosition::Inside)) => Ok(CirclePosition::Outside),
            (true, Ok(CirclePosition::Outside)) => Ok(CirclePosition::Inside),
            (_, r) => r,
        }
    };
    let counts = attempt!(bose_counts_with(p, &mut oracle));
    pass_if(counts.identities_hold(p.len()), || format!("{counts:?}, residuals {:?}", counts.residuals(p.len())))
}

fn check_global_four(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let r = attempt!(c.report());
    pass_if(r.s_plus + r.s_minus >= 4, || format!("s+ = {}, s- = {}", r.s_plus, r.s_minus))
}

fn check_local_four(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let r = attempt!(c.report());
    pass_if(r.l_plus + r.l_minus >= 4, || format!("l+ = {}, l- = {}", r.l_plus, r.l_minus))
}

fn check_radial_four(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.coherent && c.polygon.len() >= 4);
    let r = match c.report() {
        Ok(r) => r,
        Err(Error::RadiusTie { .. }) => return Outcome::Excluded,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    pass_if(r.r_plus + r.r_minus >= 4, || format!("r+ = {}, r- = {}", r.r_plus, r.r_minus))
}

fn check_balance(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let r = attempt!(c.report());
    pass_if(r.l_plus == r.l_minus && r.r_plus == r.r_minus, || {
        format!("l+ {} l- {} r+ {} r- {}", r.l_plus, r.l_minus, r.r_plus, r.r_minus)
    })
}

fn check_existence(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let r = attempt!(c.report());
    pass_if(r.s_minus >= 1 && r.l_minus >= 1 && r.r_minus >= 1, || {
        format!("s- {} l- {} r- {}", r.s_minus, r.l_minus, r.r_minus)
    })
}

fn check_global_local(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let r = attempt!(c.report());
    let bad: Vec<usize> = r
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.global.is_extremal() && l.global != l.local)
        .map(|(i, _)| i)
        .collect();
    pass_if(bad.is_empty(), || format!("global label not matched locally at {bad:?}"))
}

fn check_coherent_radial(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.coherent && c.polygon.len() >= 4);
    let p = &c.polygon;
    let radii = attempt!(neighbour_radii_sq(p));
    let n = p.len();
    for i in 0..n {
        let prev = p.prev(i);
        let rel = attempt!(curvature_compare(p, prev));
        if radii[prev] == radii[i] {
            return Outcome::Excluded;
        }
        let greater = rel == CurvatureRelation::Greater;
        if greater != (radii[prev] < radii[i]) {
            return Outcome::Fail(format!("vertex {prev} vs {i}: relation {rel:?} but radii order disagrees"));
        }
    }
    let r = attempt!(c.report());
    pass_if(r.labels.iter().all(|l| l.radial == l.local.opposite()), || "label vectors differ".into())
}

fn check_quadrilateral(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() == 4);
    let r = attempt!(c.report());
    let radial_ok = !c.coherent || (r.r_plus == 2 && r.r_minus == 2);
    pass_if(r.s_plus == 2 && r.s_minus == 2 && r.l_plus == 2 && r.l_minus == 2 && radial_ok, || format!("{r:?}"))
}

/// With `C_B` through `A, B, C` and `C_A` through `X, A, B`: when `X` is on
/// the same side of `AB` as `C`, `X` inside `C_B` iff `C` outside `C_A`; on
/// the opposite side, `X` inside `C_B` iff `C` inside `C_A`.
fn check_circle_exchange(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.generic && c.polygon.len() >= 4);
    let p = &c.polygon;
    for i in 0..p.len() {
        let [a, b, cc, x] = [0, 1, 2, 3].map(|k| p.vertex(i + k));
        let x_in_cb = attempt!(in_circle(a, b, cc, x)) == CirclePosition::Inside;
        let c_in_ca = attempt!(in_circle(x, a, b, cc)) == CirclePosition::Inside;
        let same_side = orientation(a, b, x) == orientation(a, b, cc);
        let ok = if same_side { x_in_cb != c_in_ca } else { x_in_cb == c_in_ca };
        if !ok {
            return Outcome::Fail(format!("window at {i}"));
        }
    }
    Outcome::Pass
}

fn check_removal_global(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 5);
    let p = &c.polygon;
    let whole = attempt!(Counts::of(p));
    for i in 0..p.len() {
        let label = attempt!(global_extremality(p, i));
        if !label.is_extremal() {
            continue;
        }
        let smaller = attempt!(Counts::of(&attempt!(p.without_vertex(i))));
        let (before, after) = match label {
            Extremality::Max => (whole.s_minus, smaller.s_minus),
            _ => (whole.s_plus, smaller.s_plus),
        };
        if !(before == after || before == after + 1) {
            return Outcome::Fail(format!("removing {label:?} vertex {i}: {before} -> {after}"));
        }
    }
    Outcome::Pass
}

fn check_removal_local(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 5);
    let p = &c.polygon;
    let n = p.len();
    for i in 0..n {
        if attempt!(local_extremality(p, i)) != Extremality::Max {
            continue;
        }
        let reduced = attempt!(p.without_vertex(i));
        let moved = |j: usize| if j > i { j - 1 } else { j };
        for orig in [p.offset(i, -2), p.offset(i, 2)] {
            if attempt!(local_extremality(&reduced, moved(orig))) == Extremality::Max
                && attempt!(local_extremality(p, orig)) != Extremality::Max
            {
                return Outcome::Fail(format!("removing {i}: vertex {orig} lost its local maximum"));
            }
        }
    }
    Outcome::Pass
}

fn check_evolute_identity(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.generic && c.polygon.len() >= 4);
    let id = attempt!(verify_evolute_identity(&c.polygon));
    let residual = |w: crate::evolute::WindingNumber| (w.raw - w.value as f64).abs();
    pass_if(id.holds && residual(id.wind_polygon) < 1e-6 && residual(id.wind_evolute) < 1e-6, || format!("{id:?}"))
}

fn check_cusps(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.generic && c.polygon.len() >= 4);
    let flags = attempt!(cusp_flags(&c.polygon, CUSP_TOLERANCE));
    let extremes: BTreeSet<usize> = attempt!(local_extremes(&c.polygon)).into_iter().map(|(i, _)| i).collect();
    let cusps: BTreeSet<usize> =
        flags.iter().enumerate().filter(|(_, f)| **f == CuspFlag::Cusp).map(|(i, _)| i).collect();
    pass_if(cusps == extremes, || format!("cusps {cusps:?} vs local extremes {extremes:?}"))
}

fn check_convex_evolute_winding(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let id = attempt!(verify_evolute_identity(&c.polygon));
    let extremes = attempt!(local_extremes(&c.polygon)).len() as i64;
    pass_if(2 * id.wind_evolute.value == 2 - extremes, || {
        format!("wind(E) {} with {extremes} extremes", id.wind_evolute.value)
    })
}

fn check_winding_simple(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.simple && c.polygon.is_ccw());
    let p = &c.polygon;
    let w = match winding_number(p) {
        Ok(w) => w,
        Err(Error::DegenerateAngle { .. }) => return Outcome::Excluded,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let total = w.raw * 2.0 * PI;
    pass_if(w.value == 1 && (total - 2.0 * PI).abs() < 1e-9, || format!("{w:?}"))
}

fn check_winding_reversal(c: &Case, _: &SuiteConfig) -> Outcome {
    let w = match winding_number(&c.polygon) {
        Ok(w) => w,
        Err(_) => return Outcome::Excluded,
    };
    let r = attempt!(winding_number(&c.polygon.reversed()));
    pass_if(r.value == -w.value, || format!("{} vs {}", w.value, r.value))
}

fn triangle_containment(p: &Polygon, t: &Triangulation, want: Containment) -> std::result::Result<(), String> {
    for tri in t.triangles() {
        let cls = classify_circle(p, tri[0], tri[1], tri[2]).map_err(|e| e.to_string())?;
        if cls.containment != want {
            return Err(format!("triangle {tri:?} is {:?}", cls.containment));
        }
    }
    Ok(())
}

fn check_delaunay_circles(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let p = &c.polygon;
    let n = p.len();
    let dt = attempt!(delaunay(p));
    let adt = attempt!(anti_delaunay(p));
    if let Err(e) = triangle_containment(p, &dt, Containment::Empty) {
        return Outcome::Fail(format!("Delaunay: {e}"));
    }
    if let Err(e) = triangle_containment(p, &adt, Containment::Full) {
        return Outcome::Fail(format!("anti-Delaunay: {e}"));
    }
    let bose = attempt!(crate::extremality::bose_counts(p));
    let empty = bose.s_minus + bose.t_minus + bose.u_minus;
    let full = bose.s_plus + bose.t_plus + bose.u_plus;
    pass_if(dt.triangles().len() == n - 2 && adt.triangles().len() == n - 2 && empty == n - 2 && full == n - 2, || {
        format!("{} / {} triangles, {empty} empty, {full} full", dt.triangles().len(), adt.triangles().len())
    })
}

fn check_flip_order(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 5);
    let seeds = [c.seed ^ 1, c.seed ^ 2, c.seed ^ 3];
    for kind in [TriangulationKind::Delaunay, TriangulationKind::AntiDelaunay] {
        if !attempt!(flip_order_independent(&c.polygon, kind, &seeds)) {
            return Outcome::Fail(format!("{kind:?} depends on flip order"));
        }
    }
    Outcome::Pass
}

fn check_edge_exclusive(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 5);
    let dt = attempt!(delaunay(&c.polygon));
    let adt = attempt!(anti_delaunay(&c.polygon));
    let shared: Vec<_> = dt.diagonals().intersection(adt.diagonals()).collect();
    pass_if(shared.is_empty(), || format!("diagonals in both: {shared:?}"))
}

fn check_balanced(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 7);
    let dt = attempt!(delaunay(&c.polygon));
    let adt = attempt!(anti_delaunay(&c.polygon));
    attempt!(balanced_diagonal(&dt));
    attempt!(balanced_diagonal(&adt));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(c.seed);
    let t = crate::triangulation::random_triangulation(c.polygon.len(), &mut rng);
    attempt!(balanced_diagonal(&t));
    Outcome::Pass
}

fn split_check(c: &Case, name: &str) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 6);
    let audit = attempt!(c.audit());
    let mut seen = false;
    for r in &audit.reports {
        for (k, rec) in r.records() {
            if k == name {
                seen = true;
                if !rec.holds {
                    return Outcome::Fail(format!("diagonal {:?}: {} < {}", r.diagonal, rec.lhs, rec.rhs));
                }
            }
        }
    }
    if seen {
        Outcome::Pass
    } else {
        Outcome::Excluded
    }
}

fn check_split_any(c: &Case, _: &SuiteConfig) -> Outcome {
    split_check(c, "global_max_any")
}

fn check_split_hexagon(c: &Case, _: &SuiteConfig) -> Outcome {
    split_check(c, "global_max_hexagon")
}

fn check_split_delaunay(c: &Case, _: &SuiteConfig) -> Outcome {
    split_check(c, "global_max_delaunay")
}

fn check_split_anti(c: &Case, _: &SuiteConfig) -> Outcome {
    split_check(c, "global_min_anti_delaunay")
}

fn check_split_local(c: &Case, _: &SuiteConfig) -> Outcome {
    split_check(c, "local_max_any")
}

fn each_split(c: &Case, mut f: impl FnMut(&Decomposition) -> std::result::Result<(), String>) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 6);
    let audit = attempt!(c.audit());
    for r in &audit.reports {
        let d = attempt!(Decomposition::split(&c.polygon, r.diagonal.0, r.diagonal.1));
        if let Err(e) = f(&d) {
            return Outcome::Fail(format!("diagonal {:?}: {e}", r.diagonal));
        }
    }
    Outcome::Pass
}

fn check_parts_generic(c: &Case, _: &SuiteConfig) -> Outcome {
    each_split(c, |d| {
        for part in [&d.part1, &d.part2] {
            if !is_convex(part) || crate::geometry::genericity_witness(part).is_some() {
                return Err("part is not generic convex".into());
            }
        }
        Ok(())
    })
}

fn check_empty_persistence(c: &Case, _: &SuiteConfig) -> Outcome {
    let p = &c.polygon;
    each_split(c, |d| {
        for (part, map) in [(&d.part1, &d.part1_indices), (&d.part2, &d.part2_indices)] {
            // Interior vertices of a part keep both parent neighbours.
            for (j, &orig) in map.iter().enumerate().take(part.len() - 1).skip(1) {
                let parent_label = global_extremality(p, orig).map_err(|e| e.to_string())?;
                let part_label = global_extremality(part, j).map_err(|e| e.to_string())?;
                if parent_label == Extremality::Max && part_label != Extremality::Max {
                    return Err(format!("vertex {orig} lost its empty circle"));
                }
            }
        }
        Ok(())
    })
}

fn check_certificate(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.convex_generic() && c.polygon.len() >= 4);
    let cert = attempt!(four_vertex_via_decomposition(&c.polygon));
    pass_if(cert.global_four_vertex && cert.local_four_vertex, || format!("{:?}", cert.counts))
}

fn check_in_circle_symmetry(c: &Case, _: &SuiteConfig) -> Outcome {
    require!(c.generic && c.polygon.len() >= 4);
    let p = &c.polygon;
    let (a, b, cc, q) = (p.vertex(0), p.vertex(1), p.vertex(2), p.vertex(3));
    let base = attempt!(in_circle(a, b, cc, q));
    let perms = [(a, cc, b), (b, a, cc), (b, cc, a), (cc, a, b), (cc, b, a)];
    for (x, y, z) in perms {
        if attempt!(in_circle(x, y, z, q)) != base {
            return Outcome::Fail("in-circle answer depends on vertex order".into());
        }
    }
    if orientation(a, b, cc) == Orientation::Collinear {
        return Outcome::Excluded;
    }
    let o = attempt!(circumcenter(a, b, cc));
    pass_if(o.dist_sq(a) == o.dist_sq(b) && o.dist_sq(b) == o.dist_sq(cc), || "centre not equidistant".into())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub source: String,
    pub vertices: Vec<[String; 2]>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TagResult {
    pub tag: String,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub excluded: usize,
    /// First few failures.
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationStats {
    pub kind: GeneratorKind,
    pub draws: usize,
    pub attempts: usize,
    pub acceptance_rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub cases: usize,
    pub generation: Vec<GenerationStats>,
    pub generation_errors: Vec<String>,
    pub tags: Vec<TagResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn tag(&self, name: &str) -> Option<&TagResult> {
        self.tags.iter().find(|t| t.tag == name)
    }
}

const MAX_COUNTEREXAMPLES: usize = 5;

fn draw_seed(seed: u64, kind: usize, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((kind as u64) << 48) ^ index as u64
}

/// Generated cases for every configured kind, plus per-kind statistics.
pub fn generate_cases(cfg: &SuiteConfig) -> (Vec<Case>, Vec<GenerationStats>, Vec<String>) {
    let span = cfg.n_max.saturating_sub(cfg.n_min) + 1;
    let mut cases = Vec::new();
    let mut stats = Vec::new();
    let mut errors = Vec::new();
    for (k, &kind) in cfg.kinds.iter().enumerate() {
        let drawn: Vec<(usize, u64, Result<_>)> = (0..cfg.count)
            .into_par_iter()
            .map(|i| {
                let n = cfg.n_min + i % span;
                let seed = draw_seed(cfg.seed, k, i);
                (n, seed, generate_counted(&GeneratorConfig::new(n, seed, kind)))
            })
            .collect();
        let mut attempts = 0;
        let mut draws = 0;
        for (i, (n, seed, g)) in drawn.into_iter().enumerate() {
            match g {
                Ok(g) => {
                    attempts += g.attempts;
                    draws += 1;
                    cases.push(Case::new(format!("{}#{i} n={n} seed={seed}", kind.name()), g.polygon, seed));
                }
                Err(e) => errors.push(format!("{}#{i} n={n} seed={seed}: {e}", kind.name())),
            }
        }
        let acceptance_rate = if attempts == 0 { 0.0 } else { draws as f64 / attempts as f64 };
        stats.push(GenerationStats { kind, draws, attempts, acceptance_rate });
    }
    (cases, stats, errors)
}

/// Runs the selected tags over generated and corpus polygons.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let (mut cases, generation, generation_errors) = generate_cases(cfg);
    if cfg.include_corpus {
        for e in corpus() {
            if let Ok(p) = e.polygon() {
                cases.push(Case::new(format!("corpus:{}", e.id), p, cfg.seed));
            }
        }
    }
    let selected: Vec<(&str, Check)> =
        TAGS.iter().filter(|(t, _)| cfg.tags.as_ref().is_none_or(|s| s.contains(*t))).copied().collect();
    let outcomes: Vec<Vec<Outcome>> =
        cases.par_iter().map(|c| selected.iter().map(|(_, check)| check(c, cfg)).collect()).collect();
    let mut tags: Vec<TagResult> = selected
        .iter()
        .map(|(t, _)| TagResult {
            tag: t.to_string(),
            checked: 0,
            passed: 0,
            failed: 0,
            excluded: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for (case, row) in cases.iter().zip(outcomes) {
        for (res, outcome) in tags.iter_mut().zip(row) {
            match outcome {
                Outcome::Pass => {
                    res.checked += 1;
                    res.passed += 1;
                }
                Outcome::Excluded => res.excluded += 1,
                Outcome::Fail(detail) => {
                    res.checked += 1;
                    res.failed += 1;
                    if res.counterexamples.len() < MAX_COUNTEREXAMPLES {
                        res.counterexamples.push(Counterexample {
                            source: case.source.clone(),
                            vertices: crate::io::decimal_pairs(case.polygon.vertices()),
                            detail,
                        });
                    }
                }
            }
        }
    }
    let passed = generation_errors.is_empty() && tags.iter().all(|t| t.failed == 0);
    SuiteReport { config: cfg.clone(), cases: cases.len(), generation, generation_errors, tags, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(tags: &[&str]) -> SuiteConfig {
        SuiteConfig {
            n_min: 4,
            n_max: 9,
            count: 12,
            tags: Some(tags.iter().map(|s| s.to_string()).collect()),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn tag_names_are_unique() {
        let names = tag_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }

    #[test]
    fn nonconvex_draws_are_excluded_not_failed() {
        let cfg = SuiteConfig {
            kinds: vec![GeneratorKind::SimpleNonconvex],
            include_corpus: false,
            ..small(&["global-implies-local"])
        };
        let r = run_suite(&cfg);
        let t = r.tag("global-implies-local").unwrap();
        assert_eq!(t.checked, 0);
        assert_eq!(t.excluded, 12);
        assert!(r.passed);
    }

    #[test]
    fn mutation_breaks_bose_tag() {
        let clean = run_suite(&small(&["bose-identities"]));
        assert!(clean.passed);
        let mutated =
            SuiteConfig { mutation: Some(Mutation::FlipInCircle { query: 0 }), ..small(&["bose-identities"]) };
        let r = run_suite(&mutated);
        assert!(!r.passed);
        let t = r.tag("bose-identities").unwrap();
        assert!(t.failed > 0);
        assert!(!t.counterexamples[0].vertices.is_empty());
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = small(&["evolute-winding-identity", "delaunay-circles"]);
        let a = serde_json::to_string(&run_suite(&cfg)).unwrap();
        let b = serde_json::to_string(&run_suite(&cfg)).unwrap();
        assert_eq!(a, b);
    }
}
