use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use fourvertex::decomposition::{
    self, audit_all_diagonals, verify_inequalities, Counts, Decomposition, InequalityRecord,
};
use fourvertex::evolute::{
    cusp_flags, evolute as evolute_of, evolute_winding_number, sample_parametric, winding_number, CuspFlag,
    ParametricCurve, CUSP_TOLERANCE,
};
use fourvertex::extremality::{
    bose_counts, global_extremality, local_extremality, radial_extremality, vertex_sign, BoseCounts, Extremality,
    RadialMode, VertexSign,
};
use fourvertex::geometry::polygon_predicates_limited;
use fourvertex::harness::{run_suite, tag_names, GeneratorKind, Mutation, SuiteConfig, DEFAULT_SEED};
use fourvertex::io::{decimal_pairs, read_points, to_csv, write_points};
use fourvertex::render::{render_svg, RenderOptions};
use fourvertex::{left_angle, Error, Polygon, PolygonPredicates};
use serde::Serialize;

use crate::{AnalyzeArgs, CurveKind, DecomposeArgs, EvoluteArgs, FuzzArgs, MarkerKind, RenderArgs, SampleArgs};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Parse(String),
    /// Input parsed but a precondition failed.
    Precondition(String),
    /// The property suite reported failures.
    SuiteFailed,
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::SuiteFailed => 1,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) => Some(m),
            CliError::SuiteFailed => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Parse(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

type CliResult = Result<(), CliError>;

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected N or LO..HI, got {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn print_json<T: Serialize>(value: &T) -> CliResult {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    println!("{text}");
    Ok(())
}

fn write_text(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Polygon, CliError> {
    Ok(Polygon::new(read_points(path)?)?)
}

#[derive(Serialize)]
struct Counted {
    plus: usize,
    minus: usize,
}

fn counted(labels: &[Extremality]) -> Counted {
    Counted {
        plus: labels.iter().filter(|l| **l == Extremality::Min).count(),
        minus: labels.iter().filter(|l| **l == Extremality::Max).count(),
    }
}

#[derive(Serialize)]
struct AnalyzeCounts {
    s_plus: Option<usize>,
    s_minus: Option<usize>,
    l_plus: Option<usize>,
    l_minus: Option<usize>,
    r_plus: Option<usize>,
    r_minus: Option<usize>,
}

#[derive(Serialize)]
struct BoseBlock {
    counts: BoseCounts,
    /// `s+ - t+ - 2`, `s- - t- - 2`, `s+ + t+ + u+ - (n - 2)`, `s- + t- + u- - (n - 2)`.
    residuals: [i64; 4],
    identities_hold: bool,
}

#[derive(Serialize)]
struct VertexRow {
    index: usize,
    x: String,
    y: String,
    angle: Option<f64>,
    sign: Option<VertexSign>,
    global: Option<Extremality>,
    local: Option<Extremality>,
    radial: Option<Extremality>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    reoriented: bool,
    predicates: PolygonPredicates,
    vertices: Vec<VertexRow>,
    counts: AnalyzeCounts,
    bose: Option<BoseBlock>,
    /// Fields that could not be computed, with the reason.
    unavailable: BTreeMap<&'static str, String>,
}

fn family<T>(
    unavailable: &mut BTreeMap<&'static str, String>,
    name: &'static str,
    n: usize,
    f: impl Fn(usize) -> fourvertex::Result<T>,
) -> Option<Vec<T>> {
    match (0..n).map(f).collect::<fourvertex::Result<Vec<T>>>() {
        Ok(v) => Some(v),
        Err(e) => {
            unavailable.insert(name, e.to_string());
            None
        }
    }
}

pub fn analyze(a: &AnalyzeArgs) -> CliResult {
    let p = load(&a.input)?;
    let n = p.len();
    let predicates = polygon_predicates_limited(&p, a.census_limit);
    let mut unavailable = BTreeMap::new();
    let angles = family(&mut unavailable, "angles", n, |i| left_angle(&p, i).map(|t| t.radians()));
    let signs = family(&mut unavailable, "signs", n, |i| vertex_sign(&p, i));
    let global = family(&mut unavailable, "global", n, |i| global_extremality(&p, i));
    let local = family(&mut unavailable, "local", n, |i| local_extremality(&p, i));
    let mode = if a.lenient_radius { RadialMode::PlateauExtremal } else { RadialMode::Strict };
    let radial = family(&mut unavailable, "radial", n, |i| radial_extremality(&p, i, mode));
    let bose = if !predicates.convex {
        unavailable.insert("bose", "polygon is not convex".into());
        None
    } else if n > a.census_limit {
        unavailable.insert("bose", format!("more than {} vertices", a.census_limit));
        None
    } else {
        match bose_counts(&p) {
            Ok(counts) => {
                Some(BoseBlock { residuals: counts.residuals(n), identities_hold: counts.identities_hold(n), counts })
            }
            Err(e) => {
                unavailable.insert("bose", e.to_string());
                None
            }
        }
    };
    if a.strict {
        if let Some((field, reason)) = unavailable.iter().next() {
            return Err(CliError::Precondition(format!("{field}: {reason}")));
        }
    }
    let pick = |v: &Option<Vec<Extremality>>| v.as_deref().map(counted);
    let (s, l, r) = (pick(&global), pick(&local), pick(&radial));
    let counts = AnalyzeCounts {
        s_plus: s.as_ref().map(|c| c.plus),
        s_minus: s.as_ref().map(|c| c.minus),
        l_plus: l.as_ref().map(|c| c.plus),
        l_minus: l.as_ref().map(|c| c.minus),
        r_plus: r.as_ref().map(|c| c.plus),
        r_minus: r.as_ref().map(|c| c.minus),
    };
    let at = |v: &Option<Vec<Extremality>>, i: usize| v.as_ref().map(|v| v[i]);
    let vertices = decimal_pairs(p.vertices())
        .into_iter()
        .enumerate()
        .map(|(i, [x, y])| VertexRow {
            index: i,
            x,
            y,
            angle: angles.as_ref().map(|v| v[i]),
            sign: signs.as_ref().map(|v| v[i]),
            global: at(&global, i),
            local: at(&local, i),
            radial: at(&radial, i),
        })
        .collect();
    print_json(&AnalyzeReport { n, reoriented: p.was_reoriented(), predicates, vertices, counts, bose, unavailable })
}

#[derive(Serialize)]
struct EvoluteReport {
    n: usize,
    /// A single entry when every neighbouring circle has the same centre.
    centers: Vec<[String; 2]>,
    degenerate: bool,
    winding_p: Option<i64>,
    winding_e: Option<i64>,
    cusps: Option<Vec<usize>>,
    unavailable: BTreeMap<&'static str, String>,
}

pub fn evolute(a: &EvoluteArgs) -> CliResult {
    let p = load(&a.input)?;
    let e = evolute_of(&p)?;
    let mut unavailable = BTreeMap::new();
    let mut note = |field: &'static str, r: fourvertex::Result<i64>| match r {
        Ok(v) => Some(v),
        Err(err) => {
            unavailable.insert(field, err.to_string());
            None
        }
    };
    let winding_p = note("winding_p", winding_number(&p).map(|w| w.value));
    let winding_e = if e.degenerate {
        note("winding_e", Err(Error::DegenerateEvolute))
    } else {
        note("winding_e", evolute_winding_number(&p).map(|w| w.value))
    };
    let cusps = match cusp_flags(&p, CUSP_TOLERANCE) {
        Ok(flags) => Some(flags.iter().enumerate().filter(|(_, f)| **f == CuspFlag::Cusp).map(|(i, _)| i).collect()),
        Err(err) => {
            unavailable.insert("cusps", err.to_string());
            None
        }
    };
    if a.winding {
        for field in ["winding_p", "winding_e"] {
            if let Some(reason) = unavailable.get(field) {
                return Err(CliError::Precondition(format!("{field}: {reason}")));
            }
        }
    }
    if let Some(path) = &a.svg {
        write_text(path, &render_svg(&p, &RenderOptions::default())?)?;
    }
    print_json(&EvoluteReport {
        n: p.len(),
        centers: decimal_pairs(if e.degenerate { &e.centers[..1] } else { &e.centers }),
        degenerate: e.degenerate,
        winding_p,
        winding_e,
        cusps,
        unavailable,
    })
}

#[derive(Serialize)]
struct RawSplit {
    diagonal: (usize, usize),
    whole: Counts,
    part1: Counts,
    part2: Counts,
    part1_indices: Vec<usize>,
    part2_indices: Vec<usize>,
    global_max_any: InequalityRecord,
}

pub fn decompose(a: &DecomposeArgs) -> CliResult {
    let p = load(&a.input)?;
    if a.audit {
        return print_json(&audit_all_diagonals(&p)?);
    }
    let [i, j] = a.diagonal.as_deref().and_then(|d| d.try_into().ok()).expect("clap enforces two indices");
    if a.raw {
        let d = Decomposition::split(&p, i, j)?;
        let (whole, part1, part2) = (Counts::of(&p)?, Counts::of(&d.part1)?, Counts::of(&d.part2)?);
        return print_json(&RawSplit {
            diagonal: d.diagonal,
            global_max_any: InequalityRecord::new(whole.s_minus, part1.s_minus, part2.s_minus, 3),
            whole,
            part1,
            part2,
            part1_indices: d.part1_indices,
            part2_indices: d.part2_indices,
        });
    }
    print_json(&verify_inequalities(&decomposition::decompose(&p, i, j)?)?)
}

pub fn fuzz(a: &FuzzArgs) -> CliResult {
    let names = tag_names();
    if a.list_tags {
        for t in names {
            println!("{t}");
        }
        return Ok(());
    }
    let tags = if a.tags.is_empty() {
        None
    } else {
        let unknown: Vec<&String> = a.tags.iter().filter(|t| !names.contains(&t.as_str())).collect();
        if !unknown.is_empty() {
            return Err(CliError::Parse(format!("unknown tags {unknown:?}; see --list-tags")));
        }
        Some(a.tags.iter().cloned().collect::<BTreeSet<_>>())
    };
    let kinds = if a.kind.is_empty() {
        GeneratorKind::ALL.to_vec()
    } else {
        a.kind
            .iter()
            .map(|k| k.parse())
            .collect::<fourvertex::Result<Vec<GeneratorKind>>>()
            .map_err(|e| CliError::Parse(e.to_string()))?
    };
    let cfg = SuiteConfig {
        n_min: a.n.0,
        n_max: a.n.1,
        count: a.count,
        seed: a.seed.unwrap_or(DEFAULT_SEED),
        kinds,
        tags,
        include_corpus: !a.no_corpus,
        mutation: a.mutate_in_circle.map(|query| Mutation::FlipInCircle { query }),
    };
    let report = run_suite(&cfg);
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match &a.output {
        Some(path) => write_text(path, &(text + "\n"))?,
        None => println!("{text}"),
    }
    for t in &report.tags {
        let status = if t.failed == 0 { "ok" } else { "FAILED" };
        eprintln!("{:34} {status:6} checked {:5} failed {:3} excluded {:5}", t.tag, t.checked, t.failed, t.excluded);
    }
    for g in &report.generation {
        eprintln!(
            "generator {:24} draws {:5} attempts {:6} acceptance {:.3}",
            g.kind.name(),
            g.draws,
            g.attempts,
            g.acceptance_rate
        );
    }
    if report.passed {
        Ok(())
    } else {
        Err(CliError::SuiteFailed)
    }
}

pub fn sample(a: &SampleArgs) -> CliResult {
    let curve = match a.kind {
        CurveKind::Ellipse => ParametricCurve::Ellipse { a: a.a, b: a.b },
        CurveKind::Flower => ParametricCurve::Flower { petals: a.k, amplitude: a.amplitude },
    };
    let p = sample_parametric(curve, a.m)?;
    match &a.output {
        Some(path) => write_points(path, p.vertices())?,
        None => print!("{}", to_csv(p.vertices())),
    }
    Ok(())
}

pub fn render(a: &RenderArgs) -> CliResult {
    let p = load(&a.input)?;
    let markers = match a.markers {
        MarkerKind::None => Vec::new(),
        MarkerKind::Global => {
            (0..p.len()).map(|i| Ok((i, global_extremality(&p, i)?))).collect::<fourvertex::Result<_>>()?
        }
        MarkerKind::Local => {
            (0..p.len()).map(|i| Ok((i, local_extremality(&p, i)?))).collect::<fourvertex::Result<_>>()?
        }
    };
    let opts = RenderOptions { width: a.width, evolute: !a.no_evolute, circles: a.circles, labels: a.labels, markers };
    let svg = render_svg(&p, &opts)?;
    match &a.output {
        Some(path) => write_text(path, &svg),
        None => {
            print!("{svg}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..12"), Ok((4, 12)));
        assert_eq!(parse_range("4..=12"), Ok((4, 12)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("9..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::Parse("x".into())).code(), 2);
        assert_eq!(CliError::from(Error::DegenerateEvolute).code(), 3);
        assert_eq!(CliError::SuiteFailed.code(), 1);
    }
}
