//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fourvertex::decomposition::{audit_all_diagonals, Counts, Decomposition};
use fourvertex::evolute::{local_extremes, sample_parametric, verify_evolute_identity, ParametricCurve};
use fourvertex::extremality::{analyze_with, AnalyzeOptions};
use fourvertex::geometry::{is_convex, polygon_predicates};
use fourvertex::harness::{corpus_entry, pinned_for, run_suite, GeneratorKind, SuiteConfig, SuiteReport};
use fourvertex::triangulation::{balanced_diagonal, enumerate_triangulations, Triangulation};
use fourvertex::Error;

const BOSE_TIME_LIMIT: Duration = Duration::from_secs(60);
const WINDING_RESIDUAL: f64 = 1e-6;

struct Gate {
    failed: usize,
}

impl Gate {
    fn record(&mut self, name: &str, ok: bool, detail: impl AsRef<str>) {
        println!("[{}] {name}: {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        if !ok {
            self.failed += 1;
        }
    }
}

fn tags(report: &SuiteReport, names: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in names {
        let t = report.tag(name).expect("tag exists");
        ok &= t.failed == 0 && t.checked > 0;
        parts.push(format!("{name} {}/{} ok ({} excluded)", t.passed, t.checked, t.excluded));
        if let Some(c) = t.counterexamples.first() {
            parts.push(format!("first failure {} [{}]", c.source, c.detail));
        }
    }
    (ok, parts.join("; "))
}

fn bose_identities(gate: &mut Gate) {
    let cfg = SuiteConfig {
        n_min: 4,
        n_max: 12,
        count: 500,
        kinds: vec![GeneratorKind::ConvexGeneric],
        tags: Some(BTreeSet::from(["bose-identities".to_string()])),
        include_corpus: false,
        ..SuiteConfig::default()
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let report = pool.install(|| run_suite(&cfg));
    let elapsed = start.elapsed();
    let t = report.tag("bose-identities").unwrap();
    gate.record(
        "AC1 census identities",
        t.failed == 0 && t.checked >= 500 && elapsed < BOSE_TIME_LIMIT,
        format!("{} of {} polygons exact, {:.1} s single-threaded", t.passed, t.checked, elapsed.as_secs_f64()),
    );
}

fn global_cut(gate: &mut Gate) {
    let e = corpus_entry("global-cut-12gon").unwrap();
    let p = e.polygon().unwrap();
    let s_minus = Counts::of(&p).unwrap().s_minus;
    let brute = common::global_extremes(&common::pts(e.xs, e.ys)).0.len();
    let audit = audit_all_diagonals(&p).unwrap();
    let two_two: Vec<_> = audit
        .reports
        .iter()
        .filter(|r| r.part1.s_minus == 2 && r.part2.s_minus == 2 && r.global_max_any.holds)
        .map(|r| r.diagonal)
        .collect();
    gate.record(
        "AC3 12-gon global cut",
        s_minus == 5 && brute == 5 && !two_two.is_empty(),
        format!("s- = {s_minus} (independent count {brute}, expected 5); diagonals with parts (2, 2): {two_two:?}"),
    );
}

fn tight_cut(gate: &mut Gate) {
    let pin = pinned_for("tight-cut-15gon").unwrap();
    let p = corpus_entry("tight-cut-15gon").unwrap().polygon().unwrap();
    let d = Decomposition::split(&p, pin.diagonal.0, pin.diagonal.1).unwrap();
    let (whole, a, b) = (Counts::of(&p).unwrap(), Counts::of(&d.part1).unwrap(), Counts::of(&d.part2).unwrap());
    let slack = whole.s_minus as i64 - (a.s_minus + b.s_minus) as i64 + 3;
    let mut parts = [a.s_minus, b.s_minus];
    parts.sort();
    gate.record(
        "AC4 15-gon tight cut",
        slack == 0 && whole.s_minus == 3 && parts == [2, 4],
        format!(
            "diagonal {:?}: {} >= {} + {} - 3, slack {slack} (expected 3 = 2 + 4 - 3); convex: {}",
            pin.diagonal,
            whole.s_minus,
            a.s_minus,
            b.s_minus,
            is_convex(&p)
        ),
    );
}

fn evolute_identity(gate: &mut Gate, report: &SuiteReport) {
    let (mut ok, mut detail) = tags(report, &["evolute-winding-identity"]);
    for id in ["evolute-7gon", "evolute-9gon"] {
        let p = corpus_entry(id).unwrap().polygon().unwrap();
        match verify_evolute_identity(&p) {
            Ok(r) => {
                let residual = (r.wind_evolute.raw - r.wind_evolute.value as f64).abs();
                ok &= r.holds && residual < WINDING_RESIDUAL;
                detail.push_str(&format!(
                    "; {id}: N+ {} N- {} wind(P) {} wind(E) {}",
                    r.n_plus, r.n_minus, r.wind_polygon.value, r.wind_evolute.value
                ));
            }
            Err(e) => {
                ok = false;
                detail.push_str(&format!("; {id}: {e}"));
            }
        }
    }
    gate.record("AC5 evolute winding identity", ok, detail);
}

fn radial_hexagon(gate: &mut Gate, report: &SuiteReport) {
    let (ok, detail) = tags(report, &["coherent-local-radial"]);
    let p = corpus_entry("radial-hexagon").unwrap().polygon().unwrap();
    let coherent = polygon_predicates(&p).coherent;
    let radial = analyze_with(&p, AnalyzeOptions::default()).map(|r| r.r_plus + r.r_minus);
    let hex_ok = !coherent && radial == Ok(2);
    gate.record(
        "AC7 local and radial labels",
        ok && hex_ok,
        format!("{detail}; corpus hexagon coherent: {coherent}, radial extremes: {radial:?} (expected 2)"),
    );
}

/// Recounts the first failing split with the brute-force oracle.
fn recount_split_failure(report: &SuiteReport) -> String {
    let Some(c) = report.tag("split-global-max-any").and_then(|t| t.counterexamples.first()) else {
        return String::new();
    };
    let xs: Vec<&str> = c.vertices.iter().map(|v| v[0].as_str()).collect();
    let ys: Vec<&str> = c.vertices.iter().map(|v| v[1].as_str()).collect();
    let pts = common::pts(&xs, &ys);
    let diagonal = c.detail.trim_start_matches("diagonal (").split(')').next().unwrap_or_default();
    let Some((a, b)) =
        diagonal.split_once(", ").and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
    else {
        return String::new();
    };
    let part1 = pts[a..=b].to_vec();
    let part2: Vec<_> = pts[b..].iter().chain(&pts[..=a]).cloned().collect();
    let count = |q: &[common::Pt]| common::global_extremes(q).0.len();
    format!("; independent recount of ({a}, {b}): s- = {}, parts {} and {}", count(&pts), count(&part1), count(&part2))
}

fn lemma_triangulations(gate: &mut Gate) {
    let mut ok = true;
    let mut counts = Vec::new();
    for n in [7, 8] {
        let all = enumerate_triangulations(n);
        counts.push(all.len());
        ok &= all.iter().all(|t| balanced_diagonal(t).is_ok());
    }
    ok &= counts == [42, 132];
    let snowflake = Triangulation::from_diagonals(6, [(1, 3), (3, 5), (1, 5)]).unwrap();
    let snow = balanced_diagonal(&snowflake);
    ok &= snow == Err(Error::NoBalancedDiagonal);
    gate.record(
        "AC9 balanced diagonals",
        ok,
        format!("{} and {} triangulations all balanced; snowflake hexagon: {snow:?}", counts[0], counts[1]),
    );
}

fn flowers(gate: &mut Gate) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, m, want) in [(6, 256, 12), (16, 512, 32)] {
        let p = sample_parametric(ParametricCurve::Flower { petals: k, amplitude: 0.01 }, m).unwrap();
        let got = local_extremes(&p).map(|v| v.len());
        ok &= got == Ok(want);
        parts.push(format!("k={k} m={m}: {got:?} local extremes (expected {want}), convex {}", is_convex(&p)));
    }
    gate.record("Note sampled flowers", ok, parts.join("; "));
}

fn main() {
    let mut gate = Gate { failed: 0 };
    bose_identities(&mut gate);

    let report = run_suite(&SuiteConfig::default());
    if !report.generation_errors.is_empty() {
        gate.record("generation", false, report.generation_errors.join("; "));
    }
    let (ok, detail) = tags(&report, &["global-four-vertex", "local-four-vertex", "radial-four-vertex"]);
    gate.record("AC2 four-vertex counts", ok, detail);
    global_cut(&mut gate);
    tight_cut(&mut gate);
    evolute_identity(&mut gate, &report);
    let (ok, detail) = tags(&report, &["evolute-cusps"]);
    gate.record("AC6 cusps equal local extremes", ok, detail);
    radial_hexagon(&mut gate, &report);
    let (ok, detail) = tags(
        &report,
        &["split-global-max-any", "split-local-max-any", "split-global-max-delaunay", "split-global-min-anti-delaunay"],
    );
    gate.record("AC8 split inequalities", ok, format!("{detail}{}", recount_split_failure(&report)));
    lemma_triangulations(&mut gate);
    let (ok, detail) = tags(&report, &["vertex-removal-global"]);
    gate.record("AC10 vertex removal", ok, detail);
    let (ok, detail) = tags(&report, &["winding-simple"]);
    gate.record("AC11 winding of simple polygons", ok, detail);
    flowers(&mut gate);

    println!("{} criteria failed", gate.failed);
    if gate.failed > 0 {
        std::process::exit(1);
    }
}
