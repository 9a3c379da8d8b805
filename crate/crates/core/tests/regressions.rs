mod common;

use fourvertex::decomposition::{audit_all_diagonals, decompose, verify_inequalities, Counts, Decomposition};
use fourvertex::geometry::{is_convex, require_generic};
use fourvertex::harness::fixtures::{all_splits, pinned_diagonals, search_pinned, PINNED_IDS};
use fourvertex::harness::{corpus, corpus_entry};
use fourvertex::io::{parse_csv, to_csv};
use fourvertex::render::{render_svg, RenderOptions};
use fourvertex::triangulation::{balanced_diagonal, enumerate_triangulations, random_triangulation, Triangulation};
use fourvertex::{Error, Point, Polygon};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn triangulation_counts_are_catalan() {
    for n in 3..=9 {
        assert_eq!(enumerate_triangulations(n).len() as u64, common::catalan(n - 2), "n = {n}");
    }
}

#[test]
fn balanced_diagonals_exist_from_seven_vertices() {
    for n in [7, 8] {
        for t in enumerate_triangulations(n) {
            balanced_diagonal(&t).unwrap();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 9..=14 {
        for _ in 0..200 {
            balanced_diagonal(&random_triangulation(n, &mut rng)).unwrap();
        }
    }
    let snowflake = Triangulation::from_diagonals(6, [(1, 3), (3, 5), (1, 5)]).unwrap();
    assert_eq!(balanced_diagonal(&snowflake), Err(Error::NoBalancedDiagonal));
}

#[test]
fn pinned_fixtures_are_reproducible() {
    let pinned = pinned_diagonals();
    assert_eq!(pinned.len(), PINNED_IDS.len());
    for pin in pinned {
        assert_eq!(search_pinned(&pin.id).unwrap().as_ref(), Some(&pin), "{}", pin.id);
    }
}

#[test]
fn pinned_counts_match_brute_force() {
    for pin in pinned_diagonals() {
        let e = corpus_entry(&pin.id).unwrap();
        let pts = common::pts(e.xs, e.ys);
        let n = pts.len();
        let (a, b) = pin.diagonal;
        let part1: Vec<_> = pts[a..=b].to_vec();
        let part2: Vec<_> = pts[b..].iter().chain(&pts[..=a]).cloned().collect();
        assert_eq!(part1.len() + part2.len(), n + 2);
        let count = |q: &[common::Pt]| common::global_extremes(q).0.len() as i64;
        assert_eq!(pin.get("s_minus"), Some(count(&pts)), "{}", pin.id);
        assert_eq!(pin.get("s_minus_part1"), Some(count(&part1)), "{}", pin.id);
        assert_eq!(pin.get("s_minus_part2"), Some(count(&part2)), "{}", pin.id);
    }
}

/// The corpus 15-gon has a reflex vertex at index 13. Moving that vertex
/// slightly outward gives a convex generic polygon with the same kind of
/// tight cut.
#[test]
fn repaired_tight_cut_15gon() {
    let e = corpus_entry("tight-cut-15gon").unwrap();
    let raw = e.polygon().unwrap();
    assert!(!is_convex(&raw));
    let mut pts = e.points().unwrap();
    pts[13] = Point::parse("2.16", "4.32").unwrap();
    let p = Polygon::new(pts).unwrap();
    assert!(is_convex(&p));
    require_generic(&p).unwrap();
    let audit = audit_all_diagonals(&p).unwrap();
    let tight: Vec<_> = audit.reports.iter().filter(|r| r.global_max_any.slack == 0).collect();
    assert!(!tight.is_empty());
    for r in &tight {
        assert!(r.global_max_any.holds);
    }
}

/// A random convex generic 14-gon on which a single cut raises the number of
/// empty neighbouring circles from 3 to 4 + 3.
#[test]
fn general_split_bound_fails_on_a_14gon() {
    let xs = [
        "0.98357",
        "0.925692",
        "0.858657",
        "0.753287",
        "-0.413658",
        "-0.474868",
        "-0.710841",
        "-0.879153",
        "-0.95109",
        "-0.937221",
        "-0.726813",
        "-0.521418",
        "-0.379792",
        "0.048588",
    ];
    let ys = [
        "0.0539",
        "0.380712",
        "0.520576",
        "0.659268",
        "0.898914",
        "0.866896",
        "0.700082",
        "0.452157",
        "0.280055",
        "-0.378012",
        "-0.701724",
        "-0.855287",
        "-0.923564",
        "-0.994618",
    ];
    let p = Polygon::new(xs.iter().zip(&ys).map(|(x, y)| Point::parse(x, y).unwrap()).collect()).unwrap();
    assert!(is_convex(&p));
    require_generic(&p).unwrap();
    let r = verify_inequalities(&decompose(&p, 1, 9).unwrap()).unwrap();
    assert_eq!((r.parent.s_minus, r.part1.s_minus, r.part2.s_minus), (3, 4, 3));
    assert!(!r.global_max_any.holds);
    assert!(r.local_max_any.holds);

    let pts = common::pts(&xs, &ys);
    let part1 = pts[1..=9].to_vec();
    let part2: Vec<_> = pts[9..].iter().chain(&pts[..=1]).cloned().collect();
    let count = |q: &[common::Pt]| common::global_extremes(q).0.len();
    assert_eq!((count(&pts), count(&part1), count(&part2)), (3, 4, 3));
}

#[test]
fn raw_splits_cover_every_long_diagonal() {
    let p = corpus_entry("global-cut-12gon").unwrap().polygon().unwrap();
    let splits = all_splits(&p).unwrap();
    // 12 * 9 / 2 diagonals minus the 12 that cut off a triangle.
    assert_eq!(splits.len(), 42);
    let whole = Counts::of(&p).unwrap();
    assert!(splits.iter().all(|s| s.whole == whole));
    let d = Decomposition::split(&p, 0, 6).unwrap();
    assert_eq!(d.part1.len() + d.part2.len(), 14);
}

#[test]
fn corpus_csv_round_trips_exactly() {
    for e in corpus() {
        let pts = e.points().unwrap();
        let text = to_csv(&pts);
        assert_eq!(parse_csv(&text).unwrap(), pts, "{}", e.id);
        let expected = format!("{}\n{}\n", e.xs.join(","), e.ys.join(","));
        assert_eq!(text, expected, "{}", e.id);
    }
}

#[test]
fn corpus_svgs_have_one_segment_per_edge() {
    for e in corpus() {
        let p = e.polygon().unwrap();
        let svg = render_svg(&p, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"class="polygon""#).count(), p.len(), "{}", e.id);
        assert_eq!(svg.matches(r#"class="evolute""#).count(), p.len(), "{}", e.id);
    }
}
