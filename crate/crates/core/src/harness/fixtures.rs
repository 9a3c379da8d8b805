//! Pinned cutting diagonals for the corpus polygons.
//!
//! The published figures do not name their cutting diagonals, so each one is
//! recovered once by exhaustive search and pinned in
//! `fixtures/pinned_diagonals.txt`. Each non-comment line reads
//!
//! ```text
//! <corpus id> <a> <b> <key>=<value> ...
//! ```
//!
//! with the expected counts of the whole polygon and both parts. The file is
//! regenerated with `cargo run -p fourvertex --example pin_fixtures`.

use serde::Serialize;

use super::corpus::corpus_entry;
use crate::decomposition::{Counts, Decomposition, InequalityRecord, MIN_PART};
use crate::error::{Error, Result};
use crate::geometry::Polygon;
use crate::triangulation::is_boundary;

pub const PINNED_FIXTURES: &str = include_str!("../../fixtures/pinned_diagonals.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinnedDiagonal {
    pub id: String,
    pub diagonal: (usize, usize),
    pub expected: Vec<(String, i64)>,
}

impl PinnedDiagonal {
    pub fn get(&self, key: &str) -> Option<i64> {
        self.expected.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

impl std::fmt::Display for PinnedDiagonal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {}", self.id, self.diagonal.0, self.diagonal.1)?;
        for (k, v) in &self.expected {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<PinnedDiagonal>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("fixture line {}: {what}", lineno + 1));
        let mut fields = line.split_whitespace();
        let id = fields.next().ok_or_else(|| bad("missing id"))?.to_string();
        let mut index = || -> Result<usize> {
            fields.next().ok_or_else(|| bad("missing index"))?.parse().map_err(|_| bad("bad index"))
        };
        let diagonal = (index()?, index()?);
        let expected = fields
            .map(|kv| {
                let (k, v) = kv.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                Ok((k.to_string(), v.parse().map_err(|_| bad("bad value"))?))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(PinnedDiagonal { id, diagonal, expected });
    }
    Ok(out)
}

/// The fixtures shipped with the crate.
pub fn pinned_diagonals() -> Vec<PinnedDiagonal> {
    parse_fixtures(PINNED_FIXTURES).expect("shipped fixture file parses")
}

pub fn pinned_for(id: &str) -> Option<PinnedDiagonal> {
    pinned_diagonals().into_iter().find(|p| p.id == id)
}

/// Whole/part counts for one raw split (convexity not required).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCounts {
    pub diagonal: (usize, usize),
    pub whole: Counts,
    pub part1: Counts,
    pub part2: Counts,
}

impl SplitCounts {
    pub fn global_max_any(&self) -> InequalityRecord {
        InequalityRecord::new(self.whole.s_minus, self.part1.s_minus, self.part2.s_minus, 3)
    }

    fn expected(&self) -> Vec<(String, i64)> {
        let c = |k: &str, v: usize| (k.to_string(), v as i64);
        vec![
            c("s_minus", self.whole.s_minus),
            c("s_minus_part1", self.part1.s_minus),
            c("s_minus_part2", self.part2.s_minus),
            c("l_minus", self.whole.l_minus),
            c("l_minus_part1", self.part1.l_minus),
            c("l_minus_part2", self.part2.l_minus),
            ("global_max_any_slack".to_string(), self.global_max_any().slack),
        ]
    }
}

/// Counts for every split of `p` whose parts both have at least four vertices
/// and whose counts are all defined.
pub fn all_splits(p: &Polygon) -> Result<Vec<SplitCounts>> {
    let n = p.len();
    let whole = Counts::of(p)?;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            let k = b - a + 1;
            if is_boundary(n, a, b) || k < MIN_PART || n + 2 - k < MIN_PART {
                continue;
            }
            let d = Decomposition::split(p, a, b)?;
            if let (Ok(part1), Ok(part2)) = (Counts::of(&d.part1), Counts::of(&d.part2)) {
                out.push(SplitCounts { diagonal: (a, b), whole, part1, part2 });
            }
        }
    }
    Ok(out)
}

/// What each corpus entry's pinned diagonal must exhibit.
fn criterion(id: &str) -> Option<fn(&SplitCounts) -> bool> {
    match id {
        // Both parts have exactly two global maxima.
        "global-cut-12gon" => Some(|s| s.part1.s_minus == 2 && s.part2.s_minus == 2),
        // Local maxima add up exactly while the naive global sum fails.
        "local-cut-12gon" => Some(|s| {
            s.whole.s_minus > s.part1.s_minus + s.part2.s_minus && s.whole.l_minus == s.part1.l_minus + s.part2.l_minus
        }),
        // The general bound for global maxima is attained.
        "tight-cut-15gon" => Some(|s| s.global_max_any().slack == 0),
        _ => None,
    }
}

/// Recomputes the pinned diagonal of a corpus entry by exhaustive search.
pub fn search_pinned(id: &str) -> Result<Option<PinnedDiagonal>> {
    let entry = corpus_entry(id).ok_or_else(|| Error::InvalidArgument(format!("unknown corpus id {id:?}")))?;
    let Some(pred) = criterion(id) else {
        return Ok(None);
    };
    let splits = all_splits(&entry.polygon()?)?;
    Ok(splits.iter().find(|s| pred(s)).map(|s| PinnedDiagonal {
        id: id.to_string(),
        diagonal: s.diagonal,
        expected: s.expected(),
    }))
}

/// Corpus ids that carry a pinned diagonal.
pub const PINNED_IDS: [&str; 3] = ["global-cut-12gon", "local-cut-12gon", "tight-cut-15gon"];

/// Full text of a regenerated fixture file.
pub fn render_fixture_file() -> Result<String> {
    let mut out = String::from(
        "# Pinned cutting diagonals for corpus polygons.\n\
         # Format: <corpus id> <a> <b> <key>=<value> ...  (0-based vertex indices, a < b)\n\
         # Keys: global (s_minus) and local (l_minus) maxima of the whole polygon and of\n\
         # part1 = a..=b and part2 = b..n,0..=a, plus the slack of s- >= s-1 + s-2 - 3.\n\
         # Each line is the first diagonal, in lexicographic order, meeting the entry's criterion.\n\
         # Regenerate: cargo run -p fourvertex --example pin_fixtures > crates/core/fixtures/pinned_diagonals.txt\n",
    );
    for id in PINNED_IDS {
        match search_pinned(id)? {
            Some(p) => out.push_str(&format!("{p}\n")),
            None => out.push_str(&format!("# {id}: no diagonal meets the criterion\n")),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_lines_roundtrip() {
        let text = "# comment\nfoo 1 4 s_minus=3 slack=-1\n\n";
        let parsed = parse_fixtures(text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].diagonal, (1, 4));
        assert_eq!(parsed[0].get("slack"), Some(-1));
        assert_eq!(parsed[0].to_string(), "foo 1 4 s_minus=3 slack=-1");
        assert!(parse_fixtures("foo 1").is_err());
        assert!(parse_fixtures("foo 1 2 bad").is_err());
    }
}
