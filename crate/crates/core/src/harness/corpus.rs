//! Published counterexample polygons, stored as their original decimals.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Point, Polygon};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub id: &'static str,
    /// First row of the coordinate matrix.
    pub xs: &'static [&'static str],
    /// Second row of the coordinate matrix.
    pub ys: &'static [&'static str],
    pub provenance: &'static str,
}

impl CorpusEntry {
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn points(&self) -> Result<Vec<Point>> {
        self.xs.iter().zip(self.ys).map(|(x, y)| Point::parse(x, y)).collect()
    }

    pub fn polygon(&self) -> Result<Polygon> {
        Polygon::new(self.points()?)
    }
}

const ENTRIES: [CorpusEntry; 6] = [
    CorpusEntry {
        id: "radial-hexagon",
        xs: &["18.38", "17.59", "13.58", "26.21", "23.68", "21.88"],
        ys: &["-2.05", "-2.41", "-6.13", "-5.82", "-3.54", "-2.9"],
        provenance: "published hexagon comparing local and radial extremes on a non-coherent polygon",
    },
    CorpusEntry {
        id: "global-cut-12gon",
        xs: &["1.46", "-2.19", "-2.79", "-2.74", "-1.48", "1.54", "4.72", "6.57", "7.78", "8.34", "6.53", "4.44"],
        ys: &["5.59", "5.17", "2.55", "-0.49", "-2.08", "-2.72", "-2.04", "-0.62", "0.84", "2.39", "4.01", "5.22"],
        provenance: "published 12-gon where global maxima of the parts undercount the whole",
    },
    CorpusEntry {
        id: "local-cut-12gon",
        xs: &["1.78", "1.24", "0.37", "1", "1.32", "1.82", "2.48", "3", "3.36", "3.45", "3.32", "2.44"],
        ys: &["4.76", "4.58", "3.77", "2.23", "1.86", "1.7", "1.7", "2", "2.41", "3.08", "4.3", "4.68"],
        provenance: "published 12-gon where the local split bound is attained but the global naive sum fails",
    },
    CorpusEntry {
        id: "tight-cut-15gon",
        xs: &[
            "0.6", "-0.98", "-1.82", "-1.85", "-1.12", "0.62", "1.63", "2.23", "2.68", "3.24", "3.52", "3.52", "3.24",
            "2.15", "1.51",
        ],
        ys: &[
            "5.12", "4.08", "2.39", "0.52", "-1.74", "-3.44", "-3.29", "-2.53", "-1.35", "0.23", "1.28", "1.86",
            "3.21", "4.32", "4.98",
        ],
        provenance: "published 15-gon whose cut attains the general split bound for global maxima",
    },
    CorpusEntry {
        id: "evolute-7gon",
        xs: &["2", "3", "2", "0", "-2", "-3", "-2"],
        ys: &["0", "2", "4", "5", "4", "2", "0"],
        provenance: "published convex heptagon used to illustrate evolutes",
    },
    CorpusEntry {
        id: "evolute-9gon",
        xs: &["0", "1", "3", "4", "4", "1", "0", "-1", "-1"],
        ys: &["1", "2", "1", "1", "5", "3", "5", "4", "2"],
        provenance: "published non-convex 9-gon used to illustrate evolutes",
    },
];

/// All embedded entries.
pub fn corpus() -> &'static [CorpusEntry] {
    &ENTRIES
}

pub fn corpus_entry(id: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_and_have_equal_rows() {
        for e in corpus() {
            assert_eq!(e.xs.len(), e.ys.len(), "{}", e.id);
            e.polygon().unwrap();
        }
        assert_eq!(corpus().len(), 6);
    }

    #[test]
    fn first_columns() {
        let e = corpus_entry("global-cut-12gon").unwrap();
        assert_eq!(e.len(), 12);
        assert_eq!(e.points().unwrap()[0], Point::parse("1.46", "5.59").unwrap());
        assert_eq!(corpus_entry("evolute-7gon").unwrap().points().unwrap()[0], Point::from_ints(2, 0));
        assert_eq!(corpus_entry("tight-cut-15gon").unwrap().len(), 15);
    }
}
