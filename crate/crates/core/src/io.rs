//! Reading and writing vertex lists.
//!
//! CSV files hold two rows, x coordinates then y coordinates. JSON files hold
//! an array of `[x, y]` pairs whose entries are numbers or decimal strings.

use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::geometry::scalar::{format_scalar_exact, parse_scalar};
use crate::geometry::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// JSON when the text starts with a bracket, CSV otherwise.
    pub fn detect(text: &str) -> Format {
        match text.trim_start().chars().next() {
            Some('[') | Some('{') => Format::Json,
            _ => Format::Csv,
        }
    }

    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<Point>> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(str::trim).collect())
        .collect();
    let [xs, ys] = rows.as_slice() else {
        return Err(Error::Parse(format!("expected two rows (x then y), found {}", rows.len())));
    };
    if xs.len() != ys.len() {
        return Err(Error::Parse(format!("row lengths differ: {} x values, {} y values", xs.len(), ys.len())));
    }
    xs.iter().zip(ys).map(|(x, y)| Point::parse(x, y)).collect()
}

fn json_scalar(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("expected a number or string, found {other}"))),
    }
}

pub fn parse_json(text: &str) -> Result<Vec<Point>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let Value::Array(items) = value else {
        return Err(Error::Parse("expected an array of [x, y] pairs".into()));
    };
    items
        .iter()
        .map(|item| match item.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok(Point::new(parse_scalar(&json_scalar(x)?)?, parse_scalar(&json_scalar(y)?)?)),
            _ => Err(Error::Parse(format!("expected an [x, y] pair, found {item}"))),
        })
        .collect()
}

pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    match Format::detect(text) {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

pub fn read_points(path: &Path) -> Result<Vec<Point>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    match Format::from_path(path) {
        Some(Format::Csv) => parse_csv(&text),
        Some(Format::Json) => parse_json(&text),
        None => parse_points(&text),
    }
}

/// Exact coordinates as `[x, y]` strings.
pub fn decimal_pairs(points: &[Point]) -> Vec<[String; 2]> {
    points.iter().map(|p| [format_scalar_exact(&p.x), format_scalar_exact(&p.y)]).collect()
}

pub fn to_csv(points: &[Point]) -> String {
    let row = |f: fn(&Point) -> String| points.iter().map(f).collect::<Vec<_>>().join(",");
    format!("{}\n{}\n", row(|p| format_scalar_exact(&p.x)), row(|p| format_scalar_exact(&p.y)))
}

pub fn to_json(points: &[Point]) -> String {
    serde_json::to_string(&decimal_pairs(points)).expect("strings serialize")
}

pub fn write_points(path: &Path, points: &[Point]) -> Result<()> {
    let text = match Format::from_path(path) {
        Some(Format::Json) => to_json(points),
        _ => to_csv(points),
    };
    std::fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrip_is_exact() {
        let pts = parse_csv("1.46, -2.19, 1/3\n5.59,5.17,0\n").unwrap();
        assert_eq!(pts[2], Point::new(parse_scalar("1/3").unwrap(), parse_scalar("0").unwrap()));
        assert_eq!(parse_csv(&to_csv(&pts)).unwrap(), pts);
    }

    #[test]
    fn json_accepts_numbers_and_strings() {
        let pts = parse_points(r#"[[0, "1.5"], ["2", 3.25]]"#).unwrap();
        assert_eq!(pts[1], Point::parse("2", "3.25").unwrap());
        assert_eq!(parse_json(&to_json(&pts)).unwrap(), pts);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_csv("1,2,3\n4,5\n").is_err());
        assert!(parse_csv("1,2,3\n").is_err());
        assert!(parse_csv("1,x\n2,3\n").is_err());
        assert!(parse_json("[[1,2,3]]").is_err());
        assert!(parse_json("{\"a\": 1}").is_err());
    }
}
