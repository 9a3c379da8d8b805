//! SVG drawings of polygons, their evolutes and neighbouring circles.

use std::fmt::Write as _;

use crate::error::Result;
use crate::evolute::evolute;
use crate::extremality::Extremality;
use crate::geometry::{circumcircle, scalar::to_f64, Point, Polygon};

pub const POLYGON_STROKE: &str = "blue";
pub const EVOLUTE_STROKE: &str = "green";

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Width of the image in pixels; the height follows the aspect ratio.
    pub width: f64,
    pub evolute: bool,
    /// Draws the neighbouring circle of every vertex.
    pub circles: bool,
    pub labels: bool,
    /// Filled markers at extremal vertices.
    pub markers: Vec<(usize, Extremality)>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width: 600.0, evolute: true, circles: false, labels: false, markers: Vec::new() }
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)], width: f64) -> (Frame, f64) {
        let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            lo_x = lo_x.min(x);
            hi_x = hi_x.max(x);
            lo_y = lo_y.min(y);
            hi_y = hi_y.max(y);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(f64::EPSILON);
        let margin = 20.0;
        let scale = (width - 2.0 * margin) / span;
        let height = (hi_y - lo_y) * scale + 2.0 * margin;
        (Frame { min_x: lo_x, max_y: hi_y, scale, margin }, height)
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.margin + (x - self.min_x) * self.scale, self.margin + (self.max_y - y) * self.scale)
    }
}

fn push_cycle(out: &mut String, frame: &Frame, pts: &[(f64, f64)], stroke: &str, class: &str) {
    for i in 0..pts.len() {
        let (x1, y1) = frame.map(pts[i]);
        let (x2, y2) = frame.map(pts[(i + 1) % pts.len()]);
        let _ = writeln!(
            out,
            r#"  <line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{stroke}" stroke-width="1.5"/>"#
        );
    }
}

fn floats(points: &[Point]) -> Vec<(f64, f64)> {
    points.iter().map(Point::to_f64).collect()
}

/// Renders `p` as a standalone SVG 1.1 document.
pub fn render_svg(p: &Polygon, opts: &RenderOptions) -> Result<String> {
    let poly = floats(p.vertices());
    let evo = if opts.evolute { Some(floats(&evolute(p)?.centers)) } else { None };
    let circles: Vec<((f64, f64), f64)> = if opts.circles {
        (0..p.len())
            .filter_map(|i| circumcircle(p.vertex(p.prev(i)), p.vertex(i), p.vertex(p.next(i))).ok())
            .map(|c| (c.center.to_f64(), to_f64(&c.radius_sq).sqrt()))
            .collect()
    } else {
        Vec::new()
    };
    let mut extent = poly.clone();
    extent.extend(evo.iter().flatten().copied());
    for &((x, y), r) in &circles {
        extent.push((x - r, y - r));
        extent.push((x + r, y + r));
    }
    let (frame, height) = Frame::fit(&extent, opts.width);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{height:.0}" viewBox="0 0 {w:.3} {height:.3}">"#,
        w = opts.width
    );
    for &(c, r) in &circles {
        let (cx, cy) = frame.map(c);
        let _ = writeln!(
            out,
            r#"  <circle class="neighbour-circle" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="gray" stroke-width="0.5"/>"#,
            r * frame.scale
        );
    }
    push_cycle(&mut out, &frame, &poly, POLYGON_STROKE, "polygon");
    if let Some(e) = &evo {
        push_cycle(&mut out, &frame, e, EVOLUTE_STROKE, "evolute");
    }
    for &(i, kind) in &opts.markers {
        let (x, y) = frame.map(poly[i % poly.len()]);
        let fill = match kind {
            Extremality::Max => "red",
            Extremality::Min => "orange",
            Extremality::Neither => continue,
        };
        let _ = writeln!(out, r#"  <circle class="marker" cx="{x:.3}" cy="{y:.3}" r="4" fill="{fill}"/>"#);
    }
    if opts.labels {
        for (i, &pt) in poly.iter().enumerate() {
            let (x, y) = frame.map(pt);
            let _ = writeln!(out, r#"  <text x="{:.3}" y="{:.3}" font-size="11">{i}</text>"#, x + 5.0, y - 5.0);
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
