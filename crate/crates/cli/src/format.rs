//! CSV and SVG writers.
//!
//! CSV numbers use `{:.16e}` (17 significant digits, enough to round-trip any
//! f64), rows end in CRLF. SVG coordinates are pixel units with six decimals.

use std::fmt::Write as _;

use gelfond_core::points::Point;

use crate::error::Result;

pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_table(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is built from UTF-8 strings"))
}

/// Curve colours, first one blue.
pub const PALETTE: [&str; 5] = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400"];
const POLYGON: &str = "#7f7f7f";

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

enum Layer {
    Curve { points: Vec<Point>, color: String },
    Polygon { points: Vec<Point>, color: String },
}

/// A plane figure of curves and control polygons, fitted to a square canvas.
#[derive(Default)]
pub struct Figure {
    layers: Vec<Layer>,
}

impl Figure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn curve(&mut self, points: Vec<Point>, color: &str) -> &mut Self {
        self.layers.push(Layer::Curve { points, color: color.to_string() });
        self
    }

    /// Dashed polygon with a marker on every vertex.
    pub fn polygon(&mut self, points: Vec<Point>) -> &mut Self {
        self.polygon_colored(points, POLYGON)
    }

    pub fn polygon_colored(&mut self, points: Vec<Point>, color: &str) -> &mut Self {
        self.layers.push(Layer::Polygon { points, color: color.to_string() });
        self
    }

    pub fn render(&self) -> String {
        let all = self.layers.iter().flat_map(|l| match l {
            Layer::Curve { points, .. } | Layer::Polygon { points, .. } => points.iter(),
        });
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in all {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        if lo[0] > hi[0] {
            (lo, hi) = ([0.0; 2], [1.0; 2]);
        }
        let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let scale = if extent > 0.0 { (SIZE - 2.0 * MARGIN) / extent } else { 1.0 };
        let centre = [0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])];
        let map = |p: &Point| {
            let x = 0.5 * SIZE + (p[0] - centre[0]) * scale;
            let y = 0.5 * SIZE - (p[1] - centre[1]) * scale;
            (x, y)
        };
        let path = |pts: &[Point]| {
            pts.iter()
                .map(|p| {
                    let (x, y) = map(p);
                    format!("{x:.6},{y:.6}")
                })
                .collect::<Vec<_>>()
                .join(" ")
        };

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
        );
        let _ = writeln!(out, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
        for layer in &self.layers {
            match layer {
                Layer::Polygon { points, color } => {
                    let _ = writeln!(
                        out,
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
                        path(points)
                    );
                    for p in points {
                        let (x, y) = map(p);
                        let _ = writeln!(
                            out,
                            "<circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"3\" fill=\"{color}\"/>"
                        );
                    }
                }
                Layer::Curve { points, color } if points.windows(2).all(|w| w[0] == w[1]) => {
                    let (x, y) = map(&points[0]);
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"2\" fill=\"{color}\"/>"
                    );
                }
                Layer::Curve { points, color } => {
                    let _ = writeln!(
                        out,
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
                        path(points)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}
