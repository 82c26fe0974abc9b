//! Text formats: point files, the JSON geograph document, DOT and SVG.
//!
//! A point file holds one point per line as two whitespace-separated
//! rationals (`3`, `-7/2`). Blank lines and lines whose first non-blank
//! character is `#` are skipped.
//!
//! Rationals in the JSON document are always strings so nothing is lost to
//! floating point. Field order and sorting are fixed, which makes the output
//! byte-stable.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::ChainDecomposition;
use crate::config::PointConfig;
use crate::error::Error;
use crate::exact::{Point, Scalar};
use crate::halving::{components, Geograph};
use crate::orientation::OrientedGeograph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: point repeats the point on line {first_line}")]
    Duplicate { line: usize, first_line: usize },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Duplicate { line, .. } => *line,
        }
    }
}

/// Parsed point file. `lines[i]` is the 1-based source line of point `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFile {
    pub points: Vec<Point>,
    pub lines: Vec<usize>,
}

impl PointFile {
    /// Enforce the remaining configuration invariants (parity, general
    /// position).
    pub fn into_config(self) -> Result<PointConfig, Error> {
        PointConfig::new(self.points)
    }
}

pub fn parse_points(text: &str) -> Result<PointFile, ParseError> {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::Syntax {
                line,
                message: format!("expected 2 coordinates, found {}", fields.len()),
            });
        }
        let coord = |s: &str| {
            s.parse::<Scalar>().map_err(|e| ParseError::Syntax {
                line,
                message: e.to_string(),
            })
        };
        let p = Point::new(coord(fields[0])?, coord(fields[1])?);
        if let Some(&first_line) = seen.get(&p) {
            return Err(ParseError::Duplicate { line, first_line });
        }
        seen.insert(p.clone(), line);
        points.push(p);
        lines.push(line);
    }
    Ok(PointFile { points, lines })
}

pub fn write_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Serializable snapshot of a geograph and, optionally, an orientation and
/// its chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeographDocument {
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
    /// `[1, t]`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<[Scalar; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chains: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl GeographDocument {
    pub fn from_geograph(g: &Geograph) -> Self {
        GeographDocument {
            points: g.config().points().to_vec(),
            edges: g.edges().to_vec(),
            components: components(g).classes().to_vec(),
            direction: None,
            chains: None,
        }
    }

    pub fn from_oriented(og: &OrientedGeograph, chains: Option<&ChainDecomposition>) -> Self {
        GeographDocument {
            direction: Some([Scalar::one(), og.direction().t().clone()]),
            chains: chains.map(|d| d.chains().iter().map(|c| c.vertices().to_vec()).collect()),
            ..GeographDocument::from_geograph(og.geograph())
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: GeographDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Checks the sorting and range rules the serializer guarantees.
    pub fn validate(&self) -> Result<(), DocumentError> {
        let invalid = |m: String| Err(DocumentError::Invalid(m));
        let n = self.points.len();
        for &(i, j) in &self.edges {
            if !(i < j && j < n) {
                return invalid(format!("edge [{i}, {j}] must satisfy i < j < {n}"));
            }
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("edges must be strictly increasing".into());
        }
        let mut covered = vec![false; n];
        for class in &self.components {
            if class.is_empty() || class.windows(2).any(|w| w[0] >= w[1]) {
                return invalid("each component must be a nonempty increasing list".into());
            }
            for &v in class {
                if v >= n || std::mem::replace(&mut covered[v], true) {
                    return invalid(format!("component vertex {v} out of range or repeated"));
                }
            }
        }
        if self.components.windows(2).any(|w| w[0][0] >= w[1][0]) {
            return invalid("components must be sorted by first element".into());
        }
        if let Some([one, _]) = &self.direction {
            if one != &Scalar::one() {
                return invalid("direction must have the form [1, t]".into());
            }
        }
        if let Some(chains) = &self.chains {
            if chains.iter().flatten().any(|&v| v >= n) {
                return invalid("chain vertex out of range".into());
            }
        }
        Ok(())
    }

    /// Rebuild the geograph, re-checking the configuration invariants.
    pub fn to_geograph(&self) -> Result<Geograph, Error> {
        Geograph::new(PointConfig::new(self.points.clone())?, self.edges.clone())
    }
}

pub fn to_dot(g: &Geograph) -> String {
    let mut out = String::from("graph halving {\n");
    for (i, p) in g.config().points().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{i}\", coords=\"{} {}\"];", p.x, p.y);
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// SVG canvas side length.
pub const SVG_SIZE: i64 = 1000;
/// Blank border kept around the fitted points.
pub const SVG_MARGIN: i64 = 50;
pub const SVG_POINT_RADIUS: &str = "6";
pub const SVG_EDGE_WIDTH: &str = "2";
/// Component colors, cycled by component index.
pub const SVG_PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Render points and halving edges.
///
/// Points are fitted with one uniform scale into the square
/// `[MARGIN, SIZE - MARGIN]^2` (y pointing up), computed exactly and only
/// then rounded to 3 decimals. Edges and points take their component's
/// palette color.
pub fn to_svg(g: &Geograph) -> String {
    let pts = g.config().points();
    let min_x = pts.iter().map(|p| &p.x).min().expect("nonempty");
    let max_x = pts.iter().map(|p| &p.x).max().expect("nonempty");
    let min_y = pts.iter().map(|p| &p.y).min().expect("nonempty");
    let max_y = pts.iter().map(|p| &p.y).max().expect("nonempty");
    let mut span = (max_x - min_x).max(max_y - min_y);
    if span.is_zero() {
        span = Scalar::one();
    }
    let inner = Scalar::from_int(SVG_SIZE - 2 * SVG_MARGIN);
    let scale = &inner / &span;
    let margin = Scalar::from_int(SVG_MARGIN);
    let bottom = Scalar::from_int(SVG_SIZE - SVG_MARGIN);
    let coord = |p: &Point| {
        let x = &margin + (&p.x - min_x) * &scale;
        let y = &bottom - (&p.y - min_y) * &scale;
        (fmt3(&x), fmt3(&y))
    };
    let screen: Vec<(String, String)> = pts.iter().map(coord).collect();
    let partition = components(g);
    let color = |v: usize| SVG_PALETTE[partition.class_of(v) % SVG_PALETTE.len()];

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" fill=\"#ffffff\"/>"
    );
    let _ = writeln!(out, "<g stroke-width=\"{SVG_EDGE_WIDTH}\" stroke-linecap=\"round\">");
    for &(a, b) in g.edges() {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>",
            screen[a].0,
            screen[a].1,
            screen[b].0,
            screen[b].1,
            color(a)
        );
    }
    out.push_str("</g>\n<g stroke=\"#000000\" stroke-width=\"1\">\n");
    for (v, (x, y)) in screen.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"{SVG_POINT_RADIUS}\" fill=\"{}\"/>",
            color(v)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Exact rounding to 3 decimals, halves away from zero.
fn fmt3(s: &Scalar) -> String {
    let scaled = s.abs() * Scalar::from_int(1000) + Scalar::ratio(1, 2);
    let thousandths = num_integer::Integer::div_floor(scaled.numer(), scaled.denom());
    let (whole, frac) = num_integer::Integer::div_rem(&thousandths, &num_bigint::BigInt::from(1000));
    let sign = if s.signum() < 0 && thousandths != num_bigint::BigInt::from(0) {
        "-"
    } else {
        ""
    };
    format!("{sign}{whole}.{frac:0>3}")
}
