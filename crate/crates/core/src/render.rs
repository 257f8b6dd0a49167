//! SVG drawings of labeled grids.

use std::fmt::Write;

use serde::Serialize;

use crate::error::Result;
use crate::grid::{horizontal_edge, vertical_edge, EdgeKind, GridCode};
use crate::trace::{mirror_pairing, over_even, trace, Pairing, StepVisit, CONVENTION};

/// Side length of a cell in SVG units.
pub const CELL: i64 = 100;
const HALF: i64 = CELL / 2;
const MARGIN: i64 = 20;
const MIRROR_HALF: i64 = 30;
const GAP_HALF: i64 = 22;

const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
}

/// The over strand drawn again across a crossing, leaving a gap in the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingMark {
    pub edge: usize,
    pub over: Segment,
    /// Component of the over strand.
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Drawing {
    pub width: i64,
    pub height: i64,
    pub border: Segment,
    pub grid_lines: Vec<Segment>,
    pub mirrors: Vec<Segment>,
    /// One closed polygon per component.
    pub components: Vec<Vec<Point>>,
    pub crossings: Vec<CrossingMark>,
}

// Doubled grid coordinates to SVG coordinates, y pointing down.
fn at(q: usize, x: i64, y: i64) -> Point {
    Point { x: MARGIN + x * HALF, y: MARGIN + (2 * q as i64 - y) * HALF }
}

fn midpoint(kind: EdgeKind) -> (i64, i64) {
    match kind {
        EdgeKind::Horizontal { col, row } => (2 * col as i64 + 1, 2 * row as i64 + 2),
        EdgeKind::Vertical { col, row } => (2 * col as i64 + 2, 2 * row as i64 + 1),
    }
}

fn offset(p: Point, dx: i64, dy: i64) -> Point {
    Point { x: p.x + dx, y: p.y + dy }
}

pub fn drawing(code: &GridCode) -> Result<Drawing> {
    let t = trace(code)?;
    let (p, q) = (code.p(), code.q());
    let (w, h) = (2 * p as i64, 2 * q as i64);
    let mut grid_lines = Vec::new();
    for i in 1..p as i64 {
        grid_lines.push(Segment { from: at(q, 2 * i, 0), to: at(q, 2 * i, h) });
    }
    for j in 1..q as i64 {
        grid_lines.push(Segment { from: at(q, 0, 2 * j), to: at(q, w, 2 * j) });
    }

    let mut mirrors = Vec::new();
    for e in 0..code.edge_count() {
        let label = code.label(e);
        if !label.is_mirror() {
            continue;
        }
        let kind = code.edge_kind(e);
        let (x, y) = midpoint(kind);
        let c = at(q, x, y);
        // P03_12 keeps rays on either side of a vertical wall.
        let vertical = mirror_pairing(kind, label, CONVENTION) == Pairing::P03_12;
        let (dx, dy) = if vertical { (0, MIRROR_HALF) } else { (MIRROR_HALF, 0) };
        mirrors.push(Segment { from: offset(c, -dx, -dy), to: offset(c, dx, dy) });
    }

    let components: Vec<Vec<Point>> = t
        .paths
        .iter()
        .map(|path| {
            path.iter()
                .map(|s| {
                    let (a, b) = step_ends(s);
                    let start = if s.forward { a } else { b };
                    at(q, start.0, start.1)
                })
                .collect()
        })
        .collect();

    let mut crossings = Vec::new();
    for &e in &code.crossing_edges() {
        let kind = code.edge_kind(e);
        let (x, y) = midpoint(kind);
        let c = at(q, x, y);
        // NE-SW runs up-right on screen.
        let (dx, dy) = if over_even(kind, code.label(e)) { (GAP_HALF, -GAP_HALF) } else { (GAP_HALF, GAP_HALF) };
        let component = strand_owner(&t.paths, code, e, over_even(kind, code.label(e)));
        crossings.push(CrossingMark {
            edge: e,
            over: Segment { from: offset(c, -dx, -dy), to: offset(c, dx, dy) },
            component,
        });
    }

    Ok(Drawing {
        width: 2 * MARGIN + p as i64 * CELL,
        height: 2 * MARGIN + q as i64 * CELL,
        border: Segment { from: at(q, 0, h), to: at(q, w, 0) },
        grid_lines,
        mirrors,
        components,
        crossings,
    })
}

fn crossing_at(code: &GridCode, point: (i64, i64)) -> Option<usize> {
    let (x, y) = point;
    let (p, q) = (code.p() as i64, code.q() as i64);
    let e = if x % 2 == 1 && y > 0 && y < 2 * q {
        horizontal_edge(code.p(), code.q(), (x / 2) as usize, (y / 2 - 1) as usize)
    } else if x % 2 == 0 && x > 0 && x < 2 * p {
        vertical_edge(code.p(), code.q(), (x / 2 - 1) as usize, (y / 2) as usize)
    } else {
        return None;
    };
    code.label(e).is_crossing().then_some(e)
}

fn step_ends(s: &StepVisit) -> ((i64, i64), (i64, i64)) {
    let (c, r) = (2 * s.col as i64, 2 * s.row as i64);
    let sides = [(c + 1, r), (c + 2, r + 1), (c + 1, r + 2), (c, r + 1)];
    (sides[s.step], sides[(s.step + 1) % 4])
}

// Component through crossing `e` along the NE-SW diagonal, or the NW-SE one.
fn strand_owner(paths: &[Vec<StepVisit>], code: &GridCode, e: usize, ne_sw: bool) -> usize {
    for (k, path) in paths.iter().enumerate() {
        for s in path {
            let (a, b) = step_ends(s);
            for (from, to) in [(a, b), (b, a)] {
                let rising = (to.0 - from.0) == (to.1 - from.1);
                if crossing_at(code, from) == Some(e) && rising == ne_sw {
                    return k;
                }
            }
        }
    }
    0
}

fn seg(out: &mut String, s: &Segment, class: &str) {
    let _ =
        writeln!(out, r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#, s.from.x, s.from.y, s.to.x, s.to.y);
}

impl Drawing {
    pub fn to_svg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
        out.push_str("<style>\n");
        out.push_str(".grid{stroke:#bbb;stroke-width:1;stroke-dasharray:4 4}\n");
        out.push_str(".border{fill:none;stroke:#000;stroke-width:2}\n");
        out.push_str(".mirror{stroke:#000;stroke-width:6}\n");
        out.push_str(".gap{stroke:#fff;stroke-width:14}\n");
        for (k, color) in COLORS.iter().enumerate() {
            let _ = writeln!(out, ".c{k}{{fill:none;stroke:{color};stroke-width:4}}");
        }
        out.push_str("</style>\n");
        let (a, b) = (self.border.from, self.border.to);
        let _ = writeln!(
            out,
            r#"<rect class="border" x="{}" y="{}" width="{}" height="{}"/>"#,
            a.x,
            a.y,
            b.x - a.x,
            b.y - a.y
        );
        for s in &self.grid_lines {
            seg(&mut out, s, "grid");
        }
        for (k, pts) in self.components.iter().enumerate() {
            let mut d = String::new();
            for (i, pt) in pts.iter().enumerate() {
                let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, pt.x, pt.y);
            }
            d.push('Z');
            let _ = writeln!(out, r#"<path class="c{}" d="{d}"/>"#, k % COLORS.len());
        }
        for m in &self.crossings {
            seg(&mut out, &m.over, "gap");
            seg(&mut out, &m.over, &format!("c{}", m.component % COLORS.len()));
        }
        for s in &self.mirrors {
            seg(&mut out, s, "mirror");
        }
        out.push_str("</svg>\n");
        out
    }
}

pub fn render_svg(code: &GridCode) -> Result<String> {
    Ok(drawing(code)?.to_svg())
}
