//! The labeled rectangular grid RG[p,q].
//!
//! Cells are indexed `(column, row)` from the bottom-left corner. Internal
//! edges are stored in one flat vector: first the `q-1` horizontal lines
//! (bottom to top, each left to right), then the `p-1` vertical lines (left
//! to right, each bottom to top). This is the same order in which the text
//! form lists them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label carried by the midpoint of an internal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Crossing, serialized as `1`.
    Pos,
    /// Crossing, serialized as `-1`.
    Neg,
    /// Two-sided mirror lying along the edge, serialized as `2`.
    Mir,
    /// Two-sided mirror perpendicular to the edge, serialized as `-2`.
    Perp,
    /// Virtual crossing, serialized as `0`. Accepted by the parser only.
    Virt,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 4] = [EdgeLabel::Pos, EdgeLabel::Neg, EdgeLabel::Mir, EdgeLabel::Perp];

    pub fn value(self) -> i8 {
        match self {
            EdgeLabel::Pos => 1,
            EdgeLabel::Neg => -1,
            EdgeLabel::Mir => 2,
            EdgeLabel::Perp => -2,
            EdgeLabel::Virt => 0,
        }
    }

    pub fn from_value(v: i64) -> Option<EdgeLabel> {
        match v {
            1 => Some(EdgeLabel::Pos),
            -1 => Some(EdgeLabel::Neg),
            2 => Some(EdgeLabel::Mir),
            -2 => Some(EdgeLabel::Perp),
            0 => Some(EdgeLabel::Virt),
            _ => None,
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, EdgeLabel::Pos | EdgeLabel::Neg)
    }

    pub fn is_mirror(self) -> bool {
        matches!(self, EdgeLabel::Mir | EdgeLabel::Perp)
    }

    /// +1 / -1 for crossings, 0 otherwise.
    pub fn sign(self) -> i32 {
        match self {
            EdgeLabel::Pos => 1,
            EdgeLabel::Neg => -1,
            _ => 0,
        }
    }

    /// sigma(2) = +1, sigma(-2) = -1; 0 for non-mirrors.
    pub fn mirror_sigma(self) -> i32 {
        match self {
            EdgeLabel::Mir => 1,
            EdgeLabel::Perp => -1,
            _ => 0,
        }
    }

    /// Crossing sign flip; mirrors and virtual labels are fixed.
    pub fn switched(self) -> EdgeLabel {
        match self {
            EdgeLabel::Pos => EdgeLabel::Neg,
            EdgeLabel::Neg => EdgeLabel::Pos,
            other => other,
        }
    }

    pub fn other_mirror(self) -> EdgeLabel {
        match self {
            EdgeLabel::Mir => EdgeLabel::Perp,
            EdgeLabel::Perp => EdgeLabel::Mir,
            other => other,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Which way an internal edge runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Horizontal edge on top of cell `(col, row)`.
    Horizontal { col: usize, row: usize },
    /// Vertical edge on the right of cell `(col, row)`.
    Vertical { col: usize, row: usize },
}

/// Number of internal edges of RG[p,q]: `2pq - p - q`.
pub fn edge_count(p: usize, q: usize) -> usize {
    2 * p * q - p - q
}

/// Euclid.
pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Component count of the mirror-free grid, `gcd(p, q)`.
pub fn component_count_theorem(p: usize, q: usize) -> usize {
    gcd(p, q)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridCode {
    p: usize,
    q: usize,
    labels: Vec<EdgeLabel>,
}

impl GridCode {
    pub fn new(p: usize, q: usize, labels: Vec<EdgeLabel>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Shape(format!("RG[{p},{q}] needs p, q >= 1")));
        }
        let v = edge_count(p, q);
        if labels.len() != v {
            return Err(Error::Shape(format!("RG[{p},{q}] has {v} internal edges, got {} labels", labels.len())));
        }
        Ok(GridCode { p, q, labels })
    }

    /// Grid with every internal edge carrying `label`.
    pub fn filled(p: usize, q: usize, label: EdgeLabel) -> Result<Self> {
        GridCode::new(p, q, vec![label; edge_count(p.max(1), q.max(1))])
    }

    /// Builds a code from its row lists and column lists.
    pub fn from_lists(p: usize, q: usize, rows: &[Vec<EdgeLabel>], cols: &[Vec<EdgeLabel>]) -> Result<Self> {
        if rows.len() + 1 != q || rows.iter().any(|r| r.len() != p) {
            return Err(Error::Shape(format!("RG[{p},{q}] needs {} rows of length {p}", q.saturating_sub(1))));
        }
        if cols.len() + 1 != p || cols.iter().any(|c| c.len() != q) {
            return Err(Error::Shape(format!("RG[{p},{q}] needs {} columns of length {q}", p.saturating_sub(1))));
        }
        let labels = rows.iter().chain(cols.iter()).flatten().copied().collect();
        GridCode::new(p, q, labels)
    }

    /// Convenience constructor from signed integers in text order.
    pub fn from_values(p: usize, q: usize, values: &[i64]) -> Result<Self> {
        let labels = values
            .iter()
            .map(|&v| EdgeLabel::from_value(v).ok_or_else(|| Error::Label(format!("{v} is not a label"))))
            .collect::<Result<Vec<_>>>()?;
        GridCode::new(p, q, labels)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> EdgeLabel {
        self.labels[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[EdgeLabel]> {
        let split = (self.q - 1) * self.p;
        self.labels[..split].chunks(self.p.max(1))
    }

    pub fn cols(&self) -> impl Iterator<Item = &[EdgeLabel]> {
        let split = (self.q - 1) * self.p;
        self.labels[split..].chunks(self.q.max(1))
    }

    pub fn edge_kind(&self, edge: usize) -> EdgeKind {
        edge_kind(self.p, self.q, edge)
    }

    pub fn crossing_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_crossing()).count()
    }

    pub fn crossing_edges(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&e| self.labels[e].is_crossing()).collect()
    }

    pub fn is_crossing_free(&self) -> bool {
        self.labels.iter().all(|l| l.is_mirror())
    }

    pub fn has_virtual(&self) -> bool {
        self.labels.contains(&EdgeLabel::Virt)
    }

    pub fn ensure_classical(&self) -> Result<()> {
        if self.has_virtual() {
            Err(Error::VirtualUnsupported)
        } else {
            Ok(())
        }
    }

    /// Sum of the crossing labels.
    pub fn label_sum(&self) -> i32 {
        self.labels.iter().map(|l| l.sign()).sum()
    }

    /// All crossings share one sign.
    pub fn is_alternating_code(&self) -> bool {
        let mut signs = self.labels.iter().filter(|l| l.is_crossing());
        match signs.next() {
            None => true,
            Some(first) => signs.all(|l| l == first),
        }
    }

    pub fn with_label(&self, edge: usize, label: EdgeLabel) -> GridCode {
        let mut out = self.clone();
        out.labels[edge] = label;
        out
    }

    pub fn set_label(&mut self, edge: usize, label: EdgeLabel) {
        self.labels[edge] = label;
    }

    pub fn into_labels(self) -> Vec<EdgeLabel> {
        self.labels
    }
}

pub fn edge_kind(p: usize, q: usize, edge: usize) -> EdgeKind {
    let split = (q - 1) * p;
    if edge < split {
        EdgeKind::Horizontal { col: edge % p, row: edge / p }
    } else {
        let k = edge - split;
        EdgeKind::Vertical { col: k / q, row: k % q }
    }
}

/// Flat index of the horizontal edge on top of cell `(col, row)`.
pub fn horizontal_edge(p: usize, _q: usize, col: usize, row: usize) -> usize {
    row * p + col
}

/// Flat index of the vertical edge right of cell `(col, row)`.
pub fn vertical_edge(p: usize, q: usize, col: usize, row: usize) -> usize {
    (q - 1) * p + col * q + row
}

/// The two cells sharing an internal edge.
pub fn cells_of_edge(p: usize, q: usize, edge: usize) -> [(usize, usize); 2] {
    match edge_kind(p, q, edge) {
        EdgeKind::Horizontal { col, row } => [(col, row), (col, row + 1)],
        EdgeKind::Vertical { col, row } => [(col, row), (col + 1, row)],
    }
}

/// Internal edges on the sides of cell `(col, row)`.
pub fn edges_of_cell(p: usize, q: usize, col: usize, row: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(4);
    if row > 0 {
        out.push(horizontal_edge(p, q, col, row - 1));
    }
    if row + 1 < q {
        out.push(horizontal_edge(p, q, col, row));
    }
    if col > 0 {
        out.push(vertical_edge(p, q, col - 1, row));
    }
    if col + 1 < p {
        out.push(vertical_edge(p, q, col, row));
    }
    out
}

impl GridCode {
    /// The code of the cells `cols x rows`, keeping only edges inside the window.
    pub fn window(&self, cols: std::ops::Range<usize>, rows: std::ops::Range<usize>) -> Result<GridCode> {
        let (p, q) = (self.p, self.q);
        if cols.is_empty() || rows.is_empty() || cols.end > p || rows.end > q {
            return Err(Error::Shape(format!("window outside RG[{p},{q}]")));
        }
        let (p2, q2) = (cols.len(), rows.len());
        let mut labels = Vec::with_capacity(edge_count(p2, q2));
        for r in rows.start..rows.end - 1 {
            for c in cols.clone() {
                labels.push(self.labels[horizontal_edge(p, q, c, r)]);
            }
        }
        for c in cols.start..cols.end - 1 {
            for r in rows.clone() {
                labels.push(self.labels[vertical_edge(p, q, c, r)]);
            }
        }
        GridCode::new(p2, q2, labels)
    }
}
