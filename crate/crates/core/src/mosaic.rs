//! Knot mosaics: the mirror-curve turned by 45 degrees.
//!
//! Every edge midpoint of RG[p,q], boundary ones included, becomes a tile of
//! an (p+q) x (p+q) mosaic. Row 0 is the top row. The grid directions NE,
//! NW, SW, SE become the tile sides right, top, left, bottom.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{horizontal_edge, vertical_edge, EdgeKind, EdgeLabel, GridCode};
use crate::trace::{label_for_pairing, mirror_pairing, over_even, Pairing, CONVENTION};

/// Tile sides, in the order of the grid ports they come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Top,
    Left,
    Bottom,
}

const SIDES: [Side; 4] = [Side::Right, Side::Top, Side::Left, Side::Bottom];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MosaicTile {
    Blank,
    /// Arc joining bottom and right.
    A1,
    /// Arc joining left and bottom.
    A2,
    /// Arc joining top and left.
    A3,
    /// Arc joining right and top.
    A4,
    /// Horizontal line.
    L1,
    /// Vertical line.
    L2,
    /// Arcs left-top and bottom-right.
    D1,
    /// Arcs left-bottom and top-right.
    D2,
    /// Crossing with the horizontal strand on top.
    XPlus,
    /// Crossing with the vertical strand on top.
    XMinus,
}

impl MosaicTile {
    pub const ALL: [MosaicTile; 11] = [
        MosaicTile::Blank,
        MosaicTile::A1,
        MosaicTile::A2,
        MosaicTile::A3,
        MosaicTile::A4,
        MosaicTile::L1,
        MosaicTile::L2,
        MosaicTile::D1,
        MosaicTile::D2,
        MosaicTile::XPlus,
        MosaicTile::XMinus,
    ];

    pub fn mnemonic(self) -> &'static str {
        match self {
            MosaicTile::Blank => "B",
            MosaicTile::A1 => "A1",
            MosaicTile::A2 => "A2",
            MosaicTile::A3 => "A3",
            MosaicTile::A4 => "A4",
            MosaicTile::L1 => "L1",
            MosaicTile::L2 => "L2",
            MosaicTile::D1 => "D1",
            MosaicTile::D2 => "D2",
            MosaicTile::XPlus => "X+",
            MosaicTile::XMinus => "X-",
        }
    }

    /// Pairs of joined sides.
    pub fn arcs(self) -> &'static [(Side, Side)] {
        use Side::*;
        match self {
            MosaicTile::Blank => &[],
            MosaicTile::A1 => &[(Bottom, Right)],
            MosaicTile::A2 => &[(Left, Bottom)],
            MosaicTile::A3 => &[(Top, Left)],
            MosaicTile::A4 => &[(Right, Top)],
            MosaicTile::L1 => &[(Left, Right)],
            MosaicTile::L2 => &[(Top, Bottom)],
            MosaicTile::D1 => &[(Left, Top), (Bottom, Right)],
            MosaicTile::D2 => &[(Left, Bottom), (Top, Right)],
            MosaicTile::XPlus | MosaicTile::XMinus => &[(Left, Right), (Top, Bottom)],
        }
    }

    pub fn connects(self, side: Side) -> bool {
        self.arcs().iter().any(|&(a, b)| a == side || b == side)
    }

    fn partner(self, side: Side) -> Option<Side> {
        self.arcs().iter().find_map(|&(a, b)| {
            if a == side {
                Some(b)
            } else if b == side {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, MosaicTile::XPlus | MosaicTile::XMinus)
    }
}

impl FromStr for MosaicTile {
    type Err = Error;

    fn from_str(s: &str) -> Result<MosaicTile> {
        MosaicTile::ALL
            .into_iter()
            .find(|t| t.mnemonic() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tile {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mosaic {
    pub n: usize,
    /// `tiles[row][col]`, row 0 at the top.
    pub tiles: Vec<Vec<MosaicTile>>,
}

// Mosaic position of a horizontal edge line point (col, line) and of a
// vertical one, boundary lines included.
fn h_pos(q: usize, col: usize, line: usize) -> (usize, usize) {
    (col + q - line, col + line)
}

fn v_pos(q: usize, line: usize, row: usize) -> (usize, usize) {
    (line + q - 1 - row, line + row)
}

fn tile_for(kind: EdgeKind, label: EdgeLabel) -> MosaicTile {
    if label.is_crossing() {
        return if over_even(kind, label) { MosaicTile::XPlus } else { MosaicTile::XMinus };
    }
    match mirror_pairing(kind, label, CONVENTION) {
        Pairing::P03_12 => MosaicTile::D1,
        _ => MosaicTile::D2,
    }
}

pub fn to_mosaic(code: &GridCode) -> Result<Mosaic> {
    code.ensure_classical()?;
    let (p, q) = (code.p(), code.q());
    let n = p + q;
    let mut tiles = vec![vec![MosaicTile::Blank; n]; n];
    for col in 0..p {
        for line in 0..=q {
            let (r, c) = h_pos(q, col, line);
            tiles[r][c] = if line == 0 {
                MosaicTile::A4
            } else if line == q {
                MosaicTile::A2
            } else {
                let e = horizontal_edge(p, q, col, line - 1);
                tile_for(code.edge_kind(e), code.label(e))
            };
        }
    }
    for line in 0..=p {
        for row in 0..q {
            let (r, c) = v_pos(q, line, row);
            tiles[r][c] = if line == 0 {
                MosaicTile::A1
            } else if line == p {
                MosaicTile::A3
            } else {
                let e = vertical_edge(p, q, line - 1, row);
                tile_for(code.edge_kind(e), code.label(e))
            };
        }
    }
    Ok(Mosaic { n, tiles })
}

/// Inverse of `to_mosaic` for mosaics it produces.
pub fn from_mosaic(m: &Mosaic) -> Result<GridCode> {
    let n = m.n;
    let bad = |why: &str| Error::Parse(format!("not a mirror-curve mosaic: {why}"));
    let first = m
        .tiles
        .first()
        .and_then(|row| row.iter().position(|&t| t != MosaicTile::Blank))
        .ok_or_else(|| bad("empty top row"))?;
    let q = first + 1;
    if q >= n {
        return Err(bad("no room for the grid"));
    }
    let p = n - q;
    let rebuilt_blank = to_mosaic(&GridCode::filled(p, q, EdgeLabel::Mir)?)?;
    let mut labels = vec![EdgeLabel::Mir; crate::grid::edge_count(p, q)];
    for r in 0..n {
        for c in 0..n {
            let want = rebuilt_blank.tiles[r][c];
            let got = m.tiles[r][c];
            let internal = matches!(want, MosaicTile::D1 | MosaicTile::D2);
            if !internal && want != got {
                return Err(bad(&format!("tile {} at row {r}, column {c}", got.mnemonic())));
            }
            if internal && !matches!(got, MosaicTile::D1 | MosaicTile::D2 | MosaicTile::XPlus | MosaicTile::XMinus) {
                return Err(bad(&format!("tile {} at row {r}, column {c}", got.mnemonic())));
            }
        }
    }
    for (e, slot) in labels.iter_mut().enumerate() {
        let kind = crate::grid::edge_kind(p, q, e);
        let (r, c) = match kind {
            EdgeKind::Horizontal { col, row } => h_pos(q, col, row + 1),
            EdgeKind::Vertical { col, row } => v_pos(q, col + 1, row),
        };
        *slot = match m.tiles[r][c] {
            MosaicTile::D1 => label_for_pairing(kind, Pairing::P03_12, CONVENTION),
            MosaicTile::D2 => label_for_pairing(kind, Pairing::P01_23, CONVENTION),
            t => {
                let plus = if over_even(kind, EdgeLabel::Pos) { EdgeLabel::Pos } else { EdgeLabel::Neg };
                if t == MosaicTile::XPlus {
                    plus
                } else {
                    plus.switched()
                }
            }
        };
    }
    GridCode::new(p, q, labels)
}

fn step(r: usize, c: usize, side: Side, n: usize) -> Option<(usize, usize, Side)> {
    match side {
        Side::Right if c + 1 < n => Some((r, c + 1, Side::Left)),
        Side::Left if c > 0 => Some((r, c - 1, Side::Right)),
        Side::Top if r > 0 => Some((r - 1, c, Side::Bottom)),
        Side::Bottom if r + 1 < n => Some((r + 1, c, Side::Top)),
        _ => None,
    }
}

impl Mosaic {
    /// Every connection point meets one on the neighbouring tile and none
    /// lies on the outer boundary.
    pub fn suitably_connected(&self) -> bool {
        let n = self.n;
        (0..n).all(|r| {
            (0..n).all(|c| {
                SIDES.iter().all(|&s| {
                    let here = self.tiles[r][c].connects(s);
                    match step(r, c, s, n) {
                        Some((r2, c2, s2)) => here == self.tiles[r2][c2].connects(s2),
                        None => !here,
                    }
                })
            })
        })
    }

    pub fn crossing_tiles(&self) -> usize {
        self.tiles.iter().flatten().filter(|t| t.is_crossing()).count()
    }

    /// Closed curves of a suitably connected mosaic.
    pub fn component_count(&self) -> Result<usize> {
        if !self.suitably_connected() {
            return Err(Error::Shape("mosaic is not suitably connected".into()));
        }
        let n = self.n;
        let index = |r: usize, c: usize, s: Side| ((r * n + c) * 4) + SIDES.iter().position(|&x| x == s).expect("side");
        let mut seen = vec![false; n * n * 4];
        let mut count = 0;
        for r in 0..n {
            for c in 0..n {
                for &s in &SIDES {
                    if seen[index(r, c, s)] || !self.tiles[r][c].connects(s) {
                        continue;
                    }
                    count += 1;
                    let (mut rr, mut cc, mut ss) = (r, c, s);
                    while !seen[index(rr, cc, ss)] {
                        seen[index(rr, cc, ss)] = true;
                        let out = self.tiles[rr][cc].partner(ss).expect("connected side");
                        seen[index(rr, cc, out)] = true;
                        let (r2, c2, s2) = step(rr, cc, out, n).expect("suitably connected");
                        (rr, cc, ss) = (r2, c2, s2);
                    }
                }
            }
        }
        Ok(count)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in &self.tiles {
            let line: Vec<&str> = row.iter().map(|t| t.mnemonic()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Mosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mosaic> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize =
            lines.next().and_then(|l| l.parse().ok()).ok_or_else(|| Error::Parse("missing mosaic size".into()))?;
        let tiles = lines
            .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<MosaicTile>>>())
            .collect::<Result<Vec<_>>>()?;
        if tiles.len() != n || tiles.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("mosaic is not {n} x {n}")));
        }
        Ok(Mosaic { n, tiles })
    }
}

/// `p + q`, the size of the mosaic built by `to_mosaic`.
pub fn mosaic_number_upper_bound(code: &GridCode) -> usize {
    code.p() + code.q()
}

/// Size of the grid diagram matching the mosaic bound.
pub fn grid_diagram_dimension(code: &GridCode) -> usize {
    mosaic_number_upper_bound(code) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;

    #[test]
    fn unknot_mosaic() {
        let m = to_mosaic(&GridCode::filled(1, 1, EdgeLabel::Mir).unwrap()).unwrap();
        assert_eq!(m.to_string(), "2\nA1 A2\nA4 A3\n");
        assert!(m.suitably_connected());
        assert_eq!(m.component_count().unwrap(), 1);
    }

    #[test]
    fn figure_eight() {
        let code = parse_matrix("{{-2,1,1},{1,1},{-2,-2}}").unwrap();
        let m = to_mosaic(&code).unwrap();
        assert_eq!(m.n, 5);
        assert_eq!(m.crossing_tiles(), 4);
        assert!(m.suitably_connected());
        assert_eq!(from_mosaic(&m).unwrap(), code);
        assert_eq!(m.to_string().parse::<Mosaic>().unwrap(), m);
    }
}
