//! Symmetries of the p x q rectangle acting on grid codes.

use crate::grid::{edge_kind, horizontal_edge, vertical_edge, EdgeKind, EdgeLabel, GridCode};

/// How a symmetry acts on crossing labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelAction {
    /// Labels move with their edges unchanged.
    Permute,
    /// As `Permute`, but reflections also switch every crossing.
    FlipOnReflection,
}

/// The action that yields the isometry class counts used throughout.
pub const LABEL_ACTION: LabelAction = LabelAction::Permute;

/// A symmetry: optional flips of x and y, then an optional transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub flip_x: bool,
    pub flip_y: bool,
    pub transpose: bool,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { flip_x: false, flip_y: false, transpose: false };

    pub fn is_reflection(&self) -> bool {
        (self.flip_x as u8 + self.flip_y as u8 + self.transpose as u8) % 2 == 1
    }

    // Doubled coordinates of a point of the p x q rectangle.
    fn map_point(&self, p: usize, q: usize, x: usize, y: usize) -> (usize, usize) {
        let x = if self.flip_x { 2 * p - x } else { x };
        let y = if self.flip_y { 2 * q - y } else { y };
        if self.transpose {
            (y, x)
        } else {
            (x, y)
        }
    }

    /// Image of edge `e` of RG[p,q].
    pub fn map_edge(&self, p: usize, q: usize, e: usize) -> usize {
        let (x, y) = match edge_kind(p, q, e) {
            EdgeKind::Horizontal { col, row } => (2 * col + 1, 2 * row + 2),
            EdgeKind::Vertical { col, row } => (2 * col + 2, 2 * row + 1),
        };
        let (p2, q2) = if self.transpose { (q, p) } else { (p, q) };
        let (x2, y2) = self.map_point(p, q, x, y);
        if x2 % 2 == 1 {
            horizontal_edge(p2, q2, (x2 - 1) / 2, (y2 - 2) / 2)
        } else {
            vertical_edge(p2, q2, (x2 - 2) / 2, (y2 - 1) / 2)
        }
    }

    pub fn apply_with(&self, code: &GridCode, action: LabelAction) -> GridCode {
        let (p, q) = (code.p(), code.q());
        let (p2, q2) = if self.transpose { (q, p) } else { (p, q) };
        let mut labels = vec![EdgeLabel::Mir; code.edge_count()];
        let flip = action == LabelAction::FlipOnReflection && self.is_reflection();
        for (e, &l) in code.labels().iter().enumerate() {
            labels[self.map_edge(p, q, e)] = if flip { l.switched() } else { l };
        }
        GridCode::new(p2, q2, labels).expect("isometries preserve the edge count")
    }

    pub fn apply(&self, code: &GridCode) -> GridCode {
        self.apply_with(code, LABEL_ACTION)
    }
}

/// Isometries of RG[p,q] onto itself: order 8 when square, 4 otherwise.
#[derive(Clone, Debug)]
pub struct IsometryGroup {
    pub p: usize,
    pub q: usize,
    pub elements: Vec<Isometry>,
}

impl IsometryGroup {
    pub fn new(p: usize, q: usize) -> IsometryGroup {
        let mut elements = Vec::new();
        for transpose in [false, true] {
            if transpose && p != q {
                continue;
            }
            for flip_x in [false, true] {
                for flip_y in [false, true] {
                    elements.push(Isometry { flip_x, flip_y, transpose });
                }
            }
        }
        IsometryGroup { p, q, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Distinct images of `code`, sorted.
    pub fn orbit_with(&self, code: &GridCode, action: LabelAction) -> Vec<GridCode> {
        let mut out: Vec<GridCode> = self.elements.iter().map(|g| g.apply_with(code, action)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn orbit(&self, code: &GridCode) -> Vec<GridCode> {
        self.orbit_with(code, LABEL_ACTION)
    }

    /// Edge permutation of each element.
    pub fn permutations(&self) -> Vec<Vec<usize>> {
        let v = crate::grid::edge_count(self.p, self.q);
        self.elements.iter().map(|g| (0..v).map(|e| g.map_edge(self.p, self.q, e)).collect()).collect()
    }

    /// Orbit count of all 4^v labelings by Burnside's lemma.
    pub fn burnside_count(&self, action: LabelAction) -> u128 {
        let perms = self.permutations();
        let mut total: u128 = 0;
        for (g, perm) in self.elements.iter().zip(&perms) {
            let flip = action == LabelAction::FlipOnReflection && g.is_reflection();
            let mut seen = vec![false; perm.len()];
            let mut fixed: u128 = 1;
            for s in 0..perm.len() {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut e = s;
                while !seen[e] {
                    seen[e] = true;
                    e = perm[e];
                    len += 1;
                }
                // A cycle is fixed by a constant label; switched crossings
                // alternate, so odd cycles admit only mirrors.
                fixed *= if flip && len % 2 == 1 { 2 } else { 4 };
            }
            total += fixed;
        }
        total / self.order() as u128
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;

    #[test]
    fn maps_are_permutations() {
        for (p, q) in [(2, 2), (3, 2), (4, 3), (3, 3), (1, 4)] {
            let g = IsometryGroup::new(p, q);
            for perm in g.permutations() {
                let mut s = perm.clone();
                s.sort();
                assert_eq!(s, (0..perm.len()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn group_is_closed() {
        let g = IsometryGroup::new(3, 3);
        let c = parse_matrix("{{1,2,-1},{-2,1,1},{2,2,-1},{1,-1,-2}}").unwrap();
        let orbit = g.orbit(&c);
        for x in &orbit {
            for h in &g.elements {
                assert!(orbit.contains(&h.apply(x)));
            }
        }
    }

    #[test]
    fn burnside_on_small_grid() {
        let g = IsometryGroup::new(2, 2);
        assert_eq!(g.burnside_count(LabelAction::Permute), 55);
        assert_ne!(g.burnside_count(LabelAction::FlipOnReflection), 55);
    }
}
