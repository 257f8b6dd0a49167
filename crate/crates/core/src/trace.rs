//! Ray tracing of a labeled grid.
//!
//! Every cell carries four steps, the diagonals joining midpoints of
//! adjacent sides. Step `k` runs S-E, E-N, N-W, W-S for `k = 0..4`; its end 0
//! is the first named side. At the midpoint of an internal edge four step
//! ends meet; they are numbered counterclockwise by direction as ports
//! 0 = NE, 1 = NW, 2 = SW, 3 = SE. A crossing joins opposite ports, a mirror
//! joins adjacent ones.

use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::Result;
use crate::grid::{EdgeKind, EdgeLabel, GridCode};

/// Which of the two mirrors lies along its edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MirrorConvention {
    /// Label 2 lies along the edge, -2 across it.
    TwoCollinear,
    /// Label 2 lies across the edge, -2 along it.
    TwoPerpendicular,
}

/// The convention fixed by the component counts of the reference codes.
pub const CONVENTION: MirrorConvention = MirrorConvention::TwoCollinear;

/// How the four ports at an edge midpoint are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// {0,1} and {2,3}.
    P01_23,
    /// {0,3} and {1,2}.
    P03_12,
    /// {0,2} and {1,3}: the crossing itself.
    Through,
}

impl Pairing {
    pub fn partner(self, port: usize) -> usize {
        match self {
            Pairing::P01_23 => port ^ 1,
            Pairing::P03_12 => 3 - port,
            Pairing::Through => (port + 2) % 4,
        }
    }

    /// Whether `a` and `b` are joined.
    pub fn joins(self, a: usize, b: usize) -> bool {
        self.partner(a % 4) == b % 4
    }

    /// The smoothing that does not join ports `a` and `a + 1`.
    pub fn avoiding(a: usize) -> Pairing {
        let other = Pairing::P01_23;
        if other.joins(a, a + 1) {
            Pairing::P03_12
        } else {
            other
        }
    }

    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Pairing::P01_23 => [(0, 1), (2, 3)],
            Pairing::P03_12 => [(0, 3), (1, 2)],
            Pairing::Through => [(0, 2), (1, 3)],
        }
    }

    pub fn other_smoothing(self) -> Pairing {
        match self {
            Pairing::P01_23 => Pairing::P03_12,
            Pairing::P03_12 => Pairing::P01_23,
            Pairing::Through => Pairing::Through,
        }
    }
}

fn is_vertical(kind: EdgeKind) -> bool {
    matches!(kind, EdgeKind::Vertical { .. })
}

/// Port pairing realized by a mirror label on an edge of the given kind.
pub fn mirror_pairing(kind: EdgeKind, label: EdgeLabel, conv: MirrorConvention) -> Pairing {
    let along = match (label, conv) {
        (EdgeLabel::Mir, MirrorConvention::TwoCollinear) => true,
        (EdgeLabel::Perp, MirrorConvention::TwoPerpendicular) => true,
        (EdgeLabel::Mir, _) | (EdgeLabel::Perp, _) => false,
        _ => return Pairing::Through,
    };
    // A vertical wall keeps the ray on its own side: NE with SE, NW with SW.
    if along == is_vertical(kind) {
        Pairing::P03_12
    } else {
        Pairing::P01_23
    }
}

/// Mirror label that realizes `pairing` on an edge of the given kind.
pub fn label_for_pairing(kind: EdgeKind, pairing: Pairing, conv: MirrorConvention) -> EdgeLabel {
    if mirror_pairing(kind, EdgeLabel::Mir, conv) == pairing {
        EdgeLabel::Mir
    } else {
        EdgeLabel::Perp
    }
}

/// Whether the strand through ports 0 and 2 is the over strand.
///
/// A horizontal `1` and a vertical `-1` put the NE-SW strand on top.
pub fn over_even(kind: EdgeKind, label: EdgeLabel) -> bool {
    (label == EdgeLabel::Pos) != is_vertical(kind)
}

/// Smoothing carrying weight `a` in the bracket.
pub fn a_smoothing(kind: EdgeKind, label: EdgeLabel) -> Pairing {
    if over_even(kind, label) {
        Pairing::P03_12
    } else {
        Pairing::P01_23
    }
}

/// Mirror label giving the `a`-weighted smoothing of a crossing.
pub fn a_label(label: EdgeLabel) -> EdgeLabel {
    match label {
        EdgeLabel::Pos => EdgeLabel::Perp,
        _ => EdgeLabel::Mir,
    }
}

// A step end is encoded as ((cell * 4 + step) * 2 + end).
#[derive(Clone, Copy, Debug)]
enum Place {
    Boundary(usize),
    Edge(usize, usize),
}

/// Static wiring of RG[p,q] independent of labels.
pub(crate) struct Wiring {
    p: usize,
    q: usize,
    place: Vec<Place>,
    port_end: Vec<[usize; 4]>,
    kinds: Vec<EdgeKind>,
}

fn end_id(p: usize, col: usize, row: usize, step: usize, end: usize) -> usize {
    (((row * p + col) * 4) + step) * 2 + end
}

impl Wiring {
    pub(crate) fn new(p: usize, q: usize) -> Wiring {
        let v = crate::grid::edge_count(p, q);
        let mut place = vec![Place::Boundary(0); p * q * 8];
        let mut port_end = vec![[0usize; 4]; v];
        let kinds: Vec<EdgeKind> = (0..v).map(|e| crate::grid::edge_kind(p, q, e)).collect();
        let pair = |a: usize, b: usize, place: &mut Vec<Place>| {
            place[a] = Place::Boundary(b);
            place[b] = Place::Boundary(a);
        };
        for row in 0..q {
            for col in 0..p {
                let id = |s, e| end_id(p, col, row, s, e);
                if row == 0 {
                    pair(id(0, 0), id(3, 1), &mut place);
                }
                if row == q - 1 {
                    pair(id(1, 1), id(2, 0), &mut place);
                }
                if col == 0 {
                    pair(id(2, 1), id(3, 0), &mut place);
                }
                if col == p - 1 {
                    pair(id(0, 1), id(1, 0), &mut place);
                }
            }
        }
        for (e, kind) in kinds.iter().enumerate() {
            let ends = match *kind {
                EdgeKind::Vertical { col, row } => [
                    end_id(p, col + 1, row, 2, 1),
                    end_id(p, col, row, 1, 0),
                    end_id(p, col, row, 0, 1),
                    end_id(p, col + 1, row, 3, 0),
                ],
                EdgeKind::Horizontal { col, row } => [
                    end_id(p, col, row + 1, 0, 0),
                    end_id(p, col, row + 1, 3, 1),
                    end_id(p, col, row, 2, 0),
                    end_id(p, col, row, 1, 1),
                ],
            };
            for (port, &se) in ends.iter().enumerate() {
                place[se] = Place::Edge(e, port);
            }
            port_end[e] = ends;
        }
        Wiring { p, q, place, port_end, kinds }
    }

    pub(crate) fn step_count(&self) -> usize {
        self.p * self.q * 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TracedCrossing {
    /// Internal edge carrying the crossing.
    pub edge: usize,
    /// The code label, +1 or -1.
    pub sign: i32,
    /// Oriented sign under the traced orientation.
    pub oriented_sign: i32,
    /// For each port, the (crossing, port) it is joined to.
    pub ports: [(usize, usize); 4],
}

/// What tracing a grid code recovers.
#[derive(Clone, Debug)]
pub struct TracedDiagram {
    pub p: usize,
    pub q: usize,
    pub components: usize,
    pub crossings: Vec<TracedCrossing>,
    /// Components without crossings.
    pub circles: usize,
    /// Oriented writhe, orientation taken from the tracing order.
    pub writhe: i32,
    /// Writhe restricted to self-crossings of components.
    pub self_writhe: i32,
    /// Steps traversed by each component, in tracing order.
    pub component_steps: Vec<usize>,
    /// Crossing passages of each component, in tracing order.
    pub component_crossings: Vec<usize>,
    /// Each component as the sequence of steps it visits.
    pub paths: Vec<Vec<StepVisit>>,
    pub diagram: Diagram,
}

/// One step of a traced path: the cell, the diagonal, and the direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepVisit {
    pub col: usize,
    pub row: usize,
    pub step: usize,
    /// True when traversed from end 0 to end 1.
    pub forward: bool,
}

struct Tracer<'a> {
    wiring: &'a Wiring,
    pairing: Vec<Pairing>,
}

impl<'a> Tracer<'a> {
    fn new(wiring: &'a Wiring, code: &GridCode, conv: MirrorConvention) -> Tracer<'a> {
        let pairing = code.labels().iter().zip(&wiring.kinds).map(|(&l, &k)| mirror_pairing(k, l, conv)).collect();
        Tracer { wiring, pairing }
    }

    // From the step end `arrive`, where the ray now sits, find the next step
    // end to leave from; crossings are passed straight through.
    fn continue_from(&self, arrive: usize) -> (usize, Option<(usize, usize)>) {
        match self.wiring.place[arrive] {
            Place::Boundary(mate) => (mate, None),
            Place::Edge(e, port) => {
                let pr = self.pairing[e];
                let out = pr.partner(port);
                let hit = if pr == Pairing::Through { Some((e, port)) } else { None };
                (self.wiring.port_end[e][out], hit)
            }
        }
    }

    fn count_components(&self) -> usize {
        let n = self.wiring.step_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut leave = start * 2;
            loop {
                let step = leave / 2;
                if seen[step] {
                    break;
                }
                seen[step] = true;
                let (next, _) = self.continue_from(leave ^ 1);
                leave = next;
            }
        }
        count
    }
}

/// Number of closed curves, without building the full diagram.
pub fn count_components(code: &GridCode) -> usize {
    let wiring = Wiring::new(code.p(), code.q());
    count_components_with(&wiring, code, CONVENTION)
}

pub(crate) fn count_components_with(wiring: &Wiring, code: &GridCode, conv: MirrorConvention) -> usize {
    Tracer::new(wiring, code, conv).count_components()
}

/// Trace with the fixed mirror convention.
pub fn trace(code: &GridCode) -> Result<TracedDiagram> {
    trace_with(code, CONVENTION)
}

/// Trace under an explicit mirror convention.
pub fn trace_with(code: &GridCode, conv: MirrorConvention) -> Result<TracedDiagram> {
    code.ensure_classical()?;
    let wiring = Wiring::new(code.p(), code.q());
    let tracer = Tracer::new(&wiring, code, conv);
    let p = code.p();

    let crossing_edges = code.crossing_edges();
    let mut index_of = vec![usize::MAX; code.edge_count()];
    for (i, &e) in crossing_edges.iter().enumerate() {
        index_of[e] = i;
    }

    let n_steps = wiring.step_count();
    let mut seen = vec![false; n_steps];
    let mut paths = Vec::new();
    let mut component_steps = Vec::new();
    let mut component_crossings = Vec::new();
    let mut circles = 0;
    for start in 0..n_steps {
        if seen[start] {
            continue;
        }
        let mut path = Vec::new();
        let mut hits = 0;
        let mut leave = start * 2;
        loop {
            let step = leave / 2;
            if seen[step] {
                break;
            }
            seen[step] = true;
            let cell = step / 4;
            path.push(StepVisit { col: cell % p, row: cell / p, step: step % 4, forward: leave % 2 == 0 });
            let (next, hit) = tracer.continue_from(leave ^ 1);
            if hit.is_some() {
                hits += 1;
            }
            leave = next;
        }
        if hits == 0 {
            circles += 1;
        }
        component_steps.push(path.len());
        component_crossings.push(hits);
        paths.push(path);
    }

    // Join crossing ports along the strands between crossings.
    let n = crossing_edges.len();
    let mut links = vec![0usize; 4 * n];
    for (c, &e) in crossing_edges.iter().enumerate() {
        for port in 0..4 {
            let mut leave = wiring.port_end[e][port];
            let target = loop {
                let arrive = leave ^ 1;
                if let Place::Edge(e2, port2) = wiring.place[arrive] {
                    if tracer.pairing[e2] == Pairing::Through {
                        break index_of[e2] * 4 + port2;
                    }
                }
                leave = tracer.continue_from(arrive).0;
            };
            links[c * 4 + port] = target;
        }
    }
    let over: Vec<bool> = crossing_edges.iter().map(|&e| over_even(wiring.kinds[e], code.label(e))).collect();
    let diagram = Diagram::from_parts(links, over, circles);
    let eps = diagram.oriented_signs();
    let crossings = crossing_edges
        .iter()
        .enumerate()
        .map(|(c, &e)| {
            let mut ports = [(0, 0); 4];
            for (k, slot) in ports.iter_mut().enumerate() {
                let t = diagram.target(c * 4 + k);
                *slot = (t / 4, t % 4);
            }
            TracedCrossing { edge: e, sign: code.label(e).sign(), oriented_sign: eps[c], ports }
        })
        .collect();

    Ok(TracedDiagram {
        p,
        q: code.q(),
        components: paths.len(),
        crossings,
        circles,
        writhe: eps.iter().sum(),
        self_writhe: diagram.self_writhe(),
        component_steps,
        component_crossings,
        paths,
        diagram,
    })
}

/// Oriented writhe; on the reference codes this equals the sum of the crossing labels.
pub fn writhe(d: &TracedDiagram) -> i32 {
    d.writhe
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;

    fn comps(text: &str, conv: MirrorConvention) -> usize {
        trace_with(&parse_matrix(text).unwrap(), conv).unwrap().components
    }

    #[test]
    fn pairing_partners() {
        for pr in [Pairing::P01_23, Pairing::P03_12, Pairing::Through] {
            for k in 0..4 {
                assert_eq!(pr.partner(pr.partner(k)), k);
                assert_ne!(pr.partner(k), k);
            }
        }
        assert!(!Pairing::avoiding(3).joins(3, 0));
        assert!(!Pairing::avoiding(0).joins(0, 1));
    }

    #[test]
    fn convention_fits_reference_codes() {
        let conv = CONVENTION;
        assert_eq!(comps("RG[2,2]{{-2,1},{1,1}}", conv), 1);
        assert_eq!(comps("RG[2,2]{{-2,-2},{1,1}}", conv), 2);
        assert_eq!(comps("RG[2,2]{{2,2},{2,-2}}", conv), 3);
        let other = MirrorConvention::TwoPerpendicular;
        let fits_other = comps("RG[2,2]{{-2,1},{1,1}}", other) == 1
            && comps("RG[2,2]{{-2,-2},{1,1}}", other) == 2
            && comps("RG[2,2]{{2,2},{2,-2}}", other) == 3;
        assert!(!fits_other);
    }

    #[test]
    fn every_step_once() {
        let code = parse_matrix("{{-2,-1,-1,2},{1,2,-1,1},{2,1,-1},{1,-2,-1},{1,-2,-1}}").unwrap();
        let d = trace(&code).unwrap();
        assert_eq!(d.component_steps.iter().sum::<usize>(), 4 * 12);
        assert_eq!(d.crossings.len(), code.crossing_count());
        assert_eq!(d.component_crossings.iter().sum::<usize>(), 2 * d.crossings.len());
    }

    #[test]
    fn single_cell() {
        let d = trace(&GridCode::new(1, 1, vec![]).unwrap()).unwrap();
        assert_eq!((d.components, d.circles, d.crossings.len()), (1, 1, 0));
    }

    #[test]
    fn count_matches_full_trace() {
        for text in ["{{1,1},{1,1}}", "{{2,-2},{1,-1}}", "{{-2,1,1},{1,1},{-2,-2}}"] {
            let code = parse_matrix(text).unwrap();
            assert_eq!(count_components(&code), trace(&code).unwrap().components);
        }
    }

    #[test]
    fn virtual_rejected() {
        let code = parse_matrix("{{0,1},{1,1}}").unwrap();
        assert!(trace(&code).is_err());
    }
}
