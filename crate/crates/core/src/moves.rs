//! Reidemeister moves, mirror-moves and grid shrinking on codes.
//!
//! Every move is checked on the traced diagram. R1 and R2 replace crossings
//! by the smoothings that undo a curl or pull a bigon apart, so they always
//! have a label-level realization. R3, mirror-moves and the all-over move
//! are found by searching for label changes whose traced diagram is the
//! expected one.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codes::{parse_matrix, serialize_bare};
use crate::diagram::{Diagram, DiagramKey, Triangle};
use crate::error::{Error, Result};
use crate::grid::{cells_of_edge, edge_count, edges_of_cell, EdgeLabel, GridCode};
use crate::invariants::{normalized_polynomial, unlink_polynomial, MAX_BRACKET_CROSSINGS};
use crate::trace::{self, label_for_pairing, Pairing, CONVENTION};

/// Smaller grids are searched exhaustively by the all-over move up to this
/// many edges.
pub const ALL_OVER_SEARCH_EDGES: usize = 8;

/// Label changes tried around an R3 site.
pub const R3_SEARCH_CHANGES: usize = 3;

/// Label changes tried by a reducing mirror-move.
pub const MIRROR_MOVE_CHANGES: usize = 3;

/// Depth of the R3 search used when no R1 or R2 move is available.
pub const R3_LOOKAHEAD: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    MirrorMove,
    AllOver,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1 => "R1",
            MoveKind::R2 => "R2",
            MoveKind::R3 => "R3",
            MoveKind::MirrorMove => "MIRROR_MOVE",
            MoveKind::AllOver => "ALL_OVER",
        }
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<MoveKind> {
        Ok(match s {
            "R1" => MoveKind::R1,
            "R2" => MoveKind::R2,
            "R3" => MoveKind::R3,
            "MIRROR_MOVE" => MoveKind::MirrorMove,
            "ALL_OVER" => MoveKind::AllOver,
            _ => return Err(Error::Parse(format!("unknown move kind {s:?}"))),
        })
    }
}

/// One rewrite. For `AllOver` the site is empty and `labels` is the whole
/// code of the smaller grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub site: Vec<usize>,
    pub labels: Vec<EdgeLabel>,
    /// Grid after the move.
    pub p: usize,
    pub q: usize,
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Move {
    pub fn apply(&self, code: &GridCode) -> Result<GridCode> {
        if self.kind == MoveKind::AllOver {
            return GridCode::new(self.p, self.q, self.labels.clone());
        }
        if (code.p(), code.q()) != (self.p, self.q) {
            return Err(Error::DimensionMismatch(code.p(), code.q(), self.p, self.q));
        }
        if self.site.len() != self.labels.len() || self.site.iter().any(|&e| e >= code.edge_count()) {
            return Err(Error::Range(format!("move site {:?} does not fit RG[{},{}]", self.site, self.p, self.q)));
        }
        let mut out = code.clone();
        for (&e, &l) in self.site.iter().zip(&self.labels) {
            out.set_label(e, l);
        }
        Ok(out)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == MoveKind::AllOver {
            let code = GridCode::new(self.p, self.q, self.labels.clone()).map_err(|_| fmt::Error)?;
            write!(f, "{} @ RG[{},{}] -> {}", self.kind.name(), self.p, self.q, serialize_bare(&code))
        } else {
            write!(f, "{} @ {} -> {}", self.kind.name(), join(&self.site), join(&self.labels))
        }
    }
}

impl Move {
    /// Parse one log line; `p`, `q` give the grid the move starts from.
    pub fn parse(line: &str, p: usize, q: usize) -> Result<Move> {
        let bad = || Error::Parse(format!("bad move line {line:?}"));
        let (kind, rest) = line.split_once(" @ ").ok_or_else(bad)?;
        let (site, labels) = rest.split_once(" -> ").ok_or_else(bad)?;
        let kind: MoveKind = kind.trim().parse()?;
        if kind == MoveKind::AllOver {
            let code = parse_matrix(&format!("{}{}", site.trim(), labels.trim()))?;
            return Ok(Move { kind, site: vec![], p: code.p(), q: code.q(), labels: code.into_labels() });
        }
        let site = site.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        let labels = labels
            .split(',')
            .map(|s| s.trim().parse::<i64>().ok().and_then(EdgeLabel::from_value).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        Ok(Move { kind, site, labels, p, q })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionLog {
    pub initial: GridCode,
    pub steps: Vec<Move>,
    #[serde(rename = "final")]
    pub final_code: GridCode,
    /// The step budget ran out while moves were still available.
    pub budget_exceeded: bool,
}

impl ReductionLog {
    /// Apply the steps to `initial` again.
    pub fn replay(&self) -> Result<GridCode> {
        replay(&self.initial, &self.steps)
    }

    /// Intermediate codes, starting with `initial`.
    pub fn codes(&self) -> Result<Vec<GridCode>> {
        let mut out = vec![self.initial.clone()];
        for m in &self.steps {
            let next = m.apply(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// Parse the line format written by `Display`.
    pub fn parse_steps(initial: &GridCode, text: &str) -> Result<Vec<Move>> {
        let (mut p, mut q) = (initial.p(), initial.q());
        let mut out = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let m = Move::parse(line, p, q)?;
            (p, q) = (m.p, m.q);
            out.push(m);
        }
        Ok(out)
    }
}

pub fn replay(initial: &GridCode, steps: &[Move]) -> Result<GridCode> {
    steps.iter().try_fold(initial.clone(), |c, m| m.apply(&c))
}

impl fmt::Display for ReductionLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.steps {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

fn traced(code: &GridCode) -> Result<(Diagram, Vec<usize>)> {
    let d = trace::trace(code)?.diagram;
    Ok((d, code.crossing_edges()))
}

fn crossing_at(edges: &[usize], edge: usize) -> Option<usize> {
    edges.binary_search(&edge).ok()
}

fn smoothing_label(code: &GridCode, edge: usize, pairing: Pairing) -> EdgeLabel {
    label_for_pairing(code.edge_kind(edge), pairing, CONVENTION)
}

fn local_move(code: &GridCode, kind: MoveKind, site: Vec<usize>, labels: Vec<EdgeLabel>) -> Move {
    Move { kind, site, labels, p: code.p(), q: code.q() }
}

/// The R1 move undoing the curl at `edge`.
pub fn r1_move(code: &GridCode, edge: usize) -> Result<Move> {
    let (d, edges) = traced(code)?;
    let c = crossing_at(&edges, edge).ok_or(Error::NotACurl(edge))?;
    let &(_, k) = d.monogons().iter().find(|m| m.0 == c).ok_or(Error::NotACurl(edge))?;
    let label = smoothing_label(code, edge, Pairing::avoiding(k));
    Ok(local_move(code, MoveKind::R1, vec![edge], vec![label]))
}

pub fn apply_r1(code: &GridCode, edge: usize) -> Result<GridCode> {
    r1_move(code, edge)?.apply(code)
}

/// The R2 move removing the bigon between the crossings at `e1` and `e2`.
pub fn r2_move(code: &GridCode, e1: usize, e2: usize) -> Result<Move> {
    let (d, edges) = traced(code)?;
    let (Some(c1), Some(c2)) = (crossing_at(&edges, e1), crossing_at(&edges, e2)) else {
        return Err(Error::NotABigon(e1, e2));
    };
    let bigons: Vec<_> = d
        .bigons()
        .into_iter()
        .filter(|b| {
            let pair = (b.first.0, b.second.0);
            pair == (c1, c2) || pair == (c2, c1)
        })
        .collect();
    if bigons.is_empty() {
        return Err(Error::NotABigon(e1, e2));
    }
    let b = bigons.iter().find(|b| b.reducible).ok_or(Error::SignMismatch(e1, e2))?;
    let mut pairs: Vec<(usize, EdgeLabel)> =
        Diagram::bigon_smoothings(b).iter().map(|&(c, pr)| (edges[c], smoothing_label(code, edges[c], pr))).collect();
    pairs.sort();
    Ok(local_move(code, MoveKind::R2, pairs.iter().map(|x| x.0).collect(), pairs.iter().map(|x| x.1).collect()))
}

pub fn apply_r2(code: &GridCode, e1: usize, e2: usize) -> Result<GridCode> {
    r2_move(code, e1, e2)?.apply(code)
}

// Edges of the cells touching `focus`.
fn neighbourhood(code: &GridCode, focus: &[usize]) -> Vec<usize> {
    let (p, q) = (code.p(), code.q());
    let mut out: Vec<usize> =
        focus.iter().flat_map(|&e| cells_of_edge(p, q, e)).flat_map(|(c, r)| edges_of_cell(p, q, c, r)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn other_labels(l: EdgeLabel) -> impl Iterator<Item = EdgeLabel> {
    [EdgeLabel::Pos, EdgeLabel::Neg, EdgeLabel::Mir, EdgeLabel::Perp].into_iter().filter(move |&x| x != l)
}

/// Search label changes of at most `max_changes` edges among `edges` that
/// keep the crossing count and give a diagram with one of the `targets` keys.
fn search_changes(
    code: &GridCode,
    edges: &[usize],
    max_changes: usize,
    targets: &[DiagramKey],
) -> Option<(Vec<usize>, Vec<EdgeLabel>)> {
    let n = code.crossing_count() as i64;
    let mut chosen: Vec<usize> = Vec::new();
    for size in 1..=max_changes.min(edges.len()) {
        if let Some(hit) = search_subsets(code, edges, size, 0, &mut chosen, n, targets) {
            return Some(hit);
        }
    }
    None
}

fn search_subsets(
    code: &GridCode,
    edges: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    n: i64,
    targets: &[DiagramKey],
) -> Option<(Vec<usize>, Vec<EdgeLabel>)> {
    if chosen.len() == size {
        return search_labels(code, chosen, n, targets);
    }
    for i in from..edges.len() {
        chosen.push(edges[i]);
        let hit = search_subsets(code, edges, size, i + 1, chosen, n, targets);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

fn search_labels(
    code: &GridCode,
    site: &[usize],
    n: i64,
    targets: &[DiagramKey],
) -> Option<(Vec<usize>, Vec<EdgeLabel>)> {
    let options: Vec<Vec<EdgeLabel>> = site.iter().map(|&e| other_labels(code.label(e)).collect()).collect();
    let total: usize = options.iter().map(Vec::len).product();
    for index in 0..total {
        let mut rest = index;
        let mut cand = code.clone();
        for (&e, opts) in site.iter().zip(&options) {
            cand.set_label(e, opts[rest % opts.len()]);
            rest /= opts.len();
        }
        if cand.crossing_count() as i64 != n {
            continue;
        }
        let key = trace::trace(&cand).expect("classical").diagram.key();
        if targets.contains(&key) {
            return Some((site.to_vec(), site.iter().map(|&e| cand.label(e)).collect()));
        }
    }
    None
}

/// An R3 move at the triangle formed by the crossings at `site`, realized by
/// at most `R3_SEARCH_CHANGES` label changes near the site.
pub fn r3_move(code: &GridCode, site: [usize; 3]) -> Result<Move> {
    let (d, edges) = traced(code)?;
    let describe = || format!("edges {site:?}");
    let cs: Vec<usize> = site
        .iter()
        .map(|&e| crossing_at(&edges, e))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NotATriangle(describe()))?;
    let mut want = cs.clone();
    want.sort_unstable();
    let targets: Vec<DiagramKey> = d
        .triangles()
        .into_iter()
        .filter(|t| {
            let mut got: Vec<usize> = t.darts.iter().map(|x| x.0).collect();
            got.sort_unstable();
            got == want && d.r3_valid(t)
        })
        .map(|t| d.r3(&t).key())
        .collect();
    if targets.is_empty() {
        return Err(Error::NotATriangle(describe()));
    }
    let area = neighbourhood(code, &site);
    let (s, l) = search_changes(code, &area, R3_SEARCH_CHANGES, &targets)
        .ok_or_else(|| Error::PatternNotFound(format!("no grid realization of R3 at {site:?}")))?;
    Ok(local_move(code, MoveKind::R3, s, l))
}

pub fn apply_r3(code: &GridCode, site: [usize; 3]) -> Result<GridCode> {
    r3_move(code, site)?.apply(code)
}

/// Check that rewriting `site` with `labels` redraws the same diagram.
pub fn mirror_move(code: &GridCode, site: &[usize], labels: &[EdgeLabel]) -> Result<Move> {
    let m = local_move(code, MoveKind::MirrorMove, site.to_vec(), labels.to_vec());
    let after = m.apply(code)?;
    after.ensure_classical()?;
    if after.crossing_count() != code.crossing_count() || traced(&after)?.0.key() != traced(code)?.0.key() {
        return Err(Error::PatternNotFound(format!("rewriting {site:?} is not a mirror-move")));
    }
    Ok(m)
}

pub fn apply_mirror_move(code: &GridCode, site: &[usize], labels: &[EdgeLabel]) -> Result<GridCode> {
    mirror_move(code, site, labels)?.apply(code)
}

/// Mirror-moves on pairs of adjacent cells changing at most `max_changes`
/// labels, in scan order.
pub fn find_mirror_moves(code: &GridCode, max_changes: usize) -> Result<Vec<Move>> {
    code.ensure_classical()?;
    let (p, q) = (code.p(), code.q());
    let key = traced(code)?.0.key();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for e in 0..code.edge_count() {
        let area = neighbourhood(code, &[e]);
        let mut chosen = Vec::new();
        for size in 1..=max_changes.min(area.len()) {
            collect_same(code, &area, size, 0, &mut chosen, &key, &mut |s, l| {
                if seen.insert((s.to_vec(), l.to_vec())) {
                    out.push(Move { kind: MoveKind::MirrorMove, site: s.to_vec(), labels: l.to_vec(), p, q });
                }
            });
        }
    }
    Ok(out)
}

fn collect_same(
    code: &GridCode,
    edges: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    key: &DiagramKey,
    emit: &mut dyn FnMut(&[usize], &[EdgeLabel]),
) {
    if chosen.len() == size {
        let options: Vec<Vec<EdgeLabel>> = chosen.iter().map(|&e| other_labels(code.label(e)).collect()).collect();
        let total: usize = options.iter().map(Vec::len).product();
        for index in 0..total {
            let mut rest = index;
            let mut cand = code.clone();
            for (&e, opts) in chosen.iter().zip(&options) {
                cand.set_label(e, opts[rest % opts.len()]);
                rest /= opts.len();
            }
            if cand.crossing_count() == code.crossing_count()
                && trace::trace(&cand).expect("classical").diagram.key() == *key
            {
                let labels: Vec<EdgeLabel> = chosen.iter().map(|&e| cand.label(e)).collect();
                emit(chosen, &labels);
            }
        }
        return;
    }
    for i in from..edges.len() {
        chosen.push(edges[i]);
        collect_same(code, edges, size, i + 1, chosen, key, emit);
        chosen.pop();
    }
}

/// Shrink the grid by one column or row, keeping the traced diagram.
///
/// Boundary columns and rows are dropped first; smaller grids of at most
/// `ALL_OVER_SEARCH_EDGES` edges are then searched exhaustively.
pub fn all_over_move(code: &GridCode) -> Result<Move> {
    code.ensure_classical()?;
    let (p, q) = (code.p(), code.q());
    let key = traced(code)?.0.key();
    let circles = trace::count_components(code);
    let n = code.crossing_count();
    let found =
        |c: GridCode| Move { kind: MoveKind::AllOver, site: vec![], p: c.p(), q: c.q(), labels: c.into_labels() };
    let mut windows = Vec::new();
    if p > 1 {
        windows.push((1..p, 0..q));
        windows.push((0..p - 1, 0..q));
    }
    if q > 1 {
        windows.push((0..p, 1..q));
        windows.push((0..p, 0..q - 1));
    }
    for (cols, rows) in windows {
        let cand = code.window(cols, rows)?;
        if cand.crossing_count() == n && traced(&cand)?.0.key() == key {
            return Ok(found(cand));
        }
    }
    let mut shapes = Vec::new();
    if p > 1 {
        shapes.push((p - 1, q));
    }
    if q > 1 {
        shapes.push((p, q - 1));
    }
    for (p2, q2) in shapes {
        let v = edge_count(p2, q2);
        if v > ALL_OVER_SEARCH_EDGES {
            continue;
        }
        for index in 0..1usize << (2 * v) {
            let labels: Vec<EdgeLabel> = (0..v).map(|e| EdgeLabel::ALL[(index >> (2 * (v - 1 - e))) & 3]).collect();
            if labels.iter().filter(|l| l.is_crossing()).count() != n {
                continue;
            }
            let cand = GridCode::new(p2, q2, labels)?;
            if trace::count_components(&cand) == circles && traced(&cand)?.0.key() == key {
                return Ok(found(cand));
            }
        }
    }
    Err(Error::PatternNotFound(format!("no all-over move shrinks RG[{p},{q}]")))
}

pub fn apply_all_over(code: &GridCode) -> Result<GridCode> {
    all_over_move(code)?.apply(code)
}

fn has_reduction(d: &Diagram) -> bool {
    !d.monogons().is_empty() || d.bigons().iter().any(|b| b.reducible)
}

/// The next move of the reduction strategy, if any.
pub fn next_move(code: &GridCode) -> Result<Option<Move>> {
    let (d, edges) = traced(code)?;
    if let Some(&(c, _)) = d.monogons().first() {
        return r1_move(code, edges[c]).map(Some);
    }
    if let Some(b) = d.bigons().into_iter().find(|b| b.reducible) {
        return r2_move(code, edges[b.first.0], edges[b.second.0]).map(Some);
    }
    for t in r3_plan(&d, R3_LOOKAHEAD) {
        let site = t.darts.map(|(c, _)| edges[c]);
        match r3_move(code, site) {
            Ok(m) => return Ok(Some(m)),
            Err(Error::PatternNotFound(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if let Some(m) = reducing_mirror_move(code, &d)? {
        return Ok(Some(m));
    }
    match all_over_move(code) {
        Ok(m) => Ok(Some(m)),
        Err(Error::PatternNotFound(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

// Diagrams with fewer crossings reachable by up to `depth` R3 moves followed
// by R1 and R2 moves.
fn reachable_smaller(d: &Diagram, depth: usize) -> Vec<DiagramKey> {
    let n = d.crossing_count();
    let mut out = HashSet::new();
    let mut seen = HashSet::from([d.key()]);
    let mut queue = VecDeque::from([(d.clone(), 0)]);
    while let Some((cur, k)) = queue.pop_front() {
        let mut r = cur.clone();
        while let Some(next) = reduce_once(&r) {
            out.insert(next.key());
            r = next;
        }
        if k == depth {
            continue;
        }
        for t in cur.triangles() {
            if cur.r3_valid(&t) {
                let next = cur.r3(&t);
                if seen.insert(next.key()) {
                    queue.push_back((next, k + 1));
                }
            }
        }
    }
    let mut keys: Vec<DiagramKey> = out.into_iter().filter(|k| k.crossing_count() < n).collect();
    keys.sort();
    keys
}

fn reduce_once(d: &Diagram) -> Option<Diagram> {
    if let Some(&(c, k)) = d.monogons().first() {
        return Some(d.remove_curl(c, k).0);
    }
    d.bigons().into_iter().find(|b| b.reducible).map(|b| d.remove_bigon(&b))
}

/// A relabeling of at most `MIRROR_MOVE_CHANGES` edges that lowers the
/// crossing count and redraws a diagram reachable by Reidemeister moves.
fn reducing_mirror_move(code: &GridCode, d: &Diagram) -> Result<Option<Move>> {
    if d.crossing_count() == 0 {
        return Ok(None);
    }
    let targets = reachable_smaller(d, R3_LOOKAHEAD);
    if targets.is_empty() {
        return Ok(None);
    }
    let edges: Vec<usize> = (0..code.edge_count()).collect();
    let n = code.crossing_count();
    for size in 1..=MIRROR_MOVE_CHANGES.min(edges.len()) {
        let mut hit = None;
        let mut chosen = Vec::new();
        each_subset(&edges, size, 0, &mut chosen, &mut |site| {
            if hit.is_some() {
                return;
            }
            let options: Vec<Vec<EdgeLabel>> = site.iter().map(|&e| other_labels(code.label(e)).collect()).collect();
            let total: usize = options.iter().map(Vec::len).product();
            for index in 0..total {
                let mut rest = index;
                let mut cand = code.clone();
                for (&e, opts) in site.iter().zip(&options) {
                    cand.set_label(e, opts[rest % opts.len()]);
                    rest /= opts.len();
                }
                if cand.crossing_count() >= n {
                    continue;
                }
                let key = trace::trace(&cand).expect("classical").diagram.key();
                if targets.binary_search(&key).is_ok() {
                    hit = Some(local_move(
                        code,
                        MoveKind::MirrorMove,
                        site.to_vec(),
                        site.iter().map(|&e| cand.label(e)).collect(),
                    ));
                    return;
                }
            }
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

fn each_subset(edges: &[usize], size: usize, from: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == size {
        f(chosen);
        return;
    }
    for i in from..edges.len() {
        chosen.push(edges[i]);
        each_subset(edges, size, i + 1, chosen, f);
        chosen.pop();
    }
}

pub fn default_budget(code: &GridCode) -> usize {
    let n = code.crossing_count();
    (10 * n * n).max(10)
}

/// Greedy reduction: R1, then R2, then R3 moves that enable one of them,
/// then the all-over move, until none applies or `budget` moves were made.
pub fn reduce(code: &GridCode, budget: usize) -> Result<ReductionLog> {
    code.ensure_classical()?;
    let mut cur = code.clone();
    let mut steps = Vec::new();
    let mut budget_exceeded = false;
    while let Some(m) = next_move(&cur)? {
        if steps.len() >= budget {
            budget_exceeded = true;
            break;
        }
        cur = m.apply(&cur)?;
        steps.push(m);
    }
    Ok(ReductionLog { initial: code.clone(), steps, final_code: cur, budget_exceeded })
}

/// R1 and R2 moves, and R3 moves found by a short search that enable them,
/// on the abstract diagram.
pub fn simplify_diagram(d: &Diagram) -> Diagram {
    let mut d = d.clone();
    loop {
        if let Some(&(c, k)) = d.monogons().first() {
            d = d.remove_curl(c, k).0;
            continue;
        }
        if let Some(b) = d.bigons().into_iter().find(|b| b.reducible) {
            d = d.remove_bigon(&b);
            continue;
        }
        match r3_lookahead(&d, R3_LOOKAHEAD) {
            Some(next) => d = next,
            None => return d,
        }
    }
}

fn r3_lookahead(d: &Diagram, depth: usize) -> Option<Diagram> {
    r3_plan(d, depth).first().map(|t| d.r3(t))
}

// First R3 moves of the shortest R3 sequences, up to `depth` long, after
// which an R1 or R2 move applies; shorter sequences come first.
fn r3_plan(d: &Diagram, depth: usize) -> Vec<Triangle> {
    let mut seen = HashSet::from([d.key()]);
    let mut queue: VecDeque<(Diagram, usize, Option<Triangle>)> = VecDeque::from([(d.clone(), 0, None)]);
    let mut out: Vec<Triangle> = Vec::new();
    let mut found_at = None;
    while let Some((cur, k, first)) = queue.pop_front() {
        if k == depth || found_at.is_some_and(|f| k >= f) {
            continue;
        }
        for t in cur.triangles() {
            if !cur.r3_valid(&t) {
                continue;
            }
            let next = cur.r3(&t);
            let head = first.unwrap_or(t);
            if has_reduction(&next) {
                found_at = Some(k + 1);
                if !out.contains(&head) {
                    out.push(head);
                }
            } else if seen.insert(next.key()) {
                queue.push_back((next, k + 1, Some(head)));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnlinkStatus {
    /// An unlink of this many components.
    Yes(usize),
    No,
    Unknown,
}

/// Decide whether `code` is an unlink. `Yes` when Reidemeister moves reach a
/// crossing-free diagram, `No` when the normalized bracket is not an
/// unlink's.
pub fn is_unlink(code: &GridCode) -> Result<UnlinkStatus> {
    code.ensure_classical()?;
    let t = trace::trace(code)?;
    let c = t.components;
    if t.crossings.is_empty() || simplify_diagram(&t.diagram).crossing_count() == 0 {
        return Ok(UnlinkStatus::Yes(c));
    }
    if t.crossings.len() <= MAX_BRACKET_CROSSINGS && normalized_polynomial(code)? != unlink_polynomial(c) {
        return Ok(UnlinkStatus::No);
    }
    Ok(UnlinkStatus::Unknown)
}
