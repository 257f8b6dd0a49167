//! Abstract link diagrams: four-valent planar maps with over/under data.
//!
//! Crossing `c` has ports `4c..4c+4` in counterclockwise order; opposite
//! ports belong to one strand. `link[x]` is the port at the other end of the
//! arc leaving port `x`. Crossing-free components are only counted.

use std::collections::VecDeque;

use crate::trace::Pairing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    link: Vec<usize>,
    over_even: Vec<bool>,
    free_circles: usize,
}

/// Isomorphism-class key of a diagram, up to planar isotopy on the sphere
/// and the rotation that reflects the plane while switching every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey {
    pub pieces: Vec<Vec<u32>>,
    pub circles: usize,
}

impl DiagramKey {
    pub fn crossing_count(&self) -> usize {
        // Each crossing is encoded by its over bit and four (crossing, port) pairs.
        self.pieces.iter().map(|p| p.len() / 9).sum()
    }
}

/// A face of the diagram given by its darts `(crossing, port)`, each dart
/// leaving its crossing through that port.
pub type Face = Vec<(usize, usize)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bigon {
    pub first: (usize, usize),
    pub second: (usize, usize),
    /// One strand runs over both crossings.
    pub reducible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub darts: [(usize, usize); 3],
}

impl Diagram {
    pub fn from_parts(link: Vec<usize>, over_even: Vec<bool>, free_circles: usize) -> Diagram {
        debug_assert_eq!(link.len(), 4 * over_even.len());
        debug_assert!(link.iter().enumerate().all(|(x, &y)| link[y] == x));
        Diagram { link, over_even, free_circles }
    }

    /// Crossing-free diagram of `circles` round circles.
    pub fn unlink(circles: usize) -> Diagram {
        Diagram { link: vec![], over_even: vec![], free_circles: circles }
    }

    pub fn crossing_count(&self) -> usize {
        self.over_even.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn target(&self, port: usize) -> usize {
        self.link[port]
    }

    pub fn links(&self) -> &[usize] {
        &self.link
    }

    pub fn over_even(&self, c: usize) -> bool {
        self.over_even[c]
    }

    /// Whether port `k` of crossing `c` lies on the over strand.
    pub fn is_over(&self, c: usize, k: usize) -> bool {
        self.over_even[c] == k.is_multiple_of(2)
    }

    /// The smoothing weighted by `a` in the bracket.
    pub fn a_smoothing(&self, c: usize) -> Pairing {
        if self.over_even[c] {
            Pairing::P03_12
        } else {
            Pairing::P01_23
        }
    }

    /// Replace crossing `c` by a smoothing, renumbering the crossings after it.
    pub fn smooth(&self, c: usize, pairing: Pairing) -> Diagram {
        let mut link = self.link.clone();
        let mut circles = self.free_circles;
        let base = 4 * c;
        for (a, b) in pairing.pairs() {
            let u = link[base + a];
            let v = link[base + b];
            if u == base + b {
                circles += 1;
            } else {
                link[u] = v;
                link[v] = u;
            }
        }
        let shift = |x: usize| if x > base { x - 4 } else { x };
        let link = link.iter().enumerate().filter(|(x, _)| x / 4 != c).map(|(_, &y)| shift(y)).collect();
        let mut over_even = self.over_even.clone();
        over_even.remove(c);
        Diagram { link, over_even, free_circles: circles }
    }

    /// Exchange over and under at crossing `c`.
    pub fn switch(&self, c: usize) -> Diagram {
        let mut d = self.clone();
        d.over_even[c] = !d.over_even[c];
        d
    }

    /// Every crossing switched: the mirror image.
    pub fn mirror(&self) -> Diagram {
        let mut d = self.clone();
        for o in &mut d.over_even {
            *o = !*o;
        }
        d
    }

    /// Components as sequences of `(crossing, entry port)`, starting from the
    /// lowest unvisited strand. Free circles are not listed.
    pub fn components(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 2]; n];
        let mut out = Vec::new();
        for c in 0..n {
            for s in 0..2 {
                if seen[c][s] {
                    continue;
                }
                let mut comp = Vec::new();
                let (mut cc, mut k) = (c, s);
                while !seen[cc][k % 2] {
                    seen[cc][k % 2] = true;
                    comp.push((cc, k));
                    let t = self.link[cc * 4 + (k + 2) % 4];
                    cc = t / 4;
                    k = t % 4;
                }
                out.push(comp);
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_circles
    }

    /// Component index of each strand, `[c][parity]`, plus entry ports.
    fn strand_data(&self) -> (Vec<[usize; 2]>, Vec<[usize; 2]>) {
        let n = self.crossing_count();
        let mut comp_of = vec![[0usize; 2]; n];
        let mut entry = vec![[0usize; 2]; n];
        for (i, comp) in self.components().iter().enumerate() {
            for &(c, k) in comp {
                comp_of[c][k % 2] = i;
                entry[c][k % 2] = k;
            }
        }
        (comp_of, entry)
    }

    /// Oriented crossing signs for the orientation of `components`.
    pub fn oriented_signs(&self) -> Vec<i32> {
        let (_, entry) = self.strand_data();
        (0..self.crossing_count())
            .map(|c| {
                let in1 = entry[c][0];
                let in2 = entry[c][1];
                if self.a_smoothing(c).joins(in1, in2 + 2) {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    pub fn writhe(&self) -> i32 {
        self.oriented_signs().iter().sum()
    }

    /// Writhe over crossings of a component with itself; does not depend on
    /// the orientations chosen.
    pub fn self_writhe(&self) -> i32 {
        let (comp_of, _) = self.strand_data();
        self.oriented_signs().iter().enumerate().filter(|(c, _)| comp_of[*c][0] == comp_of[*c][1]).map(|(_, s)| s).sum()
    }

    fn next_dart(&self, dart: usize) -> usize {
        let t = self.link[dart];
        (t / 4) * 4 + (t + 3) % 4
    }

    pub fn faces(&self) -> Vec<Face> {
        let m = self.link.len();
        let mut seen = vec![false; m];
        let mut faces = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push((d / 4, d % 4));
                d = self.next_dart(d);
            }
            faces.push(face);
        }
        faces
    }

    /// Curl crossings with the port at which each loop starts.
    pub fn monogons(&self) -> Vec<(usize, usize)> {
        (0..self.link.len()).filter(|&d| self.link[d] == (d / 4) * 4 + (d + 1) % 4).map(|d| (d / 4, d % 4)).collect()
    }

    pub fn bigons(&self) -> Vec<Bigon> {
        let mut out = Vec::new();
        for f in self.faces() {
            if f.len() == 2 && f[0].0 != f[1].0 {
                let (c1, k1) = f[0];
                let (c2, k2) = f[1];
                let reducible = self.is_over(c1, k1) == self.is_over(c2, k2 + 1);
                out.push(Bigon { first: f[0], second: f[1], reducible });
            }
        }
        out
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for f in self.faces() {
            if f.len() == 3 && f[0].0 != f[1].0 && f[1].0 != f[2].0 && f[0].0 != f[2].0 {
                out.push(Triangle { darts: [f[0], f[1], f[2]] });
            }
        }
        out
    }

    /// Whether some strand of the triangle runs over both of its crossings.
    pub fn r3_valid(&self, t: &Triangle) -> bool {
        (0..3).any(|i| {
            let (c, k) = t.darts[i];
            let (c2, k2) = t.darts[(i + 1) % 3];
            self.is_over(c, k) == self.is_over(c2, k2 + 1)
        })
    }

    /// The curl at `c` removed by its kink-undoing smoothing, with the
    /// oriented sign of the curl.
    pub fn remove_curl(&self, c: usize, k: usize) -> (Diagram, i32) {
        let keep = Pairing::avoiding(k);
        let sign = if self.a_smoothing(c) == keep { -1 } else { 1 };
        (self.smooth(c, keep), sign)
    }

    /// Smoothings at the two crossings of a bigon that pull it apart.
    pub fn bigon_smoothings(b: &Bigon) -> [(usize, Pairing); 2] {
        [(b.first.0, Pairing::avoiding(b.first.1)), (b.second.0, Pairing::avoiding(b.second.1))]
    }

    pub fn remove_bigon(&self, b: &Bigon) -> Diagram {
        let [(c1, p1), (c2, p2)] = Diagram::bigon_smoothings(b);
        let (hi, phi, lo, plo) = if c1 > c2 { (c1, p1, c2, p2) } else { (c2, p2, c1, p1) };
        self.smooth(hi, phi).smooth(lo, plo)
    }

    /// Slide one strand of the triangle across the opposite crossing.
    pub fn r3(&self, t: &Triangle) -> Diagram {
        let mut link = self.link.clone();
        let mut sides = Vec::new();
        let mut phi: Vec<(usize, usize)> = Vec::new();
        for i in 0..3 {
            let (x, p) = t.darts[i];
            let (y, q1) = t.darts[(i + 1) % 3];
            let q = (q1 + 1) % 4;
            let xe = x * 4 + (p + 2) % 4;
            let ye = y * 4 + (q + 2) % 4;
            phi.push((xe, y * 4 + q));
            phi.push((ye, x * 4 + p));
            sides.push((ye, xe));
        }
        let map = |z: usize| phi.iter().find(|(a, _)| *a == z).map(|(_, b)| *b);
        for &(old, new) in &phi {
            let t0 = self.link[old];
            let t1 = map(t0).unwrap_or(t0);
            link[new] = t1;
            link[t1] = new;
        }
        for (a, b) in sides {
            link[a] = b;
            link[b] = a;
        }
        Diagram { link, over_even: self.over_even.clone(), free_circles: self.free_circles }
    }

    /// Connected pieces of the crossing graph.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossing_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut piece = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < piece.len() {
                let c = piece[i];
                for k in 0..4 {
                    let t = self.link[c * 4 + k] / 4;
                    if !seen[t] {
                        seen[t] = true;
                        piece.push(t);
                    }
                }
                i += 1;
            }
            out.push(piece);
        }
        out
    }

    fn encode_from(&self, start: usize, k0: usize, ccw: bool, size: usize) -> Vec<u32> {
        let n = self.crossing_count();
        let mut idx = vec![u32::MAX; n];
        let mut base = vec![0usize; n];
        let mut order = VecDeque::with_capacity(size);
        let mut out = Vec::with_capacity(size * 9);
        idx[start] = 0;
        base[start] = k0;
        order.push_back(start);
        let mut next_idx = 1;
        let actual = |b: usize, j: usize| if ccw { (b + j) % 4 } else { (b + 4 - j) % 4 };
        while let Some(c) = order.pop_front() {
            // The rotation used for CW reads also switches every crossing.
            out.push((self.is_over(c, base[c]) == ccw) as u32);
            for j in 0..4 {
                let t = self.link[c * 4 + actual(base[c], j)];
                let (c2, k2) = (t / 4, t % 4);
                if idx[c2] == u32::MAX {
                    idx[c2] = next_idx;
                    next_idx += 1;
                    base[c2] = k2;
                    order.push_back(c2);
                }
                let local = if ccw { (k2 + 4 - base[c2]) % 4 } else { (base[c2] + 4 - k2) % 4 };
                out.push(idx[c2]);
                out.push(local as u32);
            }
        }
        out
    }

    pub fn key(&self) -> DiagramKey {
        let mut pieces: Vec<Vec<u32>> = self
            .pieces()
            .iter()
            .map(|piece| {
                let mut best: Option<Vec<u32>> = None;
                for &c in piece {
                    for k in 0..4 {
                        for ccw in [true, false] {
                            let code = self.encode_from(c, k, ccw, piece.len());
                            if best.as_ref().is_none_or(|b| code < *b) {
                                best = Some(code);
                            }
                        }
                    }
                }
                best.unwrap_or_default()
            })
            .collect();
        pieces.sort();
        DiagramKey { pieces, circles: self.free_circles }
    }
}
