//! Text and integer encodings of grid codes.

use serde::Serialize;

use crate::algebra;
use crate::error::{Error, Result};
use crate::grid::{edge_count, EdgeLabel, GridCode};
use crate::isometry::IsometryGroup;

/// A crossing-free code given by the bits of `m`, most significant first,
/// with 0 read as `2` and 1 as `-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StateCode {
    pub p: usize,
    pub q: usize,
    pub m: u64,
}

/// The product of two state codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FourCode {
    pub p: usize,
    pub q: usize,
    pub m: u64,
    pub n: u64,
}

/// The product of two four-number codes on the same grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SixCode {
    pub p: usize,
    pub q: usize,
    pub m1: u64,
    pub n1: u64,
    pub m2: u64,
    pub n2: u64,
}

const MAX_BITS: usize = 63;

fn check_bits(p: usize, q: usize) -> Result<usize> {
    if p == 0 || q == 0 {
        return Err(Error::Range(format!("RG[{p},{q}] needs p, q >= 1")));
    }
    let v = edge_count(p, q);
    if v > MAX_BITS {
        return Err(Error::Range(format!("RG[{p},{q}] has {v} edges, more than {MAX_BITS}")));
    }
    Ok(v)
}

fn check_value(p: usize, q: usize, m: u64) -> Result<usize> {
    let v = check_bits(p, q)?;
    if v < 64 && m >> v != 0 {
        return Err(Error::Range(format!("{m} does not fit in {v} bits")));
    }
    Ok(v)
}

impl StateCode {
    pub fn new(p: usize, q: usize, m: u64) -> Result<Self> {
        check_value(p, q, m)?;
        Ok(StateCode { p, q, m })
    }

    pub fn decode(&self) -> Result<GridCode> {
        decode_state(*self)
    }
}

impl FourCode {
    pub fn new(p: usize, q: usize, m: u64, n: u64) -> Result<Self> {
        check_value(p, q, m)?;
        check_value(p, q, n)?;
        Ok(FourCode { p, q, m, n })
    }

    pub fn decode(&self) -> Result<GridCode> {
        decode_four(*self)
    }
}

impl std::fmt::Display for FourCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.p, self.q, self.m, self.n)
    }
}

impl std::fmt::Display for StateCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.m)
    }
}

pub fn decode_state(s: StateCode) -> Result<GridCode> {
    let v = check_value(s.p, s.q, s.m)?;
    let labels = (0..v).map(|i| if (s.m >> (v - 1 - i)) & 1 == 1 { EdgeLabel::Perp } else { EdgeLabel::Mir }).collect();
    GridCode::new(s.p, s.q, labels)
}

/// Inverse of `decode_state` on crossing-free codes.
pub fn encode_state(code: &GridCode) -> Result<StateCode> {
    check_bits(code.p(), code.q())?;
    let mut m = 0u64;
    for &l in code.labels() {
        m <<= 1;
        match l {
            EdgeLabel::Mir => {}
            EdgeLabel::Perp => m |= 1,
            other => return Err(Error::Label(format!("state codes hold only mirrors, found {other}"))),
        }
    }
    Ok(StateCode { p: code.p(), q: code.q(), m })
}

pub fn decode_four(f: FourCode) -> Result<GridCode> {
    let a = decode_state(StateCode::new(f.p, f.q, f.m)?)?;
    let b = decode_state(StateCode::new(f.p, f.q, f.n)?)?;
    algebra::product(&a, &b)
}

pub fn decode_six(s: SixCode) -> Result<GridCode> {
    let a = decode_four(FourCode::new(s.p, s.q, s.m1, s.n1)?)?;
    let b = decode_four(FourCode::new(s.p, s.q, s.m2, s.n2)?)?;
    algebra::product(&a, &b)
}

/// Four-number code of the decomposition of `code` itself.
pub fn four_code(code: &GridCode) -> Result<FourCode> {
    let (s1, s2) = algebra::decompose(code)?;
    Ok(FourCode { p: code.p(), q: code.q(), m: s1.m, n: s2.m })
}

/// Smallest `(p,q,m,n)` over the isometry orbit of `code`.
pub fn minimal_four_code(code: &GridCode) -> Result<FourCode> {
    code.ensure_classical()?;
    let group = IsometryGroup::new(code.p(), code.q());
    group
        .orbit(code)
        .iter()
        .map(four_code)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Range("empty orbit".into()))
}

/// Smallest six-number code over the isometry orbit: each member is split
/// into the products of its two states with the all-2 and all-(-2) states.
pub fn minimal_six_code(code: &GridCode) -> Result<SixCode> {
    code.ensure_classical()?;
    let v = check_bits(code.p(), code.q())?;
    let full = (1u64 << v) - 1;
    let group = IsometryGroup::new(code.p(), code.q());
    let mut best: Option<SixCode> = None;
    for member in group.orbit(code) {
        let (s1, s2) = algebra::decompose(&member)?;
        // s1 * s2 = (s1 * B) * (A * s2) with A, B the all-2 and all-(-2) states.
        let six = SixCode { p: code.p(), q: code.q(), m1: s1.m, n1: full, m2: 0, n2: s2.m };
        debug_assert_eq!(decode_six(six)?, member);
        if best.is_none_or(|b| six < b) {
            best = Some(six);
        }
    }
    best.ok_or_else(|| Error::Range("empty orbit".into()))
}

/// Canonical text form, `RG[p,q]{{...},...}`.
pub fn serialize_matrix(code: &GridCode) -> String {
    let lists: Vec<String> = code
        .rows()
        .chain(code.cols())
        .map(|l| format!("{{{}}}", l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("RG[{},{}]{{{}}}", code.p(), code.q(), lists.join(","))
}

/// Bare nested-list form without the prefix.
pub fn serialize_bare(code: &GridCode) -> String {
    let s = serialize_matrix(code);
    s[s.find('{').unwrap_or(0)..].to_string()
}

struct Lexer<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{}' at offset {}", c as char, self.i)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.i;
        if matches!(self.s.get(self.i), Some(b'-') | Some(b'+')) {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let tok = std::str::from_utf8(&self.s[start..self.i]).unwrap_or("");
        tok.parse().map_err(|_| Error::Parse(format!("expected an integer at offset {start}")))
    }
}

fn fits(p: usize, q: usize, lists: &[Vec<EdgeLabel>]) -> bool {
    lists.len() + 2 == p + q
        && lists[..q - 1].iter().all(|l| l.len() == p)
        && lists[q - 1..].iter().all(|l| l.len() == q)
}

/// Parse `RG[p,q]{...}` or a bare nested list whose shape is unambiguous.
pub fn parse_matrix(text: &str) -> Result<GridCode> {
    let mut lx = Lexer { s: text.as_bytes(), i: 0 };
    let mut dims = None;
    if lx.peek() == Some(b'R') {
        let rest = &text[lx.i..];
        if !rest.starts_with("RG[") {
            return Err(Error::Parse("expected RG[p,q] prefix".into()));
        }
        lx.i += 3;
        let p = lx.int()?;
        lx.expect(b',')?;
        let q = lx.int()?;
        lx.expect(b']')?;
        if p < 1 || q < 1 {
            return Err(Error::Shape(format!("RG[{p},{q}] needs p, q >= 1")));
        }
        dims = Some((p as usize, q as usize));
    }
    lx.expect(b'{')?;
    let mut lists: Vec<Vec<EdgeLabel>> = Vec::new();
    if lx.peek() != Some(b'}') {
        loop {
            lx.expect(b'{')?;
            let mut list = Vec::new();
            if lx.peek() != Some(b'}') {
                loop {
                    let v = lx.int()?;
                    let l = EdgeLabel::from_value(v)
                        .ok_or_else(|| Error::Label(format!("{v} is not one of 1, -1, 2, -2, 0")))?;
                    list.push(l);
                    if lx.peek() == Some(b',') {
                        lx.i += 1;
                    } else {
                        break;
                    }
                }
            }
            lx.expect(b'}')?;
            lists.push(list);
            if lx.peek() == Some(b',') {
                lx.i += 1;
            } else {
                break;
            }
        }
    }
    lx.expect(b'}')?;
    if lx.peek().is_some() {
        return Err(Error::Parse(format!("trailing input at offset {}", lx.i)));
    }
    let (p, q) = match dims {
        Some((p, q)) => {
            if !fits(p, q, &lists) {
                return Err(Error::Shape(format!(
                    "RG[{p},{q}] needs {} lists of length {p} then {} of length {q}",
                    q - 1,
                    p - 1
                )));
            }
            (p, q)
        }
        None => {
            let total = lists.len() + 2;
            let cands: Vec<(usize, usize)> =
                (1..total).map(|q| (total - q, q)).filter(|&(p, q)| fits(p, q, &lists)).collect();
            match cands.as_slice() {
                [] => return Err(Error::Shape("list lengths match no RG[p,q]".into())),
                [one] => *one,
                [a, b, ..] => return Err(Error::AmbiguousShape(a.0, a.1, b.0, b.1)),
            }
        }
    };
    GridCode::new(p, q, lists.into_iter().flatten().collect())
}

impl std::str::FromStr for GridCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}

impl serde::Serialize for GridCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&serialize_matrix(self))
    }
}

impl std::fmt::Display for GridCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let t = parse_matrix("RG[2,2]{{-2,1},{1,1}}").unwrap();
        assert_eq!((t.p(), t.q()), (2, 2));
        let f = parse_matrix("{{-2,1,1},{1,1},{-2,-2}}").unwrap();
        assert_eq!((f.p(), f.q()), (3, 2));
        let e = parse_matrix(" RG[1,1] { } ").unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(parse_matrix("{}").unwrap(), e);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix("{{1}}"), Err(Error::AmbiguousShape(..))));
        assert!(matches!(parse_matrix("{{1,1,1},{1}}"), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix("{{3,1},{1,1}}"), Err(Error::Label(_))));
        assert!(matches!(parse_matrix("RG[2,2]{{1,1},{1,1,1}}"), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix("{{1,x},{1,1}}"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trip() {
        for text in ["RG[2,2]{{2,2},{2,2}}", "RG[2,1]{{1}}", "RG[1,2]{{-1}}", "RG[1,1]{}"] {
            assert_eq!(serialize_matrix(&parse_matrix(text).unwrap()), text);
        }
    }

    #[test]
    fn states() {
        let c = decode_state(StateCode::new(2, 2, 15).unwrap()).unwrap();
        assert_eq!(serialize_matrix(&c), "RG[2,2]{{-2,-2},{-2,-2}}");
        let c = decode_state(StateCode::new(2, 2, 1).unwrap()).unwrap();
        assert_eq!(serialize_matrix(&c), "RG[2,2]{{2,2},{2,-2}}");
        assert_eq!(encode_state(&c).unwrap().m, 1);
        assert!(StateCode::new(2, 2, 16).is_err());
    }

    #[test]
    fn four_codes() {
        let t = decode_four(FourCode::new(2, 2, 1, 15).unwrap()).unwrap();
        assert_eq!(serialize_matrix(&t), "RG[2,2]{{1,1},{1,-2}}");
        let h = decode_four(FourCode::new(2, 2, 5, 15).unwrap()).unwrap();
        assert_eq!(serialize_matrix(&h), "RG[2,2]{{1,-2},{1,-2}}");
        let mut ms: Vec<u64> = Vec::new();
        let group = IsometryGroup::new(2, 2);
        for member in group.orbit(&t) {
            ms.push(four_code(&member).unwrap().m);
        }
        ms.sort();
        ms.dedup();
        assert_eq!(ms, vec![1, 2, 4, 8]);
        assert_eq!(minimal_four_code(&t).unwrap(), FourCode { p: 2, q: 2, m: 1, n: 15 });
    }

    #[test]
    fn six_codes_decode() {
        let c = parse_matrix("{{1,-1},{2,-2}}").unwrap();
        let s = minimal_six_code(&c).unwrap();
        let back = decode_six(s).unwrap();
        assert!(IsometryGroup::new(2, 2).orbit(&c).contains(&back));
    }
}
