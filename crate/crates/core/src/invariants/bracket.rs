use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::grid::{EdgeLabel, GridCode};
use crate::poly::LaurentPoly;
use crate::trace::{self, a_label, Wiring, CONVENTION};

pub const MAX_BRACKET_CROSSINGS: usize = 24;

/// One Kauffman state: crossing `k` (in edge order) takes the `a` smoothing
/// when bit `n-1-k` of `index` is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateTerm {
    pub index: u64,
    pub code: GridCode,
    pub weight: i32,
    pub circles: usize,
}

fn smoothed(code: &GridCode, crossings: &[usize], index: u64) -> (Vec<EdgeLabel>, i32) {
    let n = crossings.len();
    let mut labels = code.labels().to_vec();
    let mut weight = 0;
    for (k, &e) in crossings.iter().enumerate() {
        let a = a_label(code.label(e));
        if (index >> (n - 1 - k)) & 1 == 0 {
            labels[e] = a;
            weight += 1;
        } else {
            labels[e] = a.other_mirror();
            weight -= 1;
        }
    }
    (labels, weight)
}

fn check(code: &GridCode, limit: usize) -> Result<Vec<usize>> {
    code.ensure_classical()?;
    let crossings = code.crossing_edges();
    if crossings.len() > limit {
        return Err(Error::TooManyCrossings(crossings.len(), limit));
    }
    Ok(crossings)
}

/// All `2^n` states in index order.
pub fn bracket_states(code: &GridCode) -> Result<Vec<StateTerm>> {
    let crossings = check(code, MAX_BRACKET_CROSSINGS)?;
    let wiring = Wiring::new(code.p(), code.q());
    Ok((0..1u64 << crossings.len())
        .map(|index| {
            let (labels, weight) = smoothed(code, &crossings, index);
            let state = GridCode::new(code.p(), code.q(), labels).expect("same shape");
            let circles = trace::count_components_with(&wiring, &state, CONVENTION);
            StateTerm { index, code: state, weight, circles }
        })
        .collect())
}

fn assemble(hist: &BTreeMap<(i32, usize), i64>) -> LaurentPoly {
    let d = LaurentPoly::loop_value();
    let mut out = LaurentPoly::zero();
    for (&(w, c), &count) in hist {
        let term = &LaurentPoly::monomial(count, w) * &d.pow(c as u32 - 1);
        out += &term;
    }
    out
}

/// State-sum bracket.
pub fn bracket(code: &GridCode) -> Result<LaurentPoly> {
    bracket_with_limit(code, MAX_BRACKET_CROSSINGS)
}

pub fn bracket_with_limit(code: &GridCode, limit: usize) -> Result<LaurentPoly> {
    let crossings = check(code, limit)?;
    let n = crossings.len();
    let wiring = Wiring::new(code.p(), code.q());
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(8);
    let hist = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|block| {
            let mut h: BTreeMap<(i32, usize), i64> = BTreeMap::new();
            for index in block * chunk..((block + 1) * chunk).min(total) {
                let (labels, weight) = smoothed(code, &crossings, index);
                let state = GridCode::new(code.p(), code.q(), labels).expect("same shape");
                let circles = trace::count_components_with(&wiring, &state, CONVENTION);
                *h.entry((weight, circles)).or_insert(0) += 1;
            }
            h
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(assemble(&hist))
}

/// Expand only the `-1` crossings; every summand is a code whose crossings
/// are all `1`.
pub fn bracket_by_negative_expansion(code: &GridCode) -> Result<LaurentPoly> {
    check(code, MAX_BRACKET_CROSSINGS)?;
    let negatives: Vec<usize> = (0..code.edge_count()).filter(|&e| code.label(e) == EdgeLabel::Neg).collect();
    let k = negatives.len();
    let mut out = LaurentPoly::zero();
    for index in 0..1u64 << k {
        let mut m = code.clone();
        let mut weight = 0;
        for (j, &e) in negatives.iter().enumerate() {
            if (index >> (k - 1 - j)) & 1 == 0 {
                m.set_label(e, EdgeLabel::Mir);
                weight += 1;
            } else {
                m.set_label(e, EdgeLabel::Perp);
                weight -= 1;
            }
        }
        out += &bracket(&m)?.shift(weight);
    }
    Ok(out)
}

/// Crossing-by-crossing expansion on the abstract diagram.
pub fn bracket_recursive(d: &Diagram) -> LaurentPoly {
    if d.crossing_count() == 0 {
        return LaurentPoly::loop_value().pow(d.free_circles() as u32 - 1);
    }
    let c = d.crossing_count() - 1;
    let a = d.a_smoothing(c);
    let pa = bracket_recursive(&d.smooth(c, a)).shift(1);
    let pb = bracket_recursive(&d.smooth(c, a.other_smoothing())).shift(-1);
    &pa + &pb
}

/// `(-a^3)^(-w) <D>` with `w` the self-writhe of the diagram.
pub fn normalized_from_bracket(b: &LaurentPoly, self_writhe: i32) -> LaurentPoly {
    let sign = if self_writhe.rem_euclid(2) == 1 { -1 } else { 1 };
    &LaurentPoly::monomial(sign, -3 * self_writhe) * b
}

pub fn normalized_polynomial(code: &GridCode) -> Result<LaurentPoly> {
    let b = bracket(code)?;
    let d = trace::trace(code)?;
    Ok(normalized_from_bracket(&b, d.self_writhe))
}

/// Normalized polynomial of the `c`-component unlink.
pub fn unlink_polynomial(c: usize) -> LaurentPoly {
    LaurentPoly::loop_value().pow(c.saturating_sub(1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;

    #[test]
    fn worked_example() {
        let code = parse_matrix("{{1,1},{-1,-2}}").unwrap();
        assert_eq!(bracket(&code).unwrap(), LaurentPoly::monomial(-1, 3));
        let states = bracket_states(&code).unwrap();
        let pairs: Vec<(i32, usize)> = states.iter().map(|s| (s.weight, s.circles)).collect();
        assert_eq!(pairs, vec![(3, 1), (1, 2), (1, 2), (-1, 1), (1, 2), (-1, 1), (-1, 3), (-3, 2)]);
    }

    #[test]
    fn crossing_free() {
        let code = parse_matrix("{{2,2},{2,-2}}").unwrap();
        assert_eq!(bracket(&code).unwrap(), unlink_polynomial(3));
    }

    #[test]
    fn recursive_agrees() {
        for text in ["{{1,1},{1,-2}}", "{{1,1},{1,1}}", "{{-2,1,1},{1,1},{-2,-2}}", "{{1,-1,2},{-1,1},{1,-1}}"] {
            let code = parse_matrix(text).unwrap();
            let d = trace::trace(&code).unwrap().diagram;
            assert_eq!(bracket(&code).unwrap(), bracket_recursive(&d), "{text}");
            assert_eq!(bracket(&code).unwrap(), bracket_by_negative_expansion(&code).unwrap());
        }
    }

    #[test]
    fn unknot_normalizes_to_one() {
        let code = parse_matrix("{{1,1},{-1,-2}}").unwrap();
        assert_eq!(normalized_polynomial(&code).unwrap(), LaurentPoly::one());
    }
}
