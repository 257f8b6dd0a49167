use std::collections::HashMap;

use crate::diagram::{Diagram, DiagramKey};
use crate::error::{Error, Result};
use crate::grid::GridCode;
use crate::poly::LaurentPoly2;
use crate::trace;

pub const MAX_L_CROSSINGS: usize = 12;

pub fn l_polynomial(code: &GridCode) -> Result<LaurentPoly2> {
    l_polynomial_with_limit(code, MAX_L_CROSSINGS)
}

pub fn l_polynomial_with_limit(code: &GridCode, limit: usize) -> Result<LaurentPoly2> {
    code.ensure_classical()?;
    let n = code.crossing_count();
    if n > limit {
        return Err(Error::TooManyCrossings(n, limit));
    }
    Ok(l_polynomial_of_diagram(&trace::trace(code)?.diagram))
}

/// Substitute `a -> a^-1`.
pub fn mirror_substitute(poly: &LaurentPoly2) -> LaurentPoly2 {
    poly.mirror_substitute()
}

pub fn l_polynomial_of_diagram(d: &Diagram) -> LaurentPoly2 {
    let mut memo = HashMap::new();
    Evaluator { memo: &mut memo }.eval(d)
}

struct Evaluator<'a> {
    memo: &'a mut HashMap<DiagramKey, LaurentPoly2>,
}

// Strip curls and reducible bigons; returns the power of `a` picked up.
fn simplify(d: &Diagram) -> (Diagram, i32) {
    let mut d = d.clone();
    let mut power = 0;
    loop {
        if let Some(&(c, k)) = d.monogons().first() {
            let (next, sign) = d.remove_curl(c, k);
            power += sign;
            d = next;
            continue;
        }
        if let Some(b) = d.bigons().into_iter().find(|b| b.reducible) {
            d = d.remove_bigon(&b);
            continue;
        }
        return (d, power);
    }
}

// Crossings first met on the under strand, walking each component from its
// start in order.
fn switch_list(d: &Diagram) -> Vec<usize> {
    let mut met = vec![false; d.crossing_count()];
    let mut out = Vec::new();
    for comp in d.components() {
        for (c, k) in comp {
            if !met[c] {
                met[c] = true;
                if !d.is_over(c, k) {
                    out.push(c);
                }
            }
        }
    }
    out
}

impl Evaluator<'_> {
    fn eval(&mut self, d: &Diagram) -> LaurentPoly2 {
        let (d, power) = simplify(d);
        let key = d.key();
        if let Some(v) = self.memo.get(&key) {
            return v.shift(power, 0);
        }
        let value = self.eval_simplified(&d);
        self.memo.insert(key, value.clone());
        value.shift(power, 0)
    }

    fn eval_simplified(&mut self, d: &Diagram) -> LaurentPoly2 {
        let circles = d.component_count() as u32;
        let switches = switch_list(d);
        let Some(&c) = switches.first() else {
            // Descending: an unlink whose diagram keeps its self-writhe.
            return LaurentPoly2::delta().pow(circles - 1).shift(d.self_writhe(), 0);
        };
        let a = d.a_smoothing(c);
        let s0 = self.eval(&d.smooth(c, a));
        let s1 = self.eval(&d.smooth(c, a.other_smoothing()));
        let sw = self.eval(&d.switch(c));
        &(&s0 + &s1).shift(0, 1) - &sw
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;
    use crate::invariants::bracket;

    fn l(text: &str) -> LaurentPoly2 {
        l_polynomial(&parse_matrix(text).unwrap()).unwrap()
    }

    #[test]
    fn circles_give_delta_powers() {
        assert_eq!(l("{{2,2},{2,-2}}"), LaurentPoly2::delta().pow(2));
        assert_eq!(l("{{-2,-2},{2,-2}}"), LaurentPoly2::one());
    }

    #[test]
    fn specializes_to_bracket() {
        for text in ["{{1,1},{1,-2}}", "{{1,1},{1,1}}", "{{-2,1,1},{1,1},{-2,-2}}", "{{1,-1,2},{-1,1},{1,-1}}"] {
            let code = parse_matrix(text).unwrap();
            let lp = l_polynomial(&code).unwrap();
            let shift = -lp.min_z().unwrap_or(0).min(0);
            let zpow = crate::poly::LaurentPoly::from_terms([(1, 1), (-1, 1)]).pow(shift as u32);
            let b = bracket(&code).unwrap();
            assert_eq!(lp.bracket_specialization(shift), &b * &zpow, "{text}");
        }
    }

    #[test]
    fn skein_identity() {
        let code = parse_matrix("{{1,-1,1},{1,-1},{-2,1}}").unwrap();
        for e in code.crossing_edges() {
            let sw = code.with_label(e, code.label(e).switched());
            let s2 = code.with_label(e, crate::grid::EdgeLabel::Mir);
            let s3 = code.with_label(e, crate::grid::EdgeLabel::Perp);
            let lhs = &l_polynomial(&code).unwrap() + &l_polynomial(&sw).unwrap();
            let rhs = (&l_polynomial(&s2).unwrap() + &l_polynomial(&s3).unwrap()).shift(0, 1);
            assert_eq!(lhs, rhs);
        }
    }
}
