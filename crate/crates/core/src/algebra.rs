//! The order-4 semigroup on edge labels and its extension to whole codes.

use crate::codes::{FourCode, StateCode};
use crate::error::{Error, Result};
use crate::grid::{edge_count, EdgeLabel, GridCode};

use EdgeLabel::{Mir, Neg, Perp, Pos};

/// Labels in table order: 2, -2, 1, -1.
pub const ELEMENTS: [EdgeLabel; 4] = [Mir, Perp, Pos, Neg];

// Read 2 as a, -2 as b, 1 as ab and -1 as ba; concatenate and keep the
// first and last letters.
fn letters(x: EdgeLabel) -> (u8, u8) {
    match x {
        Mir => (b'a', b'a'),
        Perp => (b'b', b'b'),
        Pos => (b'a', b'b'),
        Neg => (b'b', b'a'),
        EdgeLabel::Virt => unreachable!("checked by callers"),
    }
}

fn from_letters(first: u8, last: u8) -> EdgeLabel {
    match (first, last) {
        (b'a', b'a') => Mir,
        (b'b', b'b') => Perp,
        (b'a', b'b') => Pos,
        _ => Neg,
    }
}

/// Product of two labels.
pub fn mul(x: EdgeLabel, y: EdgeLabel) -> Result<EdgeLabel> {
    if x == EdgeLabel::Virt || y == EdgeLabel::Virt {
        return Err(Error::VirtualUnsupported);
    }
    Ok(from_letters(letters(x).0, letters(y).1))
}

/// The full Cayley table, rows indexed by the left operand in `ELEMENTS` order.
pub fn cayley_table() -> [[EdgeLabel; 4]; 4] {
    let mut t = [[Mir; 4]; 4];
    for (i, &x) in ELEMENTS.iter().enumerate() {
        for (j, &y) in ELEMENTS.iter().enumerate() {
            t[i][j] = mul(x, y).expect("classical labels");
        }
    }
    t
}

/// Position-wise product.
pub fn product(m1: &GridCode, m2: &GridCode) -> Result<GridCode> {
    if (m1.p(), m1.q()) != (m2.p(), m2.q()) {
        return Err(Error::DimensionMismatch(m1.p(), m1.q(), m2.p(), m2.q()));
    }
    let labels = m1.labels().iter().zip(m2.labels()).map(|(&x, &y)| mul(x, y)).collect::<Result<Vec<_>>>()?;
    GridCode::new(m1.p(), m1.q(), labels)
}

/// The two Kauffman states whose product is `code`.
pub fn decompose(code: &GridCode) -> Result<(StateCode, StateCode)> {
    code.ensure_classical()?;
    let v = code.edge_count();
    if v > 63 {
        return Err(Error::Range(format!("{v} edges do not fit a state code")));
    }
    let (mut m, mut n) = (0u64, 0u64);
    for &l in code.labels() {
        let (x, y) = letters(l);
        m = (m << 1) | (x == b'b') as u64;
        n = (n << 1) | (y == b'b') as u64;
    }
    Ok((StateCode { p: code.p(), q: code.q(), m }, StateCode { p: code.p(), q: code.q(), m: n }))
}

/// Every crossing switched; mirrors fixed.
pub fn mirror_image(code: &GridCode) -> GridCode {
    GridCode::new(code.p(), code.q(), code.labels().iter().map(|l| l.switched()).collect()).expect("same shape")
}

/// Write an alternating code as a product with the all-2 or all-(-2) state.
pub fn canonical_representation(code: &GridCode) -> Result<crate::codes::FourCode> {
    code.ensure_classical()?;
    if !code.is_alternating_code() {
        return Err(Error::NotAlternating(format!("{} has crossings of both signs", code)));
    }
    let v = edge_count(code.p(), code.q());
    if v > 63 {
        return Err(Error::Range(format!("{v} edges do not fit a state code")));
    }
    let full = (1u64 << v) - 1;
    let (p, q) = (code.p(), code.q());
    let negative = code.labels().contains(&Neg);
    // Each form fixes one factor; the other is read off label by label.
    // `zero` and `one` are the labels produced by a free bit 0 and 1.
    let forms: [(bool, u64, EdgeLabel, EdgeLabel); 2] = if negative {
        [(false, full, Neg, Perp), (true, 0, Mir, Neg)]
    } else {
        [(true, full, Pos, Perp), (false, 0, Mir, Pos)]
    };
    let mut obstruct = Vec::new();
    for (free_left, fixed, zero, one) in forms {
        let mut bits = 0u64;
        let mut bad = Vec::new();
        for (e, &l) in code.labels().iter().enumerate() {
            bits <<= 1;
            if l == one {
                bits |= 1;
            } else if l != zero {
                bad.push(e);
            }
        }
        if bad.is_empty() {
            let four =
                if free_left { FourCode { p, q, m: bits, n: fixed } } else { FourCode { p, q, m: fixed, n: bits } };
            return Ok(four);
        }
        obstruct.extend(bad);
    }
    obstruct.sort();
    obstruct.dedup();
    Err(Error::NotRepresentable(obstruct))
}

/// All crossing-free codes of RG[p,q].
pub fn basis(p: usize, q: usize) -> Result<Vec<GridCode>> {
    let v = edge_count(p, q);
    if v > 24 {
        return Err(Error::TooLarge(format!("2^{v} basis elements")));
    }
    (0..1u64 << v).map(|m| crate::codes::decode_state(StateCode { p, q, m })).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{decode_four, parse_matrix, serialize_matrix};

    #[test]
    fn table_matches_rules() {
        let v = |x: i64| EdgeLabel::from_value(x).unwrap();
        let rules = [
            (2, 2, 2),
            (2, -2, 1),
            (2, 1, 1),
            (2, -1, 2),
            (-2, 2, -1),
            (-2, -2, -2),
            (-2, 1, -2),
            (-2, -1, -1),
            (1, 2, 2),
            (1, -2, 1),
            (1, 1, 1),
            (1, -1, 2),
            (-1, 2, -1),
            (-1, -2, -2),
            (-1, 1, -2),
            (-1, -1, -1),
        ];
        for (x, y, z) in rules {
            assert_eq!(mul(v(x), v(y)).unwrap(), v(z), "{x}*{y}");
        }
    }

    #[test]
    fn associative_and_idempotent() {
        for x in ELEMENTS {
            assert_eq!(mul(x, x).unwrap(), x);
            for y in ELEMENTS {
                for z in ELEMENTS {
                    let l = mul(mul(x, y).unwrap(), z).unwrap();
                    let r = mul(x, mul(y, z).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn figure_product() {
        let m1 = parse_matrix("{{-2,-2,1,1},{1,2},{-1,1},{-1,-2}}").unwrap();
        let m2 = parse_matrix("{{-2,-2,1,1},{-1,-2},{1,-1},{2,-1}}").unwrap();
        let pr = product(&m1, &m2).unwrap();
        assert_eq!(serialize_matrix(&pr), "RG[4,2]{{-2,-2,1,1},{2,1},{-2,2},{-1,-1}}");
    }

    #[test]
    fn decompose_trefoil() {
        let t = parse_matrix("{{1,1},{1,-2}}").unwrap();
        let (a, b) = decompose(&t).unwrap();
        assert_eq!((a.m, b.m), (1, 15));
        assert_eq!(decode_four(FourCode { p: 2, q: 2, m: a.m, n: b.m }).unwrap(), t);
    }

    #[test]
    fn canonical_forms() {
        let h = parse_matrix("{{1,-2},{1,-2}}").unwrap();
        assert_eq!(canonical_representation(&h).unwrap(), FourCode { p: 2, q: 2, m: 5, n: 15 });
        let all = parse_matrix("{{1,1},{1,1}}").unwrap();
        assert_eq!(canonical_representation(&all).unwrap(), FourCode { p: 2, q: 2, m: 0, n: 15 });
        let neg = parse_matrix("{{-1,2},{-1,-1}}").unwrap();
        let f = canonical_representation(&neg).unwrap();
        assert_eq!(decode_four(f).unwrap(), neg);
        let mixed = parse_matrix("{{1,2},{-2,1}}").unwrap();
        assert!(matches!(canonical_representation(&mixed), Err(Error::NotRepresentable(_))));
        let nalt = parse_matrix("{{1,-1},{1,1}}").unwrap();
        assert!(matches!(canonical_representation(&nalt), Err(Error::NotAlternating(_))));
    }

    #[test]
    fn mirror_is_reversed_product() {
        let t = parse_matrix("{{1,1},{-1,-2}}").unwrap();
        let (a, b) = decompose(&t).unwrap();
        let rev = product(&b.decode().unwrap(), &a.decode().unwrap()).unwrap();
        assert_eq!(rev, mirror_image(&t));
        assert_eq!(mirror_image(&mirror_image(&t)), t);
    }
}
