//! Closed recursions for the two-bridge families `p`, `p 2`, `3 p`, `p q`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KnownFamily {
    /// `p`: unknot, Hopf link, trefoil, ... (p >= 1).
    P(u32),
    /// `p 2`: trefoil, figure-eight, 5_2, ... (p >= 1).
    P2(u32),
    /// `3 p` (p >= 3).
    ThreeP(u32),
    /// `p q` (p >= q >= 2).
    PQ(u32, u32),
}

fn a_pow(k: i32) -> LaurentPoly2 {
    LaurentPoly2::monomial(1, k, 0)
}

fn hopf() -> LaurentPoly2 {
    // -(a^-1 + a) z^-1 + 1 + (a^-1 + a) z
    LaurentPoly2::from_terms([(-1, -1, -1), (1, -1, -1), (0, 0, 1), (-1, 1, 1), (1, 1, 1)])
}

fn figure_eight() -> LaurentPoly2 {
    LaurentPoly2::from_terms([
        (-2, 0, -1),
        (0, 0, -1),
        (2, 0, -1),
        (-1, 1, -1),
        (1, 1, -1),
        (-2, 2, 1),
        (0, 2, 2),
        (2, 2, 1),
        (-1, 3, 1),
        (1, 3, 1),
    ])
}

/// Two-term recursion `x_k = z (x_{k-1} + extra(k)) - x_{k-2}` from `x_1`, `x_2`.
fn run(x1: LaurentPoly2, x2: LaurentPoly2, upto: u32, extra: impl Fn(u32) -> LaurentPoly2) -> LaurentPoly2 {
    if upto == 1 {
        return x1;
    }
    let (mut prev, mut cur) = (x1, x2);
    for k in 3..=upto {
        let next = &(&cur + &extra(k)).shift(0, 1) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn family_p(p: u32) -> LaurentPoly2 {
    run(LaurentPoly2::a(), hopf(), p, |k| a_pow(1 - k as i32))
}

fn family_p2(p: u32) -> LaurentPoly2 {
    run(family_p(3), figure_eight(), p, |k| &a_pow(k as i32 - 1) * &family_p(2))
}

// `k q` for k >= 1, with `1 q = q+1` and `2 q` the mirror of `q 2`.
fn family_kq(k: u32, q: u32) -> LaurentPoly2 {
    let lq = family_p(q);
    run(family_p(q + 1), family_p2(q).mirror_substitute(), k, |j| &a_pow(j as i32 - 1) * &lq)
}

pub fn l_family(f: KnownFamily) -> Result<LaurentPoly2> {
    let bad = |s: String| Err(Error::ParameterOutOfRange(s));
    match f {
        KnownFamily::P(p) if p >= 1 => Ok(family_p(p)),
        KnownFamily::P2(p) if p >= 1 => Ok(family_p2(p)),
        KnownFamily::ThreeP(p) if p >= 3 => Ok(family_kq(3, p)),
        KnownFamily::PQ(p, q) if p >= q && q >= 2 => Ok(family_kq(p, q)),
        KnownFamily::P(p) => bad(format!("family p needs p >= 1, got {p}")),
        KnownFamily::P2(p) => bad(format!("family p 2 needs p >= 1, got {p}")),
        KnownFamily::ThreeP(p) => bad(format!("family 3 p needs p >= 3, got {p}")),
        KnownFamily::PQ(p, q) => bad(format!("family p q needs p >= q >= 2, got {p} {q}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_members() {
        assert_eq!(l_family(KnownFamily::P(1)).unwrap(), LaurentPoly2::a());
        let trefoil = LaurentPoly2::from_terms([(-1, 0, -1), (1, 0, -2), (-2, 1, 1), (0, 1, 1), (-1, 2, 1), (1, 2, 1)]);
        assert_eq!(l_family(KnownFamily::P(3)).unwrap(), trefoil);
        assert_eq!(l_family(KnownFamily::P2(1)).unwrap(), trefoil);
        assert_eq!(l_family(KnownFamily::P2(2)).unwrap(), figure_eight());
    }

    #[test]
    fn ranges() {
        assert!(l_family(KnownFamily::P(0)).is_err());
        assert!(l_family(KnownFamily::ThreeP(2)).is_err());
        assert!(l_family(KnownFamily::PQ(2, 3)).is_err());
        assert_eq!(l_family(KnownFamily::PQ(3, 4 - 1)).unwrap(), l_family(KnownFamily::ThreeP(3)).unwrap());
    }
}
