//! Exact integer Laurent polynomials in `a`, and in `a` and `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// `-a^2 - a^-2`, the value of an extra circle.
    pub fn loop_value() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Multiply by `a^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// Substitute `a -> a^-1`.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Substitute `a -> a^k`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}*a^{e}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

fn parse_int<T: FromStr>(s: &str, whole: &str) -> Result<T, Error> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad polynomial term in {whole:?}")))
}

// Splits on '+' signs that separate terms (not those after '^').
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 0..bytes.len() {
        if bytes[i] == b'+' && i > 0 && bytes[i - 1] != b'^' {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in split_terms(&s) {
            let (c, e) = term.split_once("*a^").ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
            p.add_term(parse_int(e, &s)?, parse_int(c, &s)?);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Polynomial in `a` and `z`, both exponents possibly negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    // Keyed (z, a) so iteration follows the text order.
    terms: BTreeMap<(i32, i32), i64>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    a: i32,
    z: i32,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, a: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, z, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i32, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (a, z, c) in it {
            p.add_term(a, z, c);
        }
        p
    }

    /// `a`
    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `(a + a^-1) z^-1 - 1`
    pub fn delta() -> Self {
        Self::from_terms([(1, -1, 1), (-1, -1, 1), (0, 0, -1)])
    }

    pub fn add_term(&mut self, a: i32, z: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((z, a)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&(z, a));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, z: i32) -> i64 {
        self.terms.get(&(z, a)).copied().unwrap_or(0)
    }

    /// Terms as `(a, z, coeff)` in text order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(z, a), &c)| (a, z, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Multiply by `a^i z^j`.
    pub fn shift(&self, a: i32, z: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(zz, aa), &c)| ((zz + z, aa + a), c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(a, z, c)| (a, z, c * k)))
    }

    /// Substitute `a -> a^-1`.
    pub fn mirror_substitute(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(z, a), &c)| ((z, -a), c)).collect() }
    }

    pub fn min_z(&self) -> Option<i32> {
        self.terms.keys().next().map(|k| k.0)
    }

    /// Value at `a = -A^3`, `z = A + A^-1`, after multiplying by `z^shift`.
    /// `shift` must clear every negative power of `z`.
    pub fn bracket_specialization(&self, shift: i32) -> LaurentPoly {
        let zpoly = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        let mut out = LaurentPoly::zero();
        for (a, z, c) in self.terms() {
            let zp = z + shift;
            assert!(zp >= 0, "shift too small");
            let sign = if a.rem_euclid(2) == 1 { -1 } else { 1 };
            let term = LaurentPoly::monomial(c * sign, 3 * a);
            out += &(&term * &zpoly.pow(zp as u32));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let jp = JsonPoly { terms: self.terms().map(|(a, z, c)| JsonTerm { a, z, c }).collect() };
        serde_json::to_value(jp).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let jp: JsonPoly = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self::from_terms(jp.terms.into_iter().map(|t| (t.a, t.z, t.c))))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(a, z, c)| format!("{c}*a^{a}*z^{z}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in split_terms(&s) {
            let bad = || Error::Parse(format!("bad term {term:?}"));
            let (c, rest) = term.split_once("*a^").ok_or_else(bad)?;
            let (a, z) = rest.split_once("*z^").ok_or_else(bad)?;
            p.add_term(parse_int(a, &s)?, parse_int(z, &s)?, parse_int(c, &s)?);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(z, a), &c) in &rhs.terms {
            self.add_term(a, z, c);
        }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(z1, a1), &c1) in &self.terms {
            for (&(z2, a2), &c2) in &rhs.terms {
                out.add_term(a1 + a2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
