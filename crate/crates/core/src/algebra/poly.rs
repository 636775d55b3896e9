use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Coefficient symbols. The declaration order is the canonical variable order
/// `r < y < a < b` used for printing and for the lexicographic term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    R,
    Y,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::R, Var::Y, Var::A, Var::B];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::R => 'r',
            Var::Y => 'y',
            Var::A => 'a',
            Var::B => 'b',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'r' => Some(Var::R),
            'y' => Some(Var::Y),
            'a' => Some(Var::A),
            'b' => Some(Var::B),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => {
                Var::from_symbol(c).ok_or_else(|| Error::Parse(format!("unknown symbol '{s}'")))
            }
            _ => Err(Error::Parse(format!("unknown symbol '{s}'"))),
        }
    }
}

/// Exponent vector over `(r, y, a, b)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 4])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(x, y)| *x <= y)
    }

    /// `other / self`; caller guarantees divisibility.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (x, y) in e.iter_mut().zip(self.0) {
            *x -= y;
        }
        Monomial(e)
    }

    pub(crate) fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = (*x).min(y);
        }
        Monomial(e)
    }

    fn without(&self, v: Var) -> Monomial {
        let mut e = self.0;
        e[v.index()] = 0;
        Monomial(e)
    }
}

/// Sparse multivariate polynomial over the rationals in the symbols
/// `r, y, a, b`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The symbols that actually occur, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m.degree_in(*v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Largest term in the lexicographic order `r > y > a > b`.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining symbols.
    pub fn coeff_in(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree_in(v) == k)
                .map(|(m, c)| (m.without(v), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let max = self.degree_in(v);
        let mut powers = vec![MultiPoly::one()];
        for i in 1..=max as usize {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let rest = MultiPoly::monomial(m.without(v), c.clone());
            out = out + &rest * &powers[m.degree_in(v) as usize];
        }
        out
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> MultiPoly {
        self.substitute(v, &MultiPoly::constant(value.clone()))
    }

    /// Multivariate division by `den` in lex order. Returns `(q, rem)` with
    /// `self = q*den + rem`; `rem` is zero exactly when `den` divides `self`.
    pub fn div_rem(&self, den: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let (lead_m, lead_c) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let (lead_m, lead_c) = (*lead_m, lead_c.clone());
        let mut quot = MultiPoly::zero();
        let mut rem = MultiPoly::zero();
        let mut work = self.clone();
        while let Some((m, c)) = work.leading_term() {
            let (m, c) = (*m, c.clone());
            if lead_m.divides(&m) {
                let t = MultiPoly::monomial(lead_m.quotient_of(&m), c / &lead_c);
                work = work - &t * den;
                quot = quot + t;
            } else {
                work.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
        Ok((quot, rem))
    }

    /// Exact quotient; an inexact division is an error carrying the remainder.
    pub fn exact_div(&self, den: &MultiPoly) -> Result<MultiPoly> {
        if let Some(c) = den.as_constant() {
            if c.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.scale(&c.recip()));
        }
        let (q, rem) = self.div_rem(den)?;
        if rem.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision {
                remainder: rem.to_string(),
            })
        }
    }

    /// Rational content with the sign of the leading coefficient, so that
    /// `self / content` has coprime integer coefficients and a positive
    /// leading coefficient.
    pub fn content(&self) -> Rational {
        let Some((_, lead)) = self.leading_term() else {
            return Rational::one();
        };
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let content = Rational::new(num, den);
        if lead.is_negative() {
            -content
        } else {
            content
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(t, c)| (m.quotient_of(t), c.clone())).collect(),
        }
    }

    /// Dense coefficient list in `v` if no other symbol occurs.
    pub fn as_univariate(&self, v: Var) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            if m.without(v) != Monomial::one() {
                return None;
            }
            out[m.degree_in(v) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[Rational]) -> MultiPoly {
        MultiPoly::from_terms(coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = [0; 4];
            e[v.index()] = i as u32;
            (Monomial(e), c.clone())
        }))
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() + rhs
    }
}

impl Add<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self + &rhs
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() - rhs
    }
}

impl Sub<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

/// Canonical rendering: terms in descending lex order over `r < y < a < b`,
/// explicit signs, `*` between factors and `^` for exponents.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, "-")?,
                (_, false) => write!(f, "+")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for v in Var::ALL {
                let e = m.degree_in(v);
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the canonical rendering (and small variations of it: spaces, any
/// term order, repeated factors).
impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MultiPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut out = MultiPoly::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in '{s}'")));
            }
            let mut coeff = Rational::one();
            let mut mono = Monomial::one();
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                    ),
                    None => (factor, 1),
                };
                if let Ok(v) = base.parse::<Var>() {
                    mono.0[v.index()] += exp;
                } else {
                    let c = parse_rational(base)?;
                    for _ in 0..exp {
                        coeff *= &c;
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}
