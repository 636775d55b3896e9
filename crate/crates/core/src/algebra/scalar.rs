use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{MultiPoly, Var};
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient value: a rational, a polynomial in `r, y, a, b`, or a ratio of
/// two such polynomials.
///
/// Values are demoted after every operation, so a `Poly` is never constant
/// and a `Frac` never has a constant denominator.
#[derive(Clone, Debug)]
pub enum ExactScalar {
    Rat(Rational),
    Poly(MultiPoly),
    Frac(RationalFunction),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(lhs: &ExactScalar, rhs: &ExactScalar, op: ArithOp) -> Result<ExactScalar> {
    Ok(match op {
        ArithOp::Add => lhs + rhs,
        ArithOp::Sub => lhs - rhs,
        ArithOp::Mul => lhs * rhs,
        ArithOp::Div => lhs.checked_div(rhs)?,
    })
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        ExactScalar::Rat(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        ExactScalar::Poly(MultiPoly::var(v))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        match p.as_constant() {
            Some(c) => ExactScalar::Rat(c),
            None => ExactScalar::Poly(p),
        }
    }

    pub fn from_frac(f: RationalFunction) -> Self {
        if let Some(d) = f.denom().as_constant() {
            let (num, _) = f.into_parts();
            return ExactScalar::from_poly(num.scale(&d.recip()));
        }
        ExactScalar::Frac(f)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rat(c) => c.is_zero(),
            ExactScalar::Poly(p) => p.is_zero(),
            ExactScalar::Frac(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ExactScalar::Rat(c) if c.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Rat(c) => Some(c),
            _ => None,
        }
    }

    /// Integer value, if this is an integral rational.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    /// Polynomial view, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        match self {
            ExactScalar::Rat(c) => Some(MultiPoly::constant(c.clone())),
            ExactScalar::Poly(p) => Some(p.clone()),
            ExactScalar::Frac(_) => None,
        }
    }

    pub fn to_frac(&self) -> RationalFunction {
        match self {
            ExactScalar::Frac(f) => f.clone(),
            other => RationalFunction::from_poly(other.as_poly().expect("polynomial layer")),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        match self {
            ExactScalar::Rat(_) => Vec::new(),
            ExactScalar::Poly(p) => p.variables(),
            ExactScalar::Frac(f) => {
                let mut vars = f.numer().variables();
                vars.extend(f.denom().variables());
                vars.sort();
                vars.dedup();
                vars
            }
        }
    }

    pub fn pow(&self, e: u32) -> ExactScalar {
        match self {
            ExactScalar::Rat(c) => ExactScalar::Rat(num_traits::pow(c.clone(), e as usize)),
            ExactScalar::Poly(p) => ExactScalar::from_poly(p.pow(e)),
            ExactScalar::Frac(f) => {
                let mut acc = RationalFunction::from_poly(MultiPoly::one());
                for _ in 0..e {
                    acc = acc.mul(f);
                }
                ExactScalar::from_frac(acc)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> ExactScalar {
        self * &ExactScalar::Rat(c.clone())
    }

    pub fn checked_div(&self, rhs: &ExactScalar) -> Result<ExactScalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, rhs) {
            (ExactScalar::Rat(a), ExactScalar::Rat(b)) => ExactScalar::Rat(a / b),
            (ExactScalar::Poly(a), ExactScalar::Rat(b)) => ExactScalar::from_poly(a.scale(&b.recip())),
            (ExactScalar::Frac(a), ExactScalar::Rat(b)) => ExactScalar::from_frac(
                a.mul(&RationalFunction::from_poly(MultiPoly::constant(b.recip()))),
            ),
            (lhs, ExactScalar::Poly(d)) if !matches!(lhs, ExactScalar::Frac(_)) => {
                let n = lhs.as_poly().expect("polynomial layer");
                match n.exact_div(d) {
                    Ok(q) => ExactScalar::from_poly(q),
                    Err(_) => ExactScalar::from_frac(RationalFunction::new(n, d.clone())?),
                }
            }
            (lhs, rhs) => ExactScalar::from_frac(lhs.to_frac().div(&rhs.to_frac())?),
        })
    }

    pub fn recip(&self) -> Result<ExactScalar> {
        ExactScalar::one().checked_div(self)
    }

    /// Exact polynomial quotient; fails if the division leaves a remainder.
    pub fn exact_div(&self, rhs: &ExactScalar) -> Result<ExactScalar> {
        match (self.as_poly(), rhs.as_poly()) {
            (Some(n), Some(d)) => Ok(ExactScalar::from_poly(n.exact_div(&d)?)),
            _ => {
                let q = self.checked_div(rhs)?;
                if matches!(q, ExactScalar::Frac(_)) {
                    Err(Error::InexactDivision {
                        remainder: q.to_string(),
                    })
                } else {
                    Ok(q)
                }
            }
        }
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<ExactScalar> {
        Ok(match self {
            ExactScalar::Rat(_) => self.clone(),
            ExactScalar::Poly(p) => ExactScalar::from_poly(p.substitute(v, value)),
            ExactScalar::Frac(f) => ExactScalar::from_frac(f.substitute(v, value)?),
        })
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Result<ExactScalar> {
        self.substitute(v, &MultiPoly::constant(value.clone()))
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.as_poly().map(|p| p.degree_in(v))
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::int(n)
    }
}

impl From<Rational> for ExactScalar {
    fn from(c: Rational) -> Self {
        ExactScalar::Rat(c)
    }
}

impl From<MultiPoly> for ExactScalar {
    fn from(p: MultiPoly) -> Self {
        ExactScalar::from_poly(p)
    }
}

impl From<Var> for ExactScalar {
    fn from(v: Var) -> Self {
        ExactScalar::var(v)
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactScalar::Rat(a), ExactScalar::Rat(b)) => a == b,
            (ExactScalar::Frac(_), _) | (_, ExactScalar::Frac(_)) => self.to_frac() == other.to_frac(),
            _ => self.as_poly() == other.as_poly(),
        }
    }
}

impl Eq for ExactScalar {}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rat(c) => write!(f, "{c}"),
            ExactScalar::Poly(p) => write!(f, "{p}"),
            ExactScalar::Frac(q) => write!(f, "{q}"),
        }
    }
}

/// Accepts the canonical rendering of any layer: a polynomial string or
/// `(num)/(den)`.
impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExactScalar> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('(') {
            if let Some((num, den)) = body.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in '{s}'")))?;
                let f = RationalFunction::new(num.parse()?, den.parse()?)?;
                return Ok(ExactScalar::from_frac(f));
            }
        }
        Ok(ExactScalar::from_poly(s.parse()?))
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rat(c) => ExactScalar::Rat(-c.clone()),
            ExactScalar::Poly(p) => ExactScalar::Poly(-p),
            ExactScalar::Frac(f) => ExactScalar::Frac(f.neg()),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (ExactScalar::Rat(a), ExactScalar::Rat(b)) => ExactScalar::Rat(a + b),
            (ExactScalar::Frac(_), _) | (_, ExactScalar::Frac(_)) => {
                ExactScalar::from_frac(self.to_frac().add(&rhs.to_frac()))
            }
            _ => ExactScalar::from_poly(self.as_poly().unwrap() + rhs.as_poly().unwrap()),
        }
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (ExactScalar::Rat(a), ExactScalar::Rat(b)) => ExactScalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (ExactScalar::Rat(a), ExactScalar::Rat(b)) => ExactScalar::Rat(a * b),
            (ExactScalar::Rat(a), ExactScalar::Poly(p)) | (ExactScalar::Poly(p), ExactScalar::Rat(a)) => {
                ExactScalar::from_poly(p.scale(a))
            }
            (ExactScalar::Poly(p), ExactScalar::Poly(q)) => ExactScalar::from_poly(p * q),
            _ => ExactScalar::from_frac(self.to_frac().mul(&rhs.to_frac())),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
