use std::fmt;

use num_traits::{One, Zero};

use super::poly::{MultiPoly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Quotient of two polynomials with a nonzero denominator.
///
/// No multivariate gcd is computed. Normalisation divides out exact
/// polynomial quotients, common monomial factors and rational content, and
/// performs a full gcd reduction only when at most one symbol occurs.
/// Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some_and(|c| c.is_one())
    }

    fn normalized(mut num: MultiPoly, mut den: MultiPoly) -> Self {
        if num.is_zero() {
            return RationalFunction::from_poly(MultiPoly::zero());
        }
        if let Ok(q) = num.exact_div(&den) {
            return RationalFunction::from_poly(q);
        }
        if let Ok(q) = den.exact_div(&num) {
            num = MultiPoly::one();
            den = q;
        }
        let common = num.monomial_content().gcd(&den.monomial_content());
        if !common.is_one() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        let mut vars = num.variables();
        for v in den.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        if vars.len() == 1 {
            let v = vars[0];
            let g = univariate_gcd(
                &num.as_univariate(v).expect("single symbol"),
                &den.as_univariate(v).expect("single symbol"),
            );
            if g.len() > 1 {
                let g = MultiPoly::from_univariate(v, &g);
                num = num.exact_div(&g).expect("gcd divides numerator");
                den = den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let c = den.content();
        if !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Self::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<Self> {
        RationalFunction::new(self.num.substitute(v, value), self.den.substitute(v, value))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Monic gcd of two dense univariate polynomials over the rationals.
fn univariate_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = univariate_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

fn univariate_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn univariate_reduction() {
        let q = rf("r^2-1", "r^2-2*r+1");
        assert_eq!(q.numer(), &p("r+1"));
        assert_eq!(q.denom(), &p("r-1"));
    }

    #[test]
    fn exact_quotient_demotes() {
        let q = rf("a^2-b^2", "a-b");
        assert!(q.is_polynomial());
        assert_eq!(q.numer(), &p("a+b"));
    }

    #[test]
    fn cross_multiplication_equality() {
        // (a*b + a) / (a*b^2 + a*b) == 1/b without a multivariate gcd
        let q = rf("a*b*y+a*y", "a*b^2*y+a*b*y");
        assert_eq!(q, rf("1", "b"));
        assert_ne!(q, rf("1", "a"));
    }

    #[test]
    fn arithmetic_consistency() {
        let x = rf("1", "r-a");
        let y = rf("r", "a+b");
        let sum = x.add(&y);
        let back = sum.sub(&y);
        assert_eq!(back, x);
        assert_eq!(x.mul(&y).div(&y).unwrap(), x);
        assert_eq!(x.div(&RationalFunction::from_poly(MultiPoly::zero())), Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p("r"), MultiPoly::zero()).is_err());
    }
}
