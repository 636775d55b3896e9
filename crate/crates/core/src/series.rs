//! Truncated formal power series with exact coefficients.
//!
//! A series in `x` (ordinary convention) or `t` (exponential convention)
//! stores coefficients `0..=order`; everything above the order is unknown,
//! not zero. Binary operations return a result of order `min` over operands.

use std::fmt;

use crate::algebra::{ExactScalar, MultiPoly, Rational, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    X,
    T,
}

impl SeriesVar {
    pub fn symbol(self) -> char {
        match self {
            SeriesVar::X => 'x',
            SeriesVar::T => 't',
        }
    }
}

impl fmt::Display for SeriesVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    var: SeriesVar,
    coeffs: Vec<ExactScalar>,
}

pub fn series_arith(lhs: &PowerSeries, rhs: &PowerSeries, op: SeriesOp) -> Result<PowerSeries> {
    match op {
        SeriesOp::Add => lhs.add(rhs),
        SeriesOp::Sub => lhs.sub(rhs),
        SeriesOp::Mul => lhs.mul(rhs),
    }
}

impl PowerSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(var: SeriesVar, coeffs: Vec<ExactScalar>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        PowerSeries { var, coeffs }
    }

    pub fn from_ints(var: SeriesVar, coeffs: &[i64]) -> Self {
        PowerSeries::new(var, coeffs.iter().map(|&c| ExactScalar::int(c)).collect())
    }

    pub fn zero(var: SeriesVar, order: usize) -> Self {
        PowerSeries::new(var, vec![ExactScalar::zero(); order + 1])
    }

    pub fn constant(var: SeriesVar, c: ExactScalar, order: usize) -> Self {
        let mut s = PowerSeries::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(var: SeriesVar, order: usize) -> Self {
        PowerSeries::constant(var, ExactScalar::one(), order)
    }

    /// The series variable itself, `x` or `t`.
    pub fn identity(var: SeriesVar, order: usize) -> Self {
        let mut s = PowerSeries::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = ExactScalar::one();
        }
        s
    }

    /// `c0 + c1*v + ... ` from a polynomial coefficient list, padded with
    /// known zeros up to `order`.
    pub fn polynomial(var: SeriesVar, coeffs: Vec<ExactScalar>, order: usize) -> Self {
        let mut s = PowerSeries::zero(var, order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&ExactScalar> {
        self.coeffs.get(n)
    }

    pub fn constant_term(&self) -> &ExactScalar {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let order = order.min(self.order());
        PowerSeries::new(self.var, self.coeffs[..=order].to_vec())
    }

    pub(crate) fn relabel(self, var: SeriesVar) -> PowerSeries {
        PowerSeries { var, coeffs: self.coeffs }
    }

    fn check_var(&self, rhs: &PowerSeries) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::VariableMismatch {
                left: self.var,
                right: rhs.var,
            });
        }
        Ok(())
    }

    pub fn map_coeffs<F>(&self, mut f: F) -> Result<PowerSeries>
    where
        F: FnMut(usize, &ExactScalar) -> Result<ExactScalar>,
    {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| f(i, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries::new(self.var, coeffs))
    }

    pub fn add(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        self.check_var(rhs)?;
        let n = self.order().min(rhs.order());
        Ok(PowerSeries::new(
            self.var,
            (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        ))
    }

    pub fn sub(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        self.check_var(rhs)?;
        let n = self.order().min(rhs.order());
        Ok(PowerSeries::new(
            self.var,
            (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        ))
    }

    pub fn mul(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        self.check_var(rhs)?;
        let n = self.order().min(rhs.order());
        let mut out = vec![ExactScalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(PowerSeries::new(self.var, out))
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &ExactScalar) -> PowerSeries {
        PowerSeries::new(self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `d`, requiring each division to be exact.
    pub fn exact_div_scalar(&self, d: &ExactScalar) -> Result<PowerSeries> {
        self.map_coeffs(|_, c| c.exact_div(d))
    }

    pub fn pow(&self, e: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.var, self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variable");
        }
        acc
    }

    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NonInvertibleConstant(c0.to_string()));
        }
        let inv0 = c0.recip()?;
        let n = self.order();
        let mut out: Vec<ExactScalar> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = ExactScalar::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + &self.coeffs[k] * &out[m - k];
            }
            out.push(-(&acc * &inv0));
        }
        Ok(PowerSeries::new(self.var, out))
    }

    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        self.mul(&rhs.reciprocal()?)
    }

    /// `outer(inner)`; `inner` must vanish at 0.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        self.check_var(inner)?;
        if !inner.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(inner.constant_term().to_string()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = PowerSeries::constant(self.var, self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] = &acc.coeffs[0] + &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `f(g(x)) = x`.
    pub fn reversion(&self) -> Result<PowerSeries> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotReversible);
        }
        let inv1 = self.coeffs[1].recip()?;
        let mut g = PowerSeries::zero(self.var, n);
        for m in 1..=n {
            let partial = self.compose(&g)?;
            let target = if m == 1 { ExactScalar::one() } else { ExactScalar::zero() };
            g.coeffs[m] = &(&target - &partial.coeffs[m]) * &inv1;
        }
        Ok(g)
    }

    pub fn derivative(&self) -> PowerSeries {
        let n = self.order();
        if n == 0 {
            return PowerSeries::zero(self.var, 0);
        }
        PowerSeries::new(
            self.var,
            (1..=n).map(|k| self.coeffs[k].scale(&Rational::from_integer(k.into()))).collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> PowerSeries {
        let mut out = vec![ExactScalar::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.scale(&Rational::new(1.into(), (k + 1).into())));
        }
        PowerSeries::new(self.var, out)
    }

    /// Logarithm of a series with constant term 1, from `L' = s'/s`.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstant(self.constant_term().to_string()));
        }
        let n = self.order();
        let mut out = vec![ExactScalar::zero(); n + 1];
        for m in 1..=n {
            let mut acc = ExactScalar::zero();
            for k in 1..m {
                if out[k].is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                acc = acc + (&out[k] * &self.coeffs[m - k]).scale(&Rational::from_integer(k.into()));
            }
            out[m] = &self.coeffs[m] - &acc.scale(&Rational::new(1.into(), m.into()));
        }
        Ok(PowerSeries::new(self.var, out))
    }

    /// Exponential of a series with constant term 0, from `E' = s' E`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(self.constant_term().to_string()));
        }
        let n = self.order();
        let mut out = vec![ExactScalar::one()];
        for m in 1..=n {
            let mut acc = ExactScalar::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + (&self.coeffs[k] * &out[m - k]).scale(&Rational::from_integer(k.into()));
            }
            out.push(acc.scale(&Rational::new(1.into(), m.into())));
        }
        Ok(PowerSeries::new(self.var, out))
    }

    /// `c(u)` for the Catalan generating function, solved as the fixed point
    /// of `C = 1 + u C^2`.
    pub fn catalan_compose(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(self.constant_term().to_string()));
        }
        let one = PowerSeries::one(self.var, self.order());
        let mut c = one.clone();
        for _ in 0..=self.order() {
            c = one.add(&self.mul(&c.mul(&c)?)?)?;
        }
        Ok(c)
    }

    /// `s(x)/x` for a series vanishing at 0; the order drops by one.
    pub fn shift_down(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(self.constant_term().to_string()));
        }
        if self.order() == 0 {
            return Err(Error::Precondition("cannot divide an order-0 series by its variable".into()));
        }
        Ok(PowerSeries::new(self.var, self.coeffs[1..].to_vec()))
    }

    /// `x * s(x)`; the order grows by one.
    pub fn shift_up(&self) -> PowerSeries {
        let mut coeffs = vec![ExactScalar::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries::new(self.var, coeffs)
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<PowerSeries> {
        self.map_coeffs(|_, c| c.substitute(v, value))
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Result<PowerSeries> {
        self.map_coeffs(|_, c| c.substitute_rational(v, value))
    }

    /// True when both series agree on every coefficient up to `order`.
    pub fn agrees_to(&self, other: &PowerSeries, order: usize) -> bool {
        self.var == other.var
            && self.order() >= order
            && other.order() >= order
            && (0..=order).all(|i| self.coeffs[i] == other.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactScalar::is_zero)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            let needs_parens = !matches!(c, ExactScalar::Rat(_));
            match (i, needs_parens) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "({c})*{}^{i}", self.var)?,
                (_, false) => write!(f, "{c}*{}^{i}", self.var)?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

/// `1 + c v + c^2 v^2/2! + ...`, built with the exponential recurrence.
pub fn exp_linear(var: SeriesVar, c: ExactScalar, order: usize) -> PowerSeries {
    let mut inner = PowerSeries::zero(var, order);
    if order >= 1 {
        inner.coeffs[1] = c;
    }
    inner.exp().expect("linear series vanishes at 0")
}

/// `1/(1 - v)` truncated at `order`.
pub fn geometric(var: SeriesVar, order: usize) -> PowerSeries {
    PowerSeries::new(var, vec![ExactScalar::one(); order + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(order: usize) -> PowerSeries {
        PowerSeries::identity(SeriesVar::X, order)
    }

    fn ints(v: &[i64]) -> PowerSeries {
        PowerSeries::from_ints(SeriesVar::X, v)
    }

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    #[test]
    fn product_of_binomials() {
        let p = ints(&[1, 1, 0, 0]).mul(&ints(&[1, -1, 0, 0])).unwrap();
        assert_eq!(p, ints(&[1, 0, -1, 0]));
    }

    #[test]
    fn additive_identity_and_order() {
        let a = ints(&[1, 2, 3, 4]);
        assert_eq!(a.add(&PowerSeries::zero(SeriesVar::X, 3)).unwrap(), a);
        assert_eq!(a.add(&ints(&[0, 0])).unwrap().order(), 1);
    }

    #[test]
    fn difference_of_exponentials() {
        let r = ExactScalar::var(Var::R);
        let lhs = exp_linear(SeriesVar::T, r.clone(), 2);
        let rhs = exp_linear(SeriesVar::T, ExactScalar::one(), 2).scale(&r);
        let d = lhs.sub(&rhs).unwrap();
        assert_eq!(d.coeffs(), &[s("1-r"), s("0"), s("1/2*r^2-1/2*r")]);
    }

    #[test]
    fn variable_mismatch() {
        let a = PowerSeries::one(SeriesVar::X, 2);
        let b = PowerSeries::one(SeriesVar::T, 2);
        assert!(matches!(a.mul(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn geometric_reciprocal() {
        let r = ints(&[1, -1, 0, 0, 0]).reciprocal().unwrap();
        assert_eq!(r, geometric(SeriesVar::X, 4));
        assert!(matches!(x(3).reciprocal(), Err(Error::NonInvertibleConstant(_))));
    }

    #[test]
    fn reciprocal_with_polynomial_constant_term() {
        // (1-r)/(e^{rt} - r e^t) times its reciprocal
        let order = 8;
        let r = ExactScalar::var(Var::R);
        let den = exp_linear(SeriesVar::T, r.clone(), order)
            .sub(&exp_linear(SeriesVar::T, ExactScalar::one(), order).scale(&r))
            .unwrap();
        let e1 = den.reciprocal().unwrap().scale(&s("1-r"));
        let back = e1.mul(&e1.reciprocal().unwrap()).unwrap();
        assert_eq!(back, PowerSeries::one(SeriesVar::T, order));
        assert!(e1.coeffs().iter().all(|c| c.as_poly().is_some()));
    }

    #[test]
    fn composition_examples() {
        let geo = geometric(SeriesVar::X, 6);
        let x2 = x(6).pow(2);
        assert_eq!(geo.compose(&x2).unwrap(), ints(&[1, 0, 1, 0, 1, 0, 1]));

        // c(2x(1-x)) gives 1,2,6,24,112,568
        let cat = x(5).catalan_compose().unwrap();
        let inner = ints(&[0, 2, -2, 0, 0, 0]);
        assert_eq!(cat.compose(&inner).unwrap(), ints(&[1, 2, 6, 24, 112, 568]));

        let s0 = ints(&[7, 3, 2]);
        assert_eq!(s0.compose(&PowerSeries::zero(SeriesVar::X, 2)).unwrap(), ints(&[7, 0, 0]));
        assert!(matches!(s0.compose(&ints(&[1, 1, 0])), Err(Error::NonZeroConstant(_))));
    }

    #[test]
    fn reversion_examples() {
        // x/(x-1) = -x - x^2 - ... is an involution
        let f = ints(&[0, -1, -1, -1, -1, -1, -1]);
        assert_eq!(f.reversion().unwrap(), f);
        assert_eq!(ints(&[0, 1, -1, 0, 0, 0]).reversion().unwrap(), ints(&[0, 1, 1, 2, 5, 14]));
        assert_eq!(x(4).reversion().unwrap(), x(4));
        assert_eq!(ints(&[1, 1, 0]).reversion(), Err(Error::NotReversible));
        assert_eq!(ints(&[0, 0, 1]).reversion(), Err(Error::NotReversible));
    }

    #[test]
    fn log_and_exp_examples() {
        let l = geometric(SeriesVar::X, 4).log().unwrap();
        let expect: Vec<ExactScalar> = ["0", "1", "1/2", "1/3", "1/4"].iter().map(|c| s(c)).collect();
        assert_eq!(l.coeffs(), &expect[..]);

        let e = exp_linear(SeriesVar::T, s("y-1"), 2);
        assert_eq!(e.coeffs(), &[s("1"), s("y-1"), s("1/2*y^2-y+1/2")]);

        assert!(matches!(ints(&[2, 1]).log(), Err(Error::LogConstant(_))));
        assert!(matches!(ints(&[1, 1]).exp(), Err(Error::NonZeroConstant(_))));
    }

    #[test]
    fn log_ratio_divides_by_one_minus_y() {
        // (1/(1-y)) ln((1+2t)/(1+t(y+1)))
        let order = 6;
        let num = PowerSeries::polynomial(SeriesVar::T, vec![s("1"), s("2")], order);
        let den = PowerSeries::polynomial(SeriesVar::T, vec![s("1"), s("y+1")], order);
        let l = num.div(&den).unwrap().log().unwrap();
        assert_eq!(l.coeffs()[1], s("1-y"));
        let q = l.exact_div_scalar(&s("1-y")).unwrap();
        assert_eq!(q.coeffs()[1], s("1"));
        assert!(q.coeffs().iter().all(|c| c.as_poly().is_some()));
    }

    #[test]
    fn catalan_examples() {
        let c = x(6).catalan_compose().unwrap();
        assert_eq!(c, ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(PowerSeries::zero(SeriesVar::X, 0).catalan_compose().unwrap(), ints(&[1]));
        assert!(ints(&[1, 0]).catalan_compose().is_err());
    }

    #[test]
    fn derivative_and_integral() {
        let a = ints(&[5, 1, 2, 3]);
        assert_eq!(a.derivative(), ints(&[1, 4, 9]));
        let back = a.derivative().integral();
        assert_eq!(back.coeffs()[1..], a.coeffs()[1..]);
        assert_eq!(ints(&[0, 2]).shift_down().unwrap(), ints(&[2]));
        assert_eq!(ints(&[3]).shift_up(), ints(&[0, 3]));
    }

    #[test]
    fn substitution_in_coefficients() {
        let e = exp_linear(SeriesVar::T, s("r"), 3);
        let e2 = e.substitute_rational(Var::R, &rat(2)).unwrap();
        assert_eq!(e2, exp_linear(SeriesVar::T, ExactScalar::int(2), 3));
    }
}
