//! Jacobi and Stieltjes continued fractions.
//!
//! `J(b; lambda)` denotes `1/(1 - b0 x - lambda1 x^2/(1 - b1 x - lambda2 x^2/...))`
//! and `S(c)` denotes `1/(1 - c0 x/(1 - c1 x/...))`. All series are in `x`.

use crate::algebra::{rat, ExactScalar, Var};
use crate::error::{Error, Result};
use crate::series::{PowerSeries, SeriesVar};
use crate::triangle::{triangle_from_gf, Triangle};

/// `b` holds `b0, b1, ...`; `lambda` holds `lambda1, lambda2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JFractionData {
    pub b: Vec<ExactScalar>,
    pub lambda: Vec<ExactScalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SFractionData {
    pub c: Vec<ExactScalar>,
}

/// `b_n = b0 + n d`, `lambda_n = n^2 mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPattern {
    pub b0: ExactScalar,
    pub d: ExactScalar,
    pub mu: ExactScalar,
}

impl JFractionData {
    pub fn new(b: Vec<ExactScalar>, lambda: Vec<ExactScalar>) -> Self {
        JFractionData { b, lambda }
    }

    pub fn from_fn<B, L>(levels: usize, mut b: B, mut lambda: L) -> Self
    where
        B: FnMut(usize) -> ExactScalar,
        L: FnMut(usize) -> ExactScalar,
    {
        JFractionData {
            b: (0..levels).map(&mut b).collect(),
            lambda: (1..levels).map(&mut lambda).collect(),
        }
    }

    /// Highest power of `x` whose coefficient the data pins down.
    pub fn determined_order(&self) -> usize {
        (2 * self.b.len()).min(2 * self.lambda.len() + 1)
    }

    pub fn substitute_rational(&self, v: Var, value: &crate::algebra::Rational) -> Result<Self> {
        let sub = |xs: &[ExactScalar]| {
            xs.iter()
                .map(|c| c.substitute_rational(v, value))
                .collect::<Result<Vec<_>>>()
        };
        Ok(JFractionData {
            b: sub(&self.b)?,
            lambda: sub(&self.lambda)?,
        })
    }
}

impl SFractionData {
    pub fn new(c: Vec<ExactScalar>) -> Self {
        SFractionData { c }
    }

    pub fn determined_order(&self) -> usize {
        self.c.len()
    }
}

impl TPattern {
    /// Reads the pattern off the first terms and checks every supplied term.
    pub fn detect(j: &JFractionData) -> Result<TPattern> {
        let b0 = j.b.first().cloned().unwrap_or_else(ExactScalar::zero);
        let d = match j.b.get(1) {
            Some(b1) => b1 - &b0,
            None => ExactScalar::zero(),
        };
        let mu = j.lambda.first().cloned().unwrap_or_else(ExactScalar::zero);
        let pattern = TPattern { b0, d, mu };
        pattern.validate(j)?;
        Ok(pattern)
    }

    pub fn b(&self, n: usize) -> ExactScalar {
        &self.b0 + &self.d.scale(&rat(n as i64))
    }

    pub fn lambda(&self, n: usize) -> ExactScalar {
        self.mu.scale(&rat((n * n) as i64))
    }

    pub fn validate(&self, j: &JFractionData) -> Result<()> {
        let levels = j.b.len().max(j.lambda.len() + 1);
        for n in 0..levels {
            if j.b.get(n).is_some_and(|bn| *bn != self.b(n)) {
                return Err(Error::PatternViolation { index: n });
            }
            if n >= 1 && j.lambda.get(n - 1).is_some_and(|ln| *ln != self.lambda(n)) {
                return Err(Error::PatternViolation { index: n });
            }
        }
        Ok(())
    }

    /// The patterned J-fraction itself, with `levels` values of `b`.
    pub fn jfraction(&self, levels: usize) -> JFractionData {
        JFractionData::from_fn(levels, |n| self.b(n), |n| self.lambda(n))
    }
}

fn one_minus(s: &PowerSeries) -> Result<PowerSeries> {
    PowerSeries::one(s.var(), s.order()).sub(s)
}

pub fn jfrac_to_series(j: &JFractionData, order: usize) -> Result<PowerSeries> {
    let available = j.determined_order();
    if order > available {
        return Err(Error::DepthExceeded { requested: order, available });
    }
    let x = PowerSeries::identity(SeriesVar::X, order);
    let x2 = x.mul(&x)?;
    let levels = j.b.len().max(j.lambda.len() + 1);
    let mut tail = PowerSeries::zero(SeriesVar::X, order);
    for h in (0..levels).rev() {
        let mut inner = PowerSeries::zero(SeriesVar::X, order);
        if let Some(bh) = j.b.get(h) {
            inner = inner.add(&x.scale(bh))?;
        }
        if let Some(lh) = j.lambda.get(h) {
            inner = inner.add(&x2.mul(&tail)?.scale(lh))?;
        }
        tail = one_minus(&inner)?.reciprocal()?;
    }
    Ok(tail)
}

/// Recovers up to `depth` values of `lambda` and `depth + 1` values of `b`,
/// limited by what the truncation order of `s` determines.
pub fn series_to_jfrac(s: &PowerSeries, depth: usize) -> Result<JFractionData> {
    if s.var() != SeriesVar::X {
        return Err(Error::VariableMismatch { left: s.var(), right: SeriesVar::X });
    }
    if !s.constant_term().is_one() {
        return Err(Error::Precondition(format!(
            "series must have constant term 1, found {}",
            s.constant_term()
        )));
    }
    let order = s.order();
    let nb = order.div_ceil(2).min(depth + 1);
    let nl = (order / 2).min(depth);
    let mut out = JFractionData::default();
    let mut m = s.clone();
    for h in 0..nb {
        let rest = one_minus(&m.reciprocal()?)?;
        let bh = rest.coeffs()[1].clone();
        out.b.push(bh.clone());
        if h >= nl {
            break;
        }
        let lh = rest.coeffs()[2].clone();
        if lh.is_zero() {
            return Err(Error::NonGeneric { index: h + 1 });
        }
        let mut coeffs = rest.coeffs()[2..].to_vec();
        for c in coeffs.iter_mut() {
            *c = c.checked_div(&lh)?;
        }
        out.lambda.push(lh);
        m = PowerSeries::new(SeriesVar::X, coeffs);
    }
    Ok(out)
}

pub fn sfrac_to_series(s: &SFractionData, order: usize) -> Result<PowerSeries> {
    let available = s.determined_order();
    if order > available {
        return Err(Error::DepthExceeded { requested: order, available });
    }
    let x = PowerSeries::identity(SeriesVar::X, order);
    let mut tail = PowerSeries::one(SeriesVar::X, order);
    for c in s.c.iter().rev() {
        tail = one_minus(&x.mul(&tail)?.scale(c))?.reciprocal()?;
    }
    Ok(tail)
}

/// Even contraction: `b0 = c0`, `b_n = c_{2n-1} + c_{2n}`, `lambda_n = c_{2n-2} c_{2n-1}`.
pub fn sfrac_contract(s: &SFractionData) -> JFractionData {
    let c = &s.c;
    let mut out = JFractionData::default();
    if let Some(c0) = c.first() {
        out.b.push(c0.clone());
    }
    let mut n = 1;
    while 2 * n - 1 < c.len() {
        out.lambda.push(&c[2 * n - 2] * &c[2 * n - 1]);
        if 2 * n < c.len() {
            out.b.push(&c[2 * n - 1] + &c[2 * n]);
        }
        n += 1;
    }
    out
}

/// Triangle of the S-fraction with coefficients `r_i + s_i y`.
pub fn deleham(
    rseq: &[crate::algebra::Rational],
    sseq: &[crate::algebra::Rational],
    depth: usize,
) -> Result<Triangle> {
    if rseq.len() != sseq.len() {
        return Err(Error::LengthMismatch { left: rseq.len(), right: sseq.len() });
    }
    if rseq.len() < depth {
        return Err(Error::DepthExceeded { requested: depth, available: rseq.len() });
    }
    let y = ExactScalar::var(Var::Y);
    let c = rseq
        .iter()
        .zip(sseq)
        .map(|(r, s)| ExactScalar::Rat(r.clone()) + y.scale(s))
        .collect();
    let order = depth.saturating_sub(1);
    let series = sfrac_to_series(&SFractionData::new(c), order)?;
    triangle_from_gf(&series, Var::Y, depth)
}

/// Replaces a patterned J-fraction by its constant-tail image
/// `J(b0; d, d, ...; mu, mu, ...)`.
pub fn t_transform(j: &JFractionData) -> Result<JFractionData> {
    let p = TPattern::detect(j)?;
    let b = (0..j.b.len())
        .map(|n| if n == 0 { p.b0.clone() } else { p.d.clone() })
        .collect();
    let lambda = vec![p.mu.clone(); j.lambda.len()];
    Ok(JFractionData { b, lambda })
}

/// Hankel determinants `H_0 ..= H_nmax` of the coefficient sequence of `s`.
pub fn hankel_determinants(s: &PowerSeries, nmax: usize) -> Result<Vec<ExactScalar>> {
    if s.order() < 2 * nmax {
        return Err(Error::DepthExceeded { requested: 2 * nmax, available: s.order() });
    }
    let m = s.coeffs();
    (0..=nmax)
        .map(|n| {
            let matrix = (0..=n)
                .map(|i| (0..=n).map(|j| m[i + j].clone()).collect())
                .collect();
            determinant(matrix)
        })
        .collect()
}

/// Fraction-free Bareiss elimination.
pub fn determinant(mut a: Vec<Vec<ExactScalar>>) -> Result<ExactScalar> {
    let n = a.len();
    if n == 0 {
        return Ok(ExactScalar::one());
    }
    let mut sign = false;
    let mut prev = ExactScalar::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(ExactScalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.checked_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}
