//! Ordinary and exponential Riordan arrays.
//!
//! An ordinary array `(g, f)` has entries `[x^n] g f^k`; the exponential
//! array `[g, f]` has entries `n!/k! [t^n] g f^k`. Both kinds share the group
//! law `(g, f)(h, l) = (g h(f), l(f))`.

use crate::algebra::{factorial, ExactScalar, Rational};
use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::triangle::{triangle_from_production, ProductionMatrix, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RiordanKind {
    Ordinary,
    Exponential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    kind: RiordanKind,
    g: PowerSeries,
    f: PowerSeries,
}

/// A- and Z-sequences as ordinary coefficient series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AZData {
    pub a: PowerSeries,
    pub z: PowerSeries,
}

fn factorial_ratio(n: usize, k: usize) -> Rational {
    Rational::new(factorial(n), factorial(k))
}

impl RiordanArray {
    pub fn new(kind: RiordanKind, g: PowerSeries, f: PowerSeries) -> Result<Self> {
        if g.var() != f.var() {
            return Err(Error::VariableMismatch { left: g.var(), right: f.var() });
        }
        if g.constant_term().is_zero() {
            return Err(Error::NonInvertibleConstant(g.constant_term().to_string()));
        }
        if !f.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(f.constant_term().to_string()));
        }
        if f.order() < 1 || f.coeffs()[1].is_zero() {
            return Err(Error::NotReversible);
        }
        Ok(RiordanArray { kind, g, f })
    }

    pub fn ordinary(g: PowerSeries, f: PowerSeries) -> Result<Self> {
        RiordanArray::new(RiordanKind::Ordinary, g, f)
    }

    pub fn exponential(g: PowerSeries, f: PowerSeries) -> Result<Self> {
        RiordanArray::new(RiordanKind::Exponential, g, f)
    }

    pub fn identity(kind: RiordanKind, var: crate::series::SeriesVar, order: usize) -> Self {
        RiordanArray {
            kind,
            g: PowerSeries::one(var, order),
            f: PowerSeries::identity(var, order),
        }
    }

    pub fn kind(&self) -> RiordanKind {
        self.kind
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    pub fn to_triangle(&self, depth: usize) -> Result<Triangle> {
        let order = self.order();
        if depth > order + 1 {
            return Err(Error::DepthExceeded { requested: depth, available: order + 1 });
        }
        let mut columns = Vec::with_capacity(depth);
        let mut col = self.g.truncate(order);
        for _ in 0..depth {
            columns.push(col.clone());
            col = col.mul(&self.f)?;
        }
        Ok(Triangle::from_fn(depth, |n, k| {
            let c = &columns[k].coeffs()[n];
            match self.kind {
                RiordanKind::Ordinary => c.clone(),
                RiordanKind::Exponential => c.scale(&factorial_ratio(n, k)),
            }
        }))
    }

    pub fn multiply(&self, rhs: &RiordanArray) -> Result<RiordanArray> {
        if self.kind != rhs.kind {
            return Err(Error::KindMismatch);
        }
        let g = self.g.mul(&rhs.g.compose(&self.f)?)?;
        let f = rhs.f.compose(&self.f)?;
        RiordanArray::new(self.kind, g, f)
    }

    pub fn inverse(&self) -> Result<RiordanArray> {
        let fbar = self.f.reversion()?;
        let g = self.g.compose(&fbar)?.reciprocal()?;
        RiordanArray::new(self.kind, g, fbar)
    }

    pub fn az_sequences(&self) -> Result<AZData> {
        let fbar = self.f.truncate(self.order()).reversion()?;
        match self.kind {
            RiordanKind::Exponential => {
                let a = self.f.derivative().compose(&fbar)?;
                let g_at = self.g.compose(&fbar)?;
                let z = self.g.derivative().compose(&fbar)?.div(&g_at)?;
                Ok(AZData { a, z })
            }
            RiordanKind::Ordinary => {
                let fbar_over_x = fbar.shift_down()?;
                let a = fbar_over_x.reciprocal()?;
                let g0 = PowerSeries::constant(fbar.var(), self.g.constant_term().clone(), fbar.order());
                let ratio = g0.div(&self.g.compose(&fbar)?)?;
                let one = PowerSeries::one(fbar.var(), fbar.order());
                let z = one.sub(&ratio)?.shift_down()?.div(&fbar_over_x)?;
                Ok(AZData { a, z })
            }
        }
    }

    /// Production matrix assembled from the A- and Z-sequences.
    ///
    /// Ordinary: `P[n][0] = z_n`, `P[n][k] = a_{n-k+1}`.
    /// Exponential: `P[n][k] = n!/k! (z_{n-k} + k a_{n-k+1})`.
    pub fn production_matrix(&self, size: usize) -> Result<ProductionMatrix> {
        let AZData { a, z } = self.az_sequences()?;
        let available = a.order().min(z.order()) + 1;
        if size > available {
            return Err(Error::DepthExceeded { requested: size, available });
        }
        let coeff = |s: &PowerSeries, i: usize| s.coeffs().get(i).cloned().unwrap_or_else(ExactScalar::zero);
        Ok(ProductionMatrix::from_fn(size, |n, k| match self.kind {
            RiordanKind::Ordinary => {
                if k == 0 {
                    coeff(&z, n)
                } else {
                    coeff(&a, n + 1 - k)
                }
            }
            RiordanKind::Exponential => {
                let zpart = if k <= n { coeff(&z, n - k) } else { ExactScalar::zero() };
                let apart = coeff(&a, n + 1 - k).scale(&Rational::from_integer(k.into()));
                (zpart + apart).scale(&factorial_ratio(n, k))
            }
        }))
    }
}

/// Three-term recurrence `p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}`,
/// `p_0 = 1`; `lambda[0]` holds `lambda_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence3Term {
    pub b: Vec<ExactScalar>,
    pub lambda: Vec<ExactScalar>,
}

impl Recurrence3Term {
    pub fn new(b: Vec<ExactScalar>, lambda: Vec<ExactScalar>) -> Self {
        Recurrence3Term { b, lambda }
    }

    /// Recurrence with coefficients given as functions of `n`.
    pub fn from_fn<B, L>(len: usize, mut b: B, mut lambda: L) -> Self
    where
        B: FnMut(usize) -> ExactScalar,
        L: FnMut(usize) -> ExactScalar,
    {
        Recurrence3Term {
            b: (0..len).map(&mut b).collect(),
            lambda: (1..=len).map(&mut lambda).collect(),
        }
    }

    fn check_depth(&self, depth: usize) -> Result<()> {
        let need = depth.saturating_sub(1);
        let have = self.b.len().min(self.lambda.len() + 1);
        if need > have {
            return Err(Error::DepthExceeded { requested: depth, available: have + 1 });
        }
        Ok(())
    }

    /// Coefficient triangle of `p_0 .. p_{depth-1}`.
    pub fn orthopoly_coefficients(&self, depth: usize) -> Result<Triangle> {
        self.check_depth(depth)?;
        let mut polys: Vec<Vec<ExactScalar>> = Vec::with_capacity(depth);
        for n in 0..depth {
            let next = match n {
                0 => vec![ExactScalar::one()],
                _ => {
                    let prev = &polys[n - 1];
                    let mut row = vec![ExactScalar::zero(); n + 1];
                    for (k, c) in prev.iter().enumerate() {
                        row[k + 1] = &row[k + 1] + c;
                        row[k] = &row[k] - &(c * &self.b[n - 1]);
                    }
                    if n >= 2 {
                        for (k, c) in polys[n - 2].iter().enumerate() {
                            row[k] = &row[k] - &(c * &self.lambda[n - 2]);
                        }
                    }
                    row
                }
            };
            polys.push(next);
        }
        Triangle::from_rows(polys)
    }

    /// Inverse of the coefficient triangle; its first column lists the moments.
    pub fn moment_matrix(&self, depth: usize) -> Result<Triangle> {
        self.orthopoly_coefficients(depth)?.invert()
    }

    pub fn moments(&self, count: usize) -> Result<Vec<ExactScalar>> {
        Ok(self.moment_matrix(count)?.column(0))
    }

    /// Jacobi production matrix: diagonal `b`, superdiagonal 1, subdiagonal `lambda`.
    pub fn jacobi_matrix(&self, size: usize) -> Result<ProductionMatrix> {
        ProductionMatrix::tridiagonal(&self.b, &self.lambda, size)
    }

    /// Moments as `(P^n)_{00}` for the Jacobi matrix `P`.
    pub fn moments_by_production(&self, count: usize) -> Result<Vec<ExactScalar>> {
        let p = self.jacobi_matrix(count)?;
        Ok(triangle_from_production(&p, count)?.column(0))
    }
}
