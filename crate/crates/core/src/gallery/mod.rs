//! Named generating functions and triangle families.
//!
//! Everything here is built from the engine primitives; the transcribed
//! tables live in [`fixtures`] and [`regenerate`] recomputes each of them.

mod fixtures;

pub use fixtures::{fixture, fixtures, parse_fixture, FixtureData, FixtureTable};

use crate::algebra::{binomial, factorial, rat, ExactScalar, Rational, Var};
use crate::cfrac::{jfrac_to_series, t_transform, JFractionData};
use crate::error::{Error, Result};
use crate::riordan::{Recurrence3Term, RiordanArray};
use crate::series::{exp_linear, PowerSeries, SeriesVar};
use crate::transforms::{egf_to_ogf_pipeline, inverse_sumudu, ogf_to_egf_pipeline, sumudu};
use crate::triangle::{
    production_from_triangle, triangle_from_gf, triangle_from_production, type_a_production,
    type_b_production, ProductionMatrix, Triangle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfName {
    E1,
    E2,
    E3,
    EB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OgfName {
    T1,
    T2,
    T3,
    TB,
}

impl EgfName {
    pub const ALL: [EgfName; 4] = [EgfName::E1, EgfName::E2, EgfName::E3, EgfName::EB];

    /// The ordinary triangle obtained from this EGF by the reciprocal pipeline.
    pub fn partner(self) -> OgfName {
        match self {
            EgfName::E1 => OgfName::T1,
            EgfName::E2 => OgfName::T2,
            EgfName::E3 => OgfName::T3,
            EgfName::EB => OgfName::TB,
        }
    }
}

impl OgfName {
    pub const ALL: [OgfName; 4] = [OgfName::T1, OgfName::T2, OgfName::T3, OgfName::TB];
}

fn r() -> ExactScalar {
    ExactScalar::var(Var::R)
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

fn series_t(coeffs: Vec<ExactScalar>) -> PowerSeries {
    PowerSeries::new(SeriesVar::T, coeffs)
}

fn poly_x(coeffs: Vec<ExactScalar>, order: usize) -> PowerSeries {
    PowerSeries::polynomial(SeriesVar::X, coeffs, order)
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(1.into(), factorial(n))
}

/// `(e^{rt} - r e^t)/(1 - r)`, kept polynomial coefficient-wise.
fn type_a_denominator(order: usize) -> PowerSeries {
    series_t(
        (0..=order)
            .map(|n| match n {
                0 => ExactScalar::one(),
                _ => (r().pow(n as u32) - r())
                    .exact_div(&(int(1) - r()))
                    .expect("r^n - r vanishes at r = 1")
                    .scale(&inv_factorial(n)),
            })
            .collect(),
    )
}

pub fn egf(name: EgfName, order: usize) -> Result<PowerSeries> {
    let den = type_a_denominator(order);
    match name {
        EgfName::E1 => den.reciprocal(),
        EgfName::E2 => exp_linear(SeriesVar::T, r(), order).div(&den),
        EgfName::E3 => exp_linear(SeriesVar::T, r() + int(1), order).div(&den.mul(&den)?),
        EgfName::EB => {
            // (1 - r e^{2(1-r)t})/(1 - r)
            let two_s = (int(1) - r()).scale(&rat(2));
            let den = series_t(
                (0..=order)
                    .map(|n| match n {
                        0 => ExactScalar::one(),
                        _ => (r() * two_s.pow(n as u32))
                            .exact_div(&(r() - int(1)))
                            .expect("divisible by 1 - r")
                            .scale(&inv_factorial(n)),
                    })
                    .collect(),
            );
            exp_linear(SeriesVar::T, int(1) - r(), order).div(&den)
        }
    }
}

pub fn ogf(name: OgfName, order: usize) -> Result<PowerSeries> {
    let rp1 = r() + int(1);
    let rm1 = r() - int(1);
    let (num, den) = match name {
        OgfName::T1 => (vec![int(1), -&rp1], vec![int(1), -&rp1, r()]),
        OgfName::T2 => (vec![int(1), int(-1)], vec![int(1), rm1]),
        OgfName::T3 => (
            vec![int(1), -&rp1, r().scale(&rat(2))],
            vec![int(1), int(0), -rm1.pow(2)],
        ),
        OgfName::TB => (vec![int(1), -&rp1], vec![int(1), int(0), -rm1.pow(2)]),
    };
    poly_x(num, order).div(&poly_x(den, order))
}

/// Number triangle of an EGF in `t` with row variable `r`.
pub fn egf_triangle(name: EgfName, depth: usize) -> Result<Triangle> {
    triangle_from_gf(&sumudu(&egf(name, depth.saturating_sub(1))?)?, Var::R, depth)
}

pub fn ogf_triangle(name: OgfName, depth: usize) -> Result<Triangle> {
    triangle_from_gf(&ogf(name, depth.saturating_sub(1))?, Var::R, depth)
}

/// Ordinary triangle reached from the partner EGF via `sumudu(1/egf)`.
pub fn pipeline_triangle(name: EgfName, depth: usize) -> Result<Triangle> {
    let out = egf_to_ogf_pipeline(&egf(name, depth.saturating_sub(1))?)?;
    triangle_from_gf(&out, Var::R, depth)
}

/// Closed form for the entries of T3.
pub fn t3_term(n: i64, k: i64) -> Result<ExactScalar> {
    if k < 0 || n < 0 || k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
    let m = 2 * (n - 1).div_euclid(2);
    let value = binomial(n, k) - binomial(m, m - k + 1) * 2;
    Ok(ExactScalar::Rat(Rational::from_integer(value * sign)))
}

/// `(B, C)` with `B[n][k] = (-1)^{n-k} C(n,k)` and `B - C = T_B`; `C` is
/// supported on odd rows.
pub fn tb_decomposition(depth: usize) -> (Triangle, Triangle) {
    let sign = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    let first = Triangle::from_fn(depth, |n, k| {
        ExactScalar::Rat(Rational::from_integer(binomial(n as i64, k as i64) * sign(n - k)))
    });
    let second = Triangle::from_fn(depth, |n, k| {
        if n % 2 == 0 || k == 0 {
            return ExactScalar::zero();
        }
        let c = binomial(n as i64 - 1, k as i64 - 1) * 2 * sign(k - 1);
        ExactScalar::Rat(Rational::from_integer(c))
    });
    (first, second)
}

// ---- generalized type A ----

/// `(1 - 2x)/(1 + (y - 1)x)`.
pub fn type_a_ogf(order: usize) -> Result<PowerSeries> {
    let y = ExactScalar::var(Var::Y);
    poly_x(vec![int(1), int(-2)], order).div(&poly_x(vec![int(1), y - int(1)], order))
}

/// `e^{t(y-1)}(y-1)/(y+1-2e^{t(y-1)})`.
pub fn type_a_egf(order: usize) -> Result<PowerSeries> {
    let ym1 = ExactScalar::var(Var::Y) - int(1);
    let den = series_t(
        (0..=order)
            .map(|n| match n {
                0 => ExactScalar::one(),
                _ => ym1.pow(n as u32 - 1).scale(&(inv_factorial(n) * rat(-2))),
            })
            .collect(),
    );
    exp_linear(SeriesVar::T, ym1, order).div(&den)
}

/// Generalized type-A triangle through the inverse-Sumudu pipeline.
pub fn type_a_generalized(depth: usize) -> Result<Triangle> {
    let egf = ogf_to_egf_pipeline(&type_a_ogf(depth.saturating_sub(1))?)?;
    triangle_from_gf(&sumudu(&egf)?, Var::Y, depth)
}

/// `b_n = (y+1) + n(y+3)`, `lambda_n = 2(y+1) n^2`.
pub fn type_a_jfraction(levels: usize) -> JFractionData {
    let y = ExactScalar::var(Var::Y);
    let b0 = &y + &int(1);
    let d = &y + &int(3);
    let mu = (&y + &int(1)).scale(&rat(2));
    JFractionData::from_fn(
        levels,
        |n| &b0 + &d.scale(&rat(n as i64)),
        |n| mu.scale(&rat((n * n) as i64)),
    )
}

pub fn type_a_recurrence(len: usize) -> Recurrence3Term {
    let j = type_a_jfraction(len + 1);
    Recurrence3Term::new(j.b[..len].to_vec(), j.lambda[..len].to_vec())
}

/// `[1, 2, 2, 4, 3, 6, ...]` and `[1, 0, 2, 0, 3, 0, ...]`.
pub fn type_a_deleham_sequences(len: usize) -> (Vec<Rational>, Vec<Rational>) {
    let rs = (0..len)
        .map(|i| rat(if i % 2 == 0 { i as i64 / 2 + 1 } else { i as i64 + 1 }))
        .collect();
    let ss = (0..len)
        .map(|i| rat(if i % 2 == 0 { i as i64 / 2 + 1 } else { 0 }))
        .collect();
    (rs, ss)
}

/// `f` with `f'(fbar) = A`, i.e. the reversion of `integral(1/A)`.
fn f_from_a(a: &PowerSeries) -> Result<PowerSeries> {
    a.reciprocal()?.integral().reversion()
}

/// Exponential moment array `[g, f]` with `A = (1+2t)(1+(y+1)t)`.
pub fn type_a_moment_array(order: usize) -> Result<RiordanArray> {
    let y = ExactScalar::var(Var::Y);
    let a = PowerSeries::polynomial(SeriesVar::T, vec![int(1), int(2)], order).mul(
        &PowerSeries::polynomial(SeriesVar::T, vec![int(1), y + int(1)], order),
    )?;
    RiordanArray::exponential(type_a_egf(order)?, f_from_a(&a)?)
}

/// `[1/(1+t(y+1)), ln((1+2t)/(1+t(y+1)))/(1-y)]`.
pub fn type_a_orthogonal_array(order: usize) -> Result<RiordanArray> {
    let yp1 = ExactScalar::var(Var::Y) + int(1);
    let base = PowerSeries::polynomial(SeriesVar::T, vec![int(1), yp1], order);
    let g = base.reciprocal()?;
    let ratio = PowerSeries::polynomial(SeriesVar::T, vec![int(1), int(2)], order).div(&base)?;
    let f = ratio.log()?.exact_div_scalar(&(int(1) - ExactScalar::var(Var::Y)))?;
    RiordanArray::exponential(g, f)
}

/// Triangle of the T-transformed type-A J-fraction.
pub fn type_a_t_transformed(depth: usize) -> Result<Triangle> {
    let j = t_transform(&type_a_jfraction(depth.div_ceil(2) + 1))?;
    triangle_from_gf(&jfrac_to_series(&j, depth.saturating_sub(1))?, Var::Y, depth)
}

/// `(1/(1-(y-1)x)) c(2x/(1-(y-1)x)^2)`.
pub fn type_a_catalan_form(order: usize) -> Result<PowerSeries> {
    let ym1 = ExactScalar::var(Var::Y) - int(1);
    let inv = poly_x(vec![int(1), -ym1], order).reciprocal()?;
    let arg = PowerSeries::identity(SeriesVar::X, order)
        .scale(&int(2))
        .mul(&inv.mul(&inv)?)?;
    inv.mul(&arg.catalan_compose()?)
}

// ---- generalized type B ----

/// `(r+1)(a+1) - b`.
pub fn type_b_mu(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    (r() + int(1)) * (a + &int(1)) - b.clone()
}

/// `b_n = (2n+1)(r+1)`, `lambda_n = n^2 mu`.
pub fn type_b_jfraction(a: &ExactScalar, b: &ExactScalar, levels: usize) -> JFractionData {
    let rp1 = r() + int(1);
    let mu = type_b_mu(a, b);
    JFractionData::from_fn(
        levels,
        |n| rp1.scale(&rat(2 * n as i64 + 1)),
        |n| mu.scale(&rat((n * n) as i64)),
    )
}

pub fn type_b_recurrence(a: &ExactScalar, b: &ExactScalar, len: usize) -> Recurrence3Term {
    let j = type_b_jfraction(a, b, len + 1);
    Recurrence3Term::new(j.b[..len].to_vec(), j.lambda[..len].to_vec())
}

/// Ordinary moment series of the type-B family.
pub fn type_b_moment_series(a: &ExactScalar, b: &ExactScalar, order: usize) -> Result<PowerSeries> {
    jfrac_to_series(&type_b_jfraction(a, b, order / 2 + 1), order)
}

/// Generalized type-B triangle, J-fraction route.
pub fn type_b_generalized(a: &ExactScalar, b: &ExactScalar, depth: usize) -> Result<Triangle> {
    let s = type_b_moment_series(a, b, depth.saturating_sub(1))?;
    triangle_from_gf(&s, Var::R, depth)
}

/// Same triangle through powers of the tridiagonal production matrix.
pub fn type_b_generalized_by_production(a: &ExactScalar, b: &ExactScalar, depth: usize) -> Result<Triangle> {
    let moments = type_b_recurrence(a, b, depth).moments_by_production(depth)?;
    let s = PowerSeries::new(SeriesVar::X, moments);
    triangle_from_gf(&s, Var::R, depth)
}

/// Exponential moment array with `A = 1 + 2(r+1)t + mu t^2`.
pub fn type_b_moment_array(a: &ExactScalar, b: &ExactScalar, order: usize) -> Result<RiordanArray> {
    let g = inverse_sumudu(&type_b_moment_series(a, b, order)?)?;
    let big_a = PowerSeries::polynomial(
        SeriesVar::T,
        vec![int(1), (r() + int(1)).scale(&rat(2)), type_b_mu(a, b)],
        order,
    );
    RiordanArray::exponential(g, f_from_a(&big_a)?)
}

/// `(1 - (r+1)x)/(1 - ((r+1)(r-a) + b)x^2)`.
pub fn type_b_inverse_gf(a: &ExactScalar, b: &ExactScalar, order: usize) -> Result<PowerSeries> {
    let rp1 = r() + int(1);
    let q = &rp1 * &(r() - a.clone()) + b.clone();
    poly_x(vec![int(1), -rp1], order).div(&poly_x(vec![int(1), int(0), -q], order))
}

/// Inverse of the triangle generated by the block production matrix.
pub fn type_b_inverse_triangle(a: &ExactScalar, b: &ExactScalar, depth: usize) -> Result<Triangle> {
    triangle_from_production(&type_b_production(a, b, depth), depth)?.invert()
}

/// `c(x(r+1+((r+1)(a-r)-b)x))`.
pub fn type_b_catalan_series(a: &ExactScalar, b: &ExactScalar, order: usize) -> Result<PowerSeries> {
    let rp1 = r() + int(1);
    let q = &rp1 * &(a.clone() - r()) - b.clone();
    poly_x(vec![int(0), rp1, q], order).catalan_compose()
}

pub fn type_b_catalan(a: &ExactScalar, b: &ExactScalar, depth: usize) -> Result<Triangle> {
    triangle_from_gf(&type_b_catalan_series(a, b, depth.saturating_sub(1))?, Var::R, depth)
}

/// Catalan-side triangle through the T transform of the type-B J-fraction.
pub fn type_b_catalan_via_t(a: &ExactScalar, b: &ExactScalar, depth: usize) -> Result<Triangle> {
    let j = t_transform(&type_b_jfraction(a, b, depth.div_ceil(2) + 1))?;
    triangle_from_gf(&jfrac_to_series(&j, depth.saturating_sub(1))?, Var::R, depth)
}

/// `2s e^{st}/(r+1+s - e^{2st}(r+1-s))` where `s^2 = b + (r+1)(r-a)`.
/// Only defined when the discriminant is a perfect square `s^2`.
pub fn corrected_g(a: &ExactScalar, b: &ExactScalar, s: &ExactScalar, order: usize) -> Result<PowerSeries> {
    let rp1 = r() + int(1);
    let delta = b.clone() + &rp1 * &(r() - a.clone());
    if s.pow(2) != delta {
        return Err(Error::Precondition(format!("({s})^2 is not {delta}")));
    }
    if s.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // denominator divided by its constant term 2s
    let two_s = s.scale(&rat(2));
    let tail = &rp1 - s;
    let den = series_t(
        (0..=order)
            .map(|n| match n {
                0 => Ok(ExactScalar::one()),
                _ => Ok((-(&two_s.pow(n as u32 - 1) * &tail)).scale(&inv_factorial(n))),
            })
            .collect::<Result<Vec<_>>>()?,
    );
    exp_linear(SeriesVar::T, s.clone(), order).div(&den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MomentFamily {
    TypeAFinal,
    TypeBFinal { a: ExactScalar, b: ExactScalar },
}

/// Ordinary Riordan array `(p/D, x/D)` of the orthogonal polynomials whose
/// moments are the Catalan-side triangles.
pub fn moment_riordan_pair(family: &MomentFamily, order: usize) -> Result<RiordanArray> {
    let (num, den) = match family {
        MomentFamily::TypeAFinal => {
            let y = ExactScalar::var(Var::Y);
            (
                vec![int(1), int(2)],
                vec![int(1), &y + &int(3), (&y + &int(1)).scale(&rat(2))],
            )
        }
        MomentFamily::TypeBFinal { a, b } => {
            let rp1 = r() + int(1);
            (
                vec![int(1), rp1.clone()],
                vec![int(1), rp1.scale(&rat(2)), type_b_mu(a, b)],
            )
        }
    };
    let inv_den = poly_x(den, order).reciprocal()?;
    let g = poly_x(num, order).mul(&inv_den)?;
    let f = PowerSeries::identity(SeriesVar::X, order).mul(&inv_den)?;
    RiordanArray::ordinary(g, f)
}

fn symbol(v: Var) -> ExactScalar {
    ExactScalar::var(v)
}

/// Recomputes the fixture called `name` with the engine.
pub fn regenerate(name: &str) -> Result<FixtureData> {
    let tri = |t: Triangle| Ok(FixtureData::Triangle(t));
    let (a, b) = (symbol(Var::A), symbol(Var::B));
    let pair = |name: &str, prefix: &str| -> Option<(ExactScalar, ExactScalar)> {
        let rest = name.strip_prefix(prefix)?;
        let (x, y) = rest.split_once('_')?;
        Some((x.parse().ok()?, y.parse().ok()?))
    };
    match name {
        "E3" => tri(egf_triangle(EgfName::E3, 7)?),
        "EB" => tri(egf_triangle(EgfName::EB, 7)?),
        "T1" => tri(pipeline_triangle(EgfName::E1, 7)?),
        "T2" => tri(pipeline_triangle(EgfName::E2, 7)?),
        "T3" => tri(pipeline_triangle(EgfName::E3, 7)?),
        "TB" => tri(pipeline_triangle(EgfName::EB, 7)?),
        "TB_binomial" => tri(tb_decomposition(7).0),
        "TB_correction" => tri(tb_decomposition(7).1.map(|c| Ok(c.scale(&Rational::new((-1).into(), 2.into()))))?),
        "prodmat_T3inv" => Ok(FixtureData::Production(production_from_triangle(
            &pipeline_triangle(EgfName::E3, 8)?.invert()?,
        )?)),
        "prodmat_TBinv" => Ok(FixtureData::Production(production_from_triangle(
            &pipeline_triangle(EgfName::EB, 8)?.invert()?,
        )?)),
        "prodmat_typeA_a2" => Ok(FixtureData::Production(type_a_production(&int(2), 7)?)),
        "prodmat_typeA" => Ok(FixtureData::Production(type_a_production(&a, 7)?)),
        "prodmat_typeA_a0" => Ok(FixtureData::Production(type_a_production(&int(0), 7)?)),
        "typeA_generalized" => tri(type_a_generalized(7)?),
        "A114608" => tri(type_a_t_transformed(7)?),
        "prodmat_typeB" => Ok(FixtureData::Production(type_b_production(&a, &b, 8))),
        "typeB_inverse" => tri(type_b_inverse_triangle(&a, &b, 5)?),
        "typeB_generalized" => tri(type_b_generalized(&a, &b, 5)?),
        _ => {
            if let Some((x, y)) = pair(name, "typeB_factorial_") {
                tri(type_b_generalized(&x, &y, 7)?)
            } else if let Some((x, y)) = pair(name, "typeB_catalan_") {
                tri(type_b_catalan(&x, &y, 7)?)
            } else {
                Err(Error::Precondition(format!("unknown fixture {name}")))
            }
        }
    }
}

/// Production matrix of the type-A moment array truncated to `size`.
pub fn type_a_moment_production(size: usize) -> Result<ProductionMatrix> {
    type_a_moment_array(size + 1)?.production_matrix(size)
}
