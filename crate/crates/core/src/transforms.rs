//! Sumudu transform and the reciprocal pipelines between exponential and
//! ordinary bivariate generating functions.
//!
//! The Sumudu transform is taken formally: `a_n -> n! a_n`, relabelling
//! `t -> x`. Its inverse divides by `n!` and relabels `x -> t`.

use crate::algebra::{factorial, ExactScalar, Rational};
use crate::error::{Error, Result};
use crate::series::{PowerSeries, SeriesVar};

fn expect_var(s: &PowerSeries, var: SeriesVar) -> Result<()> {
    if s.var() != var {
        return Err(Error::VariableMismatch { left: s.var(), right: var });
    }
    Ok(())
}

pub fn sumudu(s: &PowerSeries) -> Result<PowerSeries> {
    expect_var(s, SeriesVar::T)?;
    let out = s.map_coeffs(|n, c| Ok(c.scale(&Rational::from_integer(factorial(n)))))?;
    Ok(out.relabel(SeriesVar::X))
}

pub fn inverse_sumudu(s: &PowerSeries) -> Result<PowerSeries> {
    expect_var(s, SeriesVar::X)?;
    let out = s.map_coeffs(|n, c| Ok(c.scale(&Rational::new(1.into(), factorial(n)))))?;
    Ok(out.relabel(SeriesVar::T))
}

/// Intermediate values of one pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub input: PowerSeries,
    pub reciprocal: PowerSeries,
    pub output: PowerSeries,
    pub order: usize,
}

/// `sumudu(1/egf)`.
pub fn egf_to_ogf_report(egf: &PowerSeries) -> Result<PipelineReport> {
    expect_var(egf, SeriesVar::T)?;
    let reciprocal = egf.reciprocal()?;
    let output = sumudu(&reciprocal)?;
    Ok(PipelineReport {
        input: egf.clone(),
        reciprocal,
        order: output.order(),
        output,
    })
}

/// `1/inverse_sumudu(ogf)`.
pub fn ogf_to_egf_report(ogf: &PowerSeries) -> Result<PipelineReport> {
    expect_var(ogf, SeriesVar::X)?;
    let scaled = inverse_sumudu(ogf)?;
    let reciprocal = scaled.reciprocal()?;
    Ok(PipelineReport {
        input: ogf.clone(),
        order: reciprocal.order(),
        output: reciprocal.clone(),
        reciprocal,
    })
}

pub fn egf_to_ogf_pipeline(egf: &PowerSeries) -> Result<PowerSeries> {
    Ok(egf_to_ogf_report(egf)?.output)
}

pub fn ogf_to_egf_pipeline(ogf: &PowerSeries) -> Result<PowerSeries> {
    Ok(ogf_to_egf_report(ogf)?.output)
}

/// Coefficients `n! [t^n] s`, i.e. the number triangle an EGF describes.
pub fn egf_numbers(s: &PowerSeries) -> Result<Vec<ExactScalar>> {
    Ok(sumudu(s)?.into_coeffs())
}
