//! The verification suite: every bundled fixture against the engine, the
//! cross-route identities, and OEIS prefix checks.

use eulerforge_core::algebra::{rat, ExactScalar, Var};
use eulerforge_core::cfrac::{deleham, jfrac_to_series, t_transform};
use eulerforge_core::gallery::*;
use eulerforge_core::riordan::RiordanArray;
use eulerforge_core::series::{exp_linear, PowerSeries, SeriesVar};
use eulerforge_core::transforms::{egf_numbers, ogf_to_egf_pipeline};
use eulerforge_core::triangle::{
    production_from_triangle, triangle_from_gf, triangle_from_production, type_a_production, Triangle,
};
use eulerforge_core::Result;
use eulerforge_oeis::{compare, OeisClient, Verdict};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub fixtures: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn oeis_verdicts(&self) -> Vec<(String, String)> {
        self.checks
            .iter()
            .filter_map(|c| c.name.strip_prefix("oeis:").map(|id| (id.to_string(), c.detail.clone())))
            .collect()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} fixtures, {} checks, {} failures",
            self.fixtures,
            self.checks.len(),
            self.failures().count()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OeisSource {
    /// Cache, then bundled data; never the network when the client is offline.
    Local,
    /// Always query the remote endpoint.
    Remote,
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

fn sc(s: &str) -> ExactScalar {
    s.parse().expect("literal parses")
}

fn record(checks: &mut Vec<Check>, name: &str, outcome: Result<bool>) {
    let (passed, detail) = match outcome {
        Ok(true) => (true, String::new()),
        Ok(false) => (false, "values differ".to_string()),
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check { name: name.to_string(), passed, detail });
}

fn integers(values: &[ExactScalar]) -> Option<Vec<BigInt>> {
    values.iter().map(ExactScalar::as_integer).collect()
}

fn at_r_equals_one(values: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    values.iter().map(|v| v.substitute_rational(Var::R, &rat(1))).collect()
}

fn flat(t: Triangle) -> Vec<ExactScalar> {
    t.rows().iter().flatten().cloned().collect()
}

/// `e^t` times the E1 generating function: Eulerian numbers by ascents.
fn ascent_triangle(depth: usize) -> Result<Triangle> {
    let order = depth.saturating_sub(1);
    let shifted = exp_linear(SeriesVar::T, ExactScalar::one(), order).mul(&egf(EgfName::E1, order)?)?;
    triangle_from_gf(&PowerSeries::new(SeriesVar::X, egf_numbers(&shifted)?), Var::R, depth)
}

/// Computed prefix for each listed sequence.
pub fn oeis_prefixes(depth: usize) -> Result<Vec<(&'static str, Vec<ExactScalar>)>> {
    let catalan_rows = |a: i64, b: i64| -> Result<Vec<ExactScalar>> {
        at_r_equals_one(&type_b_catalan(&int(a), &int(b), depth)?.row_sums())
    };
    let type_a = type_a_generalized(depth)?;
    Ok(vec![
        ("A000108", type_b_catalan(&int(0), &int(0), depth)?.column(0)),
        ("A000165", type_a.row_sums()),
        ("A000670", type_a.column(0)),
        ("A008292", flat(egf_triangle(EgfName::E3, depth)?)),
        ("A060187", flat(egf_triangle(EgfName::EB, depth)?)),
        ("A108524", catalan_rows(1, 1)?),
        ("A114608", flat(type_a_t_transformed(depth)?)),
        ("A118376", catalan_rows(0, 0)?),
        ("A123125", flat(egf_triangle(EgfName::E2, depth)?)),
        ("A151374", catalan_rows(3, 4)?),
        ("A173018", flat(ascent_triangle(depth)?)),
    ])
}

fn identities(checks: &mut Vec<Check>) {
    let (a, b) = (ExactScalar::var(Var::A), ExactScalar::var(Var::B));

    record(checks, "t3 closed form", (|| {
        let t3 = fixture("T3").expect("T3 fixture").triangle();
        for n in 0..t3.depth() {
            for k in 0..=n {
                if t3_term(n as i64, k as i64)? != t3.get(n, k) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })());

    record(checks, "pipelines invert", (|| {
        for name in EgfName::ALL {
            if ogf_to_egf_pipeline(&ogf(name.partner(), 7)?)? != egf(name, 7)? {
                return Ok(false);
            }
        }
        Ok(true)
    })());

    record(checks, "TB decomposition", (|| {
        let (binomial, correction) = tb_decomposition(7);
        let tb = fixture("TB").expect("TB fixture").triangle();
        let diff = Triangle::from_fn(7, |n, k| binomial.get(n, k) - correction.get(n, k));
        Ok(&diff == tb)
    })());

    record(checks, "type A at a=2 is the T3 inverse production", (|| {
        let inv = pipeline_triangle(EgfName::E3, 8)?.invert()?;
        Ok(production_from_triangle(&inv)? == type_a_production(&int(2), 7)?)
    })());

    record(checks, "type A at a=0 is a Riordan array", (|| {
        let m = triangle_from_production(&type_a_production(&int(0), 7)?, 7)?;
        let g = PowerSeries::from_ints(SeriesVar::X, &[1, -1, -1, -1, -1, -1, -1]);
        let f = PowerSeries::from_ints(SeriesVar::X, &[0, -1, -1, -1, -1, -1, -1]);
        Ok(m.invert()? == RiordanArray::ordinary(g, f)?.to_triangle(7)?)
    })());

    record(checks, "type A inverse row symmetry only at a=0, a=2", (|| {
        for k in -3..=5 {
            let inv = triangle_from_production(&type_a_production(&int(k), 7)?, 7)?.invert()?;
            if inv.is_centrally_symmetric_up_to_sign() != (k == 0 || k == 2) {
                return Ok(false);
            }
        }
        Ok(true)
    })());

    record(checks, "type A routes agree", (|| {
        let depth = 7;
        let pipeline = type_a_generalized(depth)?;
        let jf = triangle_from_gf(&jfrac_to_series(&type_a_jfraction(4), 6)?, Var::Y, depth)?;
        let (rs, ss) = type_a_deleham_sequences(9);
        let del = deleham(&rs, &ss, depth)?;
        let moments = type_a_moment_array(6)?.to_triangle(depth)?.column(0);
        let riordan = triangle_from_gf(&PowerSeries::new(SeriesVar::X, moments), Var::Y, depth)?;
        let rec = type_a_recurrence(depth).moments(depth)?;
        let rec = triangle_from_gf(&PowerSeries::new(SeriesVar::X, rec), Var::Y, depth)?;
        Ok([jf, del, riordan, rec].iter().all(|t| *t == pipeline))
    })());

    record(checks, "type A moment pair times its inverse", (|| {
        let arr = type_a_moment_array(9)?;
        let product = arr.multiply(&type_a_orthogonal_array(9)?)?;
        Ok(product.to_triangle(8)? == Triangle::identity(8))
    })());

    record(checks, "type A production is tridiagonal", (|| {
        let p = type_a_moment_array(9)?.production_matrix(7)?;
        let j = type_a_jfraction(7);
        Ok(p.is_tridiagonal() && p.diagonal() == j.b && p.subdiagonal() == j.lambda)
    })());

    record(checks, "T transform gives the Catalan form", (|| {
        let s = jfrac_to_series(&t_transform(&type_a_jfraction(5))?, 8)?;
        Ok(s == type_a_catalan_form(8)?)
    })());

    record(checks, "final ordinary pair", (|| {
        let moments = moment_riordan_pair(&MomentFamily::TypeAFinal, 9)?.inverse()?;
        let tridiagonal = moments.production_matrix(7)?.is_tridiagonal();
        Ok(tridiagonal && moments.to_triangle(9)?.column(0) == type_a_catalan_form(8)?.into_coeffs())
    })());

    record(checks, "type B inverse generating function", (|| {
        let inv = type_b_inverse_triangle(&a, &b, 6)?;
        let gf = triangle_from_gf(&type_b_inverse_gf(&a, &b, 5)?, Var::R, 6)?;
        Ok(inv == gf && type_b_inverse_gf(&int(3), &int(4), 7)? == ogf(OgfName::TB, 7)?)
    })());

    record(checks, "type B routes agree", (|| {
        Ok(type_b_generalized(&a, &b, 6)? == type_b_generalized_by_production(&a, &b, 6)?)
    })());

    record(checks, "type B Catalan side via T", (|| {
        for (p, q) in [(0, 0), (0, 1), (1, 1), (1, 2), (3, 4)] {
            let (p, q) = (int(p), int(q));
            if type_b_catalan(&p, &q, 7)? != type_b_catalan_via_t(&p, &q, 7)? {
                return Ok(false);
            }
        }
        Ok(true)
    })());

    record(checks, "corrected G reproduces E_B", (|| {
        Ok(corrected_g(&int(3), &int(4), &sc("1-r"), 7)? == egf(EgfName::EB, 7)?)
    })());
}

fn oeis_checks(checks: &mut Vec<Check>, client: &OeisClient, source: OeisSource) {
    let prefixes = match oeis_prefixes(8) {
        Ok(p) => p,
        Err(e) => {
            record(checks, "oeis prefixes", Err(e));
            return;
        }
    };
    for (id, values) in prefixes {
        let name = format!("oeis:{id}");
        let Some(computed) = integers(&values) else {
            checks.push(Check { name, passed: false, detail: "computed prefix is not integral".into() });
            continue;
        };
        let fetched = match source {
            OeisSource::Local => client.fetch(id),
            OeisSource::Remote => client.fetch_remote(id),
        };
        match fetched {
            Ok(rec) => {
                let report = compare(&computed, &rec);
                let passed = report.verdict == Verdict::FullPrefixMatch;
                checks.push(Check { name, passed, detail: report.verdict.to_string() });
            }
            Err(e) => checks.push(Check { name, passed: false, detail: e.to_string() }),
        }
    }
}

pub fn run_verify(client: &OeisClient, source: OeisSource) -> VerifyReport {
    let mut checks = Vec::new();
    let tables = fixtures();
    for table in tables {
        let outcome = regenerate(&table.name).map(|data| data == table.data);
        record(&mut checks, &format!("fixture:{}", table.name), outcome);
    }
    identities(&mut checks);
    oeis_checks(&mut checks, client, source);
    VerifyReport { fixtures: tables.len(), checks }
}
