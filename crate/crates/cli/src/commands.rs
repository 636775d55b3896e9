use std::ffi::OsString;
use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerforge_core::algebra::{parse_rational, ExactScalar, Rational, Var};
use eulerforge_core::cfrac::{deleham, jfrac_to_series, series_to_jfrac, JFractionData};
use eulerforge_core::gallery::{self, EgfName};
use eulerforge_core::riordan::{RiordanArray, RiordanKind};
use eulerforge_core::series::{PowerSeries, SeriesVar};
use eulerforge_core::transforms::{egf_numbers, egf_to_ogf_pipeline, inverse_sumudu, ogf_to_egf_pipeline, sumudu};
use eulerforge_core::triangle::{
    production_from_triangle, triangle_from_gf, triangle_from_production, type_a_production, type_b_production,
    ProductionMatrix, Triangle,
};
use eulerforge_oeis::{compare, OeisClient};

use crate::expr::{eval_to_series, parse, Expr, Symbol};
use crate::output::{Format, Table};
use crate::verify::{run_verify, OeisSource};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eulerforge", version, about = "Exact generalized Eulerian triangles")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Number of rows to produce.
    #[arg(long, global = true, default_value_t = 8)]
    pub depth: usize,
    /// Series variable of the input; inferred from the expression when omitted.
    #[arg(long, global = true, value_enum)]
    pub var: Option<SeriesVarArg>,
    /// Substitute a rational value into the output, e.g. `r=1`. Repeatable.
    #[arg(long, global = true, value_parser = parse_subst)]
    pub subst: Vec<(Var, Rational)>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesVarArg {
    X,
    T,
}

impl From<SeriesVarArg> for SeriesVar {
    fn from(v: SeriesVarArg) -> SeriesVar {
        match v {
            SeriesVarArg::X => SeriesVar::X,
            SeriesVarArg::T => SeriesVar::T,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RowVar {
    R,
    Y,
    A,
    B,
}

impl From<RowVar> for Var {
    fn from(v: RowVar) -> Var {
        match v {
            RowVar::R => Var::R,
            RowVar::Y => Var::Y,
            RowVar::A => Var::A,
            RowVar::B => Var::B,
        }
    }
}

/// Named triangles and production matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Family {
    E1,
    E2,
    E3,
    EB,
    T1,
    T2,
    T3,
    TB,
    /// Generalized type-A moment triangle (in y).
    #[value(name = "typeA")]
    TypeA,
    /// Generalized type-B triangle (in r, with --a, --b).
    #[value(name = "typeB")]
    TypeB,
    /// Catalan-side type-B triangle (in r, with --a, --b).
    #[value(name = "typeB-catalan")]
    TypeBCatalan,
    /// T transform of the type-A moment triangle.
    A114608,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    /// Parameter a (an expression, symbolic by default).
    #[arg(long, default_value = "a")]
    pub a: String,
    /// Parameter b (an expression, symbolic by default).
    #[arg(long, default_value = "b")]
    pub b: String,
}

#[derive(Args, Debug)]
pub struct TriangleSource {
    /// Generating function to expand.
    #[arg(long, group = "source")]
    pub expr: Option<String>,
    #[arg(long, group = "source", value_enum, ignore_case = true)]
    pub family: Option<Family>,
    /// Name of a bundled fixture table.
    #[arg(long, group = "source")]
    pub fixture: Option<String>,
    #[arg(long, value_enum)]
    pub row_var: Option<RowVar>,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecialProduction {
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    #[value(name = "egf-to-ogf")]
    EgfToOgf,
    #[value(name = "ogf-to-egf")]
    OgfToEgf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TFamily {
    #[value(name = "typeA")]
    TypeA,
    #[value(name = "typeB")]
    TypeB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RiordanAction {
    Build,
    Invert,
    Az,
    Prodmat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ordinary,
    Exponential,
}

#[derive(Subcommand, Debug)]
pub enum OeisAction {
    /// Print the terms of a sequence.
    Fetch { anumber: String },
    /// Compare terms against a sequence.
    Compare {
        anumber: String,
        /// Comma-separated integers.
        #[arg(long)]
        terms: String,
    },
}

#[derive(Args, Debug)]
pub struct OeisOptions {
    /// Use only the cache and the bundled data.
    #[arg(long, conflicts_with = "online")]
    pub offline: bool,
    /// Query the remote endpoint even for bundled sequences.
    #[arg(long)]
    pub online: bool,
    /// Base URL of the OEIS server.
    #[arg(long, default_value = eulerforge_oeis::DEFAULT_BASE_URL)]
    pub oeis_url: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a generating function into its coefficient triangle.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        row_var: Option<RowVar>,
    },
    /// Production matrix of a triangle (or of its inverse).
    Prodmat {
        #[command(flatten)]
        source: TriangleSource,
        #[arg(long)]
        invert: bool,
    },
    /// Triangle generated by a production matrix.
    Frompm {
        /// Rows separated by ';', entries by ','.
        #[arg(long, group = "pm")]
        matrix: Option<String>,
        /// One of the special production matrices, with --a (and --b).
        #[arg(long, group = "pm", value_enum)]
        family: Option<SpecialProduction>,
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Expand a J-fraction into its coefficient triangle.
    Jfrac {
        /// Comma-separated b_0, b_1, ...
        #[arg(long = "b")]
        bseq: String,
        /// Comma-separated lambda_1, lambda_2, ...
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        row_var: Option<RowVar>,
    },
    /// Recover J-fraction coefficients from a generating function.
    Unjfrac {
        #[arg(long)]
        expr: String,
    },
    /// Sumudu transform of a series in t.
    Sumudu {
        #[arg(long)]
        expr: String,
    },
    /// Inverse Sumudu transform of a series in x.
    Isumudu {
        #[arg(long)]
        expr: String,
    },
    /// Reciprocal Sumudu pipeline between EGFs and OGFs.
    Pipeline {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        to: Option<Direction>,
        #[arg(long, value_enum)]
        row_var: Option<RowVar>,
    },
    /// T transform of a family's J-fraction.
    Ttrans {
        #[arg(long, value_enum)]
        family: TFamily,
        #[command(flatten)]
        params: Params,
    },
    /// Triangle of the Deleham construction [r_0, r_1, ...] D [s_0, s_1, ...].
    Deleham {
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
    },
    /// Riordan array operations.
    Riordan {
        #[arg(value_enum)]
        action: RiordanAction,
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
        /// Defaults to ordinary in x and exponential in t.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Check every fixture, identity and OEIS prefix.
    Verify {
        #[command(flatten)]
        oeis: OeisOptions,
        /// List every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// Look up OEIS sequences.
    Oeis {
        #[command(subcommand)]
        action: OeisAction,
        #[command(flatten)]
        oeis: OeisOptions,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => f.write_str(m),
        }
    }
}

impl From<eulerforge_core::Error> for CliError {
    fn from(e: eulerforge_core::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<crate::expr::EvalError> for CliError {
    fn from(e: crate::expr::EvalError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<eulerforge_oeis::OeisError> for CliError {
    fn from(e: eulerforge_oeis::OeisError) -> Self {
        match e {
            eulerforge_oeis::OeisError::InvalidId(_) => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_subst(s: &str) -> std::result::Result<(Var, Rational), String> {
    let (name, value) = s.split_once('=').ok_or("expected sym=value")?;
    let var: Var = name.trim().parse().map_err(|_| format!("unknown symbol '{name}'"))?;
    let value = parse_rational(value.trim()).map_err(|e| e.to_string())?;
    Ok((var, value))
}

fn parse_expr(src: &str) -> CliResult<Expr> {
    parse(src).map_err(|e| CliError::Usage(format!("expression '{src}': {e}")))
}

/// An expression free of `x` and `t`, as an exact scalar.
pub fn parse_scalar(src: &str) -> std::result::Result<ExactScalar, String> {
    let e = parse(src).map_err(|e| format!("'{src}': {e}"))?;
    if e.symbols().iter().any(|s| s.parameter().is_none()) {
        return Err(format!("'{src}' must not contain x or t"));
    }
    let s = eval_to_series(&e, SeriesVar::X, 0).map_err(|e| e.to_string())?;
    Ok(s.constant_term().clone())
}

fn scalar_list(src: &str) -> CliResult<Vec<ExactScalar>> {
    src.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_scalar(p).map_err(CliError::Usage))
        .collect()
}

fn rational_list(src: &str) -> CliResult<Vec<Rational>> {
    scalar_list(src)?
        .into_iter()
        .map(|s| {
            s.as_rational()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("'{s}' is not a rational number")))
        })
        .collect()
}

fn params(p: &Params) -> CliResult<(ExactScalar, ExactScalar)> {
    let a = parse_scalar(&p.a).map_err(CliError::Usage)?;
    let b = parse_scalar(&p.b).map_err(CliError::Usage)?;
    Ok((a, b))
}

fn series_var(common: &Common, e: &Expr) -> SeriesVar {
    if let Some(v) = common.var {
        return v.into();
    }
    let syms = e.symbols();
    if syms.contains(&Symbol::T) && !syms.contains(&Symbol::X) {
        SeriesVar::T
    } else {
        SeriesVar::X
    }
}

/// The explicit choice, else `r`, `y`, `a`, `b` in that order of preference.
fn row_var(explicit: Option<RowVar>, s: &PowerSeries) -> Var {
    if let Some(v) = explicit {
        return v.into();
    }
    let present: Vec<Var> = s.coeffs().iter().flat_map(ExactScalar::variables).collect();
    [Var::R, Var::Y, Var::A, Var::B].into_iter().find(|v| present.contains(v)).unwrap_or(Var::R)
}

/// Triangle of a series: ordinary coefficients in x, `n!`-scaled in t.
fn series_triangle(s: &PowerSeries, v: Var, depth: usize) -> CliResult<Triangle> {
    let ordinary = match s.var() {
        SeriesVar::X => s.clone(),
        SeriesVar::T => PowerSeries::new(SeriesVar::X, egf_numbers(s)?),
    };
    Ok(triangle_from_gf(&ordinary, v, depth)?)
}

fn expand(common: &Common, src: &str, rv: Option<RowVar>) -> CliResult<Triangle> {
    let e = parse_expr(src)?;
    let var = series_var(common, &e);
    let s = eval_to_series(&e, var, common.depth.saturating_sub(1))?;
    series_triangle(&s, row_var(rv, &s), common.depth)
}

fn family_triangle(family: Family, p: &Params, depth: usize) -> CliResult<Triangle> {
    let (a, b) = params(p)?;
    let t = match family {
        Family::E1 => gallery::egf_triangle(EgfName::E1, depth)?,
        Family::E2 => gallery::egf_triangle(EgfName::E2, depth)?,
        Family::E3 => gallery::egf_triangle(EgfName::E3, depth)?,
        Family::EB => gallery::egf_triangle(EgfName::EB, depth)?,
        Family::T1 => gallery::pipeline_triangle(EgfName::E1, depth)?,
        Family::T2 => gallery::pipeline_triangle(EgfName::E2, depth)?,
        Family::T3 => gallery::pipeline_triangle(EgfName::E3, depth)?,
        Family::TB => gallery::pipeline_triangle(EgfName::EB, depth)?,
        Family::TypeA => gallery::type_a_generalized(depth)?,
        Family::TypeB => gallery::type_b_generalized(&a, &b, depth)?,
        Family::TypeBCatalan => gallery::type_b_catalan(&a, &b, depth)?,
        Family::A114608 => gallery::type_a_t_transformed(depth)?,
    };
    Ok(t)
}

fn source_triangle(common: &Common, src: &TriangleSource) -> CliResult<Triangle> {
    match (&src.expr, src.family, &src.fixture) {
        (Some(e), _, _) => expand(common, e, src.row_var),
        (_, Some(f), _) => family_triangle(f, &src.params, common.depth),
        (_, _, Some(name)) => {
            let table = gallery::fixture(name).ok_or_else(|| CliError::Usage(format!("no fixture named '{name}'")))?;
            match &table.data {
                gallery::FixtureData::Triangle(t) => Ok(t.clone()),
                gallery::FixtureData::Production(p) => Ok(triangle_from_production(p, p.size())?),
            }
        }
        _ => Err(CliError::Usage("one of --expr, --family or --fixture is required".into())),
    }
}

fn parse_matrix(src: &str) -> CliResult<ProductionMatrix> {
    let mut rows: Vec<Vec<ExactScalar>> = src
        .split(';')
        .filter(|r| !r.trim().is_empty())
        .map(scalar_list)
        .collect::<CliResult<_>>()?;
    let size = rows.len();
    for (i, row) in rows.iter_mut().enumerate() {
        if row.len() > size {
            return Err(CliError::Usage(format!("row {i} has more than {size} entries")));
        }
        row.resize(size, ExactScalar::zero());
    }
    ProductionMatrix::new(rows).map_err(|e| CliError::Usage(e.to_string()))
}

fn jfrac_table(j: &JFractionData) -> Table {
    Table::labelled(vec![("b".into(), j.b.clone()), ("lambda".into(), j.lambda.clone())])
}

fn series_table(s: &PowerSeries) -> Table {
    let v = s.var();
    Table::labelled(
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| (format!("{v}^{n}"), vec![c.clone()]))
            .collect(),
    )
}

fn riordan(common: &Common, action: RiordanAction, g: &str, f: &str, kind: Option<KindArg>) -> CliResult<Table> {
    let (ge, fe) = (parse_expr(g)?, parse_expr(f)?);
    let var = common.var.map(SeriesVar::from).unwrap_or_else(|| {
        let syms = [ge.symbols(), fe.symbols()].concat();
        if syms.contains(&Symbol::T) && !syms.contains(&Symbol::X) {
            SeriesVar::T
        } else {
            SeriesVar::X
        }
    });
    let kind = match kind {
        Some(KindArg::Ordinary) => RiordanKind::Ordinary,
        Some(KindArg::Exponential) => RiordanKind::Exponential,
        None if var == SeriesVar::T => RiordanKind::Exponential,
        None => RiordanKind::Ordinary,
    };
    let depth = common.depth;
    let order = depth + 1;
    let arr = RiordanArray::new(kind, eval_to_series(&ge, var, order)?, eval_to_series(&fe, var, order)?)?;
    let table = match action {
        RiordanAction::Build => Table::new(arr.to_triangle(depth)?.rows().to_vec()),
        RiordanAction::Invert => Table::new(arr.inverse()?.to_triangle(depth)?.rows().to_vec()),
        RiordanAction::Az => {
            let az = arr.az_sequences()?;
            let take = |s: &PowerSeries| s.coeffs().iter().take(depth).cloned().collect();
            Table::labelled(vec![("A".into(), take(&az.a)), ("Z".into(), take(&az.z))])
        }
        RiordanAction::Prodmat => Table::new(arr.production_matrix(depth)?.rows().to_vec()),
    };
    Ok(table)
}

fn oeis_client(opts: &OeisOptions) -> OeisClient {
    let client = if opts.offline { OeisClient::offline() } else { OeisClient::new() };
    client.with_base_url(&opts.oeis_url)
}

fn integer_list(src: &str) -> CliResult<Vec<num_bigint::BigInt>> {
    eulerforge_oeis::parse_terms(src).map_err(CliError::Usage)
}

fn execute(cli: &Cli) -> CliResult<(i32, String)> {
    let common = &cli.common;
    let depth = common.depth;
    let table = match &cli.command {
        Command::Expand { expr, row_var } => Table::new(expand(common, expr, *row_var)?.rows().to_vec()),
        Command::Prodmat { source, invert } => {
            let mut t = source_triangle(common, source)?;
            if *invert {
                t = t.invert()?;
            }
            Table::new(production_from_triangle(&t)?.rows().to_vec())
        }
        Command::Frompm { matrix, family, invert, params: p } => {
            let pm = match (matrix, family) {
                (Some(m), _) => parse_matrix(m)?,
                (_, Some(SpecialProduction::TypeA)) => type_a_production(&params(p)?.0, depth.min(7))?,
                (_, Some(SpecialProduction::TypeB)) => {
                    let (a, b) = params(p)?;
                    type_b_production(&a, &b, depth)
                }
                _ => return Err(CliError::Usage("one of --matrix or --family is required".into())),
            };
            let mut t = triangle_from_production(&pm, depth.min(pm.size()))?;
            if *invert {
                t = t.invert()?;
            }
            Table::new(t.rows().to_vec())
        }
        Command::Jfrac { bseq, lambda, row_var: rv } => {
            let j = JFractionData::new(scalar_list(bseq)?, scalar_list(lambda)?);
            let order = depth.saturating_sub(1).min(j.determined_order());
            let s = jfrac_to_series(&j, order)?;
            Table::new(triangle_from_gf(&s, row_var(*rv, &s), order + 1)?.rows().to_vec())
        }
        Command::Unjfrac { expr } => {
            let e = parse_expr(expr)?;
            let s = eval_to_series(&e, SeriesVar::X, 2 * depth + 1)?;
            jfrac_table(&series_to_jfrac(&s, depth)?)
        }
        Command::Sumudu { expr } => {
            let s = eval_to_series(&parse_expr(expr)?, SeriesVar::T, depth.saturating_sub(1))?;
            series_table(&sumudu(&s)?)
        }
        Command::Isumudu { expr } => {
            let s = eval_to_series(&parse_expr(expr)?, SeriesVar::X, depth.saturating_sub(1))?;
            series_table(&inverse_sumudu(&s)?)
        }
        Command::Pipeline { expr, to, row_var: rv } => {
            let e = parse_expr(expr)?;
            let direction = to.unwrap_or(match series_var(common, &e) {
                SeriesVar::T => Direction::EgfToOgf,
                SeriesVar::X => Direction::OgfToEgf,
            });
            let order = depth.saturating_sub(1);
            let out = match direction {
                Direction::EgfToOgf => egf_to_ogf_pipeline(&eval_to_series(&e, SeriesVar::T, order)?)?,
                Direction::OgfToEgf => ogf_to_egf_pipeline(&eval_to_series(&e, SeriesVar::X, order)?)?,
            };
            Table::new(series_triangle(&out, row_var(*rv, &out), depth)?.rows().to_vec())
        }
        Command::Ttrans { family, params: p } => {
            let t = match family {
                TFamily::TypeA => gallery::type_a_t_transformed(depth)?,
                TFamily::TypeB => {
                    let (a, b) = params(p)?;
                    gallery::type_b_catalan_via_t(&a, &b, depth)?
                }
            };
            Table::new(t.rows().to_vec())
        }
        Command::Deleham { r, s } => {
            let (rs, ss) = (rational_list(r)?, rational_list(s)?);
            Table::new(deleham(&rs, &ss, depth)?.rows().to_vec())
        }
        Command::Riordan { action, g, f, kind } => riordan(common, *action, g, f, *kind)?,
        Command::Verify { oeis, verbose } => {
            let client = oeis_client(oeis);
            let source = if oeis.online { OeisSource::Remote } else { OeisSource::Local };
            let report = run_verify(&client, source);
            let mut out = String::new();
            for c in &report.checks {
                if *verbose || !c.passed {
                    let mark = if c.passed { "ok  " } else { "FAIL" };
                    let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
                    out.push_str(&format!("{mark} {}{detail}\n", c.name));
                }
            }
            out.push_str(&report.summary());
            out.push('\n');
            let status = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            return Ok((status, out));
        }
        Command::Oeis { action, oeis } => {
            let client = oeis_client(oeis);
            let fetch = |id: &str| if oeis.online { client.fetch_remote(id) } else { client.fetch(id) };
            match action {
                OeisAction::Fetch { anumber } => {
                    let rec = fetch(anumber)?;
                    let terms: Vec<String> = rec.terms.iter().map(ToString::to_string).collect();
                    return Ok((EXIT_OK, format!("{} ({})\n{}\n", rec.anumber, rec.source, terms.join(","))));
                }
                OeisAction::Compare { anumber, terms } => {
                    let computed = integer_list(terms)?;
                    if computed.is_empty() {
                        return Err(CliError::Usage("--terms must list at least one integer".into()));
                    }
                    let report = compare(&computed, &fetch(anumber)?);
                    let status = if report.is_match() { EXIT_OK } else { EXIT_VERIFY_FAILED };
                    let out = format!(
                        "{}: {} (offset {}, {} of {} terms matched)\n",
                        report.anumber,
                        report.verdict,
                        report.offset,
                        report.matched,
                        computed.len()
                    );
                    return Ok((status, out));
                }
            }
        }
    };
    let table = substitute(table, &common.subst)?;
    Ok((EXIT_OK, table.render(common.format)))
}

fn substitute(mut table: Table, subst: &[(Var, Rational)]) -> CliResult<Table> {
    for (v, value) in subst {
        for row in table.rows.iter_mut() {
            for c in row.iter_mut() {
                *c = c.substitute_rational(*v, value)?;
            }
        }
    }
    Ok(table)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { status, stdout: String::new(), stderr: text }
            } else {
                CommandResult { status, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((status, stdout)) => CommandResult { status, stdout, stderr: String::new() },
        Err(e) => {
            let status = match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Compute(_) => EXIT_COMPUTATION,
            };
            CommandResult { status, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}
