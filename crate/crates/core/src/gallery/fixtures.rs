//! Transcribed tables.
//!
//! Each fixture file has `key: value` header lines (`name`, `kind`,
//! `anchor`), a blank line, then one matrix row per line with entries
//! separated by spaces. Triangles list only the lower-triangular part;
//! production matrices list full square rows.

use std::sync::OnceLock;

use crate::algebra::ExactScalar;
use crate::error::{Error, Result};
use crate::triangle::{ProductionMatrix, Triangle};

const SOURCES: &[&str] = &[
    include_str!("../../fixtures/E3.txt"),
    include_str!("../../fixtures/T1.txt"),
    include_str!("../../fixtures/T2.txt"),
    include_str!("../../fixtures/T3.txt"),
    include_str!("../../fixtures/EB.txt"),
    include_str!("../../fixtures/TB.txt"),
    include_str!("../../fixtures/TB_binomial.txt"),
    include_str!("../../fixtures/TB_correction.txt"),
    include_str!("../../fixtures/prodmat_T3inv.txt"),
    include_str!("../../fixtures/prodmat_TBinv.txt"),
    include_str!("../../fixtures/prodmat_typeA_a2.txt"),
    include_str!("../../fixtures/prodmat_typeA.txt"),
    include_str!("../../fixtures/prodmat_typeA_a0.txt"),
    include_str!("../../fixtures/typeA_generalized.txt"),
    include_str!("../../fixtures/A114608.txt"),
    include_str!("../../fixtures/prodmat_typeB.txt"),
    include_str!("../../fixtures/typeB_inverse.txt"),
    include_str!("../../fixtures/typeB_generalized.txt"),
    include_str!("../../fixtures/typeB_factorial_0_1.txt"),
    include_str!("../../fixtures/typeB_factorial_1_1.txt"),
    include_str!("../../fixtures/typeB_factorial_1_2.txt"),
    include_str!("../../fixtures/typeB_catalan_0_0.txt"),
    include_str!("../../fixtures/typeB_catalan_0_1.txt"),
    include_str!("../../fixtures/typeB_catalan_1_1.txt"),
    include_str!("../../fixtures/typeB_catalan_1_2.txt"),
    include_str!("../../fixtures/typeB_catalan_3_4.txt"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureData {
    Triangle(Triangle),
    Production(ProductionMatrix),
}

impl FixtureData {
    pub fn rows(&self) -> &[Vec<ExactScalar>] {
        match self {
            FixtureData::Triangle(t) => t.rows(),
            FixtureData::Production(p) => p.rows(),
        }
    }

    pub fn as_triangle(&self) -> Option<&Triangle> {
        match self {
            FixtureData::Triangle(t) => Some(t),
            FixtureData::Production(_) => None,
        }
    }

    pub fn as_production(&self) -> Option<&ProductionMatrix> {
        match self {
            FixtureData::Production(p) => Some(p),
            FixtureData::Triangle(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureTable {
    pub name: String,
    pub anchor: String,
    pub data: FixtureData,
}

impl FixtureTable {
    pub fn triangle(&self) -> &Triangle {
        self.data.as_triangle().expect("triangle fixture")
    }

    pub fn production(&self) -> &ProductionMatrix {
        self.data.as_production().expect("production fixture")
    }
}

pub fn parse_fixture(text: &str) -> Result<FixtureTable> {
    let (header, body) = text
        .split_once("\n\n")
        .ok_or_else(|| Error::Parse("fixture needs a blank line after the header".into()))?;
    let mut name = None;
    let mut kind = None;
    let mut anchor = String::new();
    for line in header.lines() {
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad header line '{line}'")))?;
        match key.trim() {
            "name" => name = Some(value.trim().to_string()),
            "kind" => kind = Some(value.trim().to_string()),
            "anchor" => anchor = value.trim().to_string(),
            other => return Err(Error::Parse(format!("unknown header key '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| Error::Parse("fixture without name".into()))?;
    let rows = body
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<ExactScalar>>>())
        .collect::<Result<Vec<_>>>()?;
    let data = match kind.as_deref() {
        Some("triangle") => FixtureData::Triangle(Triangle::from_rows(rows)?),
        Some("production") => FixtureData::Production(ProductionMatrix::new(rows)?),
        other => return Err(Error::Parse(format!("unknown fixture kind {other:?}"))),
    };
    Ok(FixtureTable { name, anchor, data })
}

/// All transcribed tables, parsed once.
pub fn fixtures() -> &'static [FixtureTable] {
    static TABLES: OnceLock<Vec<FixtureTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        SOURCES
            .iter()
            .map(|s| parse_fixture(s).expect("bundled fixture parses"))
            .collect()
    })
}

pub fn fixture(name: &str) -> Option<&'static FixtureTable> {
    fixtures().iter().find(|f| f.name == name)
}
