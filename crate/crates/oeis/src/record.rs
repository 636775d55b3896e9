use std::fmt;

use num_bigint::BigInt;

use crate::{OeisError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Remote,
    Cache,
    Bundled,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Remote => "remote",
            Source::Cache => "cache",
            Source::Bundled => "bundled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub anumber: String,
    pub terms: Vec<BigInt>,
    pub source: Source,
}

impl SequenceRecord {
    pub fn new(anumber: &str, terms: Vec<BigInt>, source: Source) -> Result<Self> {
        let anumber = parse_anumber(anumber)?;
        if terms.is_empty() {
            return Err(OeisError::Malformed { anumber, message: "no terms".into() });
        }
        Ok(SequenceRecord { anumber, terms, source })
    }

    /// The `id` line followed by the comma-separated terms.
    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self.terms.iter().map(BigInt::to_string).collect();
        format!("{}\n{}\n", self.anumber, terms.join(","))
    }

    pub fn from_text(text: &str, source: Source) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let id = lines.next().unwrap_or_default();
        let anumber = parse_anumber(id)?;
        let terms = parse_terms(lines.next().unwrap_or_default()).map_err(|message| {
            OeisError::Malformed { anumber: anumber.clone(), message }
        })?;
        SequenceRecord::new(&anumber, terms, source)
    }
}

/// Normalizes `A000108` style identifiers; a lowercase `a` is accepted.
pub fn parse_anumber(s: &str) -> Result<String> {
    let s = s.trim();
    let digits = s
        .strip_prefix('A')
        .or_else(|| s.strip_prefix('a'))
        .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()))
        .ok_or_else(|| OeisError::InvalidId(s.to_string()))?;
    Ok(format!("A{digits}"))
}

pub fn parse_terms(s: &str) -> std::result::Result<Vec<BigInt>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>().map_err(|e| format!("bad term '{t}': {e}")))
        .collect()
}
