use std::fmt;

use num_bigint::BigInt;

use crate::record::SequenceRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    FullPrefixMatch,
    MismatchAt(usize),
    InsufficientTerms,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::FullPrefixMatch => f.write_str("full-prefix-match"),
            Verdict::MismatchAt(i) => write!(f, "mismatch-at({i})"),
            Verdict::InsufficientTerms => f.write_str("insufficient-terms"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub anumber: String,
    pub computed: Vec<BigInt>,
    /// Leading computed terms that agree with the record at `offset`.
    pub matched: usize,
    pub offset: usize,
    pub verdict: Verdict,
}

impl MatchReport {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::FullPrefixMatch
    }
}

fn align(computed: &[BigInt], terms: &[BigInt], offset: usize) -> (usize, Verdict) {
    let available = terms.get(offset..).unwrap_or_default();
    let matched = computed.iter().zip(available).take_while(|(a, b)| a == b).count();
    let verdict = if matched == computed.len() {
        Verdict::FullPrefixMatch
    } else if matched == available.len() {
        Verdict::InsufficientTerms
    } else {
        Verdict::MismatchAt(matched)
    };
    (matched, verdict)
}

fn rank(v: Verdict, matched: usize) -> (u8, usize) {
    match v {
        Verdict::FullPrefixMatch => (2, matched),
        Verdict::InsufficientTerms => (1, matched),
        Verdict::MismatchAt(_) => (0, matched),
    }
}

/// Aligns `computed` with the record at offsets 0 and 1 and keeps the better
/// alignment; ties go to offset 0.
pub fn compare(computed: &[BigInt], record: &SequenceRecord) -> MatchReport {
    let (mut offset, (mut matched, mut verdict)) = (0, align(computed, &record.terms, 0));
    let (m1, v1) = align(computed, &record.terms, 1);
    if rank(v1, m1) > rank(verdict, matched) {
        (offset, matched, verdict) = (1, m1, v1);
    }
    MatchReport { anumber: record.anumber.clone(), computed: computed.to_vec(), matched, offset, verdict }
}
