//! Sequence lookup against the OEIS.
//!
//! Lookups try the local cache, then the data bundled with this crate, then
//! the remote JSON search endpoint. A client built with
//! [`OeisClient::offline`] never touches the network.

mod bundled;
mod cache;
mod client;
mod compare;
mod record;

pub use bundled::{bundled, bundled_ids};
pub use cache::{Cache, CACHE_ENV};
pub use client::{parse_search_response, OeisClient, DEFAULT_BASE_URL};
pub use compare::{compare, MatchReport, Verdict};
pub use record::{parse_anumber, parse_terms, SequenceRecord, Source};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("'{0}' is not an A-number (expected A followed by six digits)")]
    InvalidId(String),
    #[error("{anumber}: not cached, not bundled, and the client is offline")]
    Unavailable { anumber: String },
    #[error("network request for {anumber} failed: {message}")]
    Network { anumber: String, message: String },
    #[error("malformed response for {anumber}: {message}")]
    Malformed { anumber: String, message: String },
    #[error("cache i/o on {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, OeisError>;
