use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use serde_json::Value;

use crate::bundled::bundled;
use crate::cache::Cache;
use crate::record::{parse_anumber, parse_terms, SequenceRecord, Source};
use crate::{OeisError, Result};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

pub struct OeisClient {
    base_url: String,
    cache: Option<Cache>,
    offline: bool,
    min_interval: Duration,
    last_request: Mutex<Option<Instant>>,
    agent: ureq::Agent,
}

impl Default for OeisClient {
    fn default() -> Self {
        OeisClient::new()
    }
}

impl OeisClient {
    /// Online client against oeis.org, caching under `EULERFORGE_CACHE` when set.
    pub fn new() -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(30)))
            .build()
            .into();
        OeisClient {
            base_url: DEFAULT_BASE_URL.to_string(),
            cache: Cache::from_env(),
            offline: false,
            min_interval: Duration::from_secs(1),
            last_request: Mutex::new(None),
            agent,
        }
    }

    pub fn offline() -> Self {
        OeisClient { offline: true, ..OeisClient::new() }
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into().trim_end_matches('/').to_string();
        self
    }

    pub fn with_cache(mut self, cache: Option<Cache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn with_min_interval(mut self, interval: Duration) -> Self {
        self.min_interval = interval;
        self
    }

    pub fn is_offline(&self) -> bool {
        self.offline
    }

    pub fn cache(&self) -> Option<&Cache> {
        self.cache.as_ref()
    }

    /// Cache, then bundled data, then the remote endpoint.
    pub fn fetch(&self, anumber: &str) -> Result<SequenceRecord> {
        let id = parse_anumber(anumber)?;
        if let Some(cache) = &self.cache {
            if let Some(rec) = cache.load(&id)? {
                return Ok(rec);
            }
        }
        if let Some(rec) = bundled(&id) {
            return Ok(rec);
        }
        if self.offline {
            return Err(OeisError::Unavailable { anumber: id });
        }
        self.fetch_remote(&id)
    }

    /// Always queries the endpoint and refreshes the cache entry.
    pub fn fetch_remote(&self, anumber: &str) -> Result<SequenceRecord> {
        let id = parse_anumber(anumber)?;
        if self.offline {
            return Err(OeisError::Unavailable { anumber: id });
        }
        self.wait_turn();
        let url = format!("{}/search?q=id:{id}&fmt=json", self.base_url);
        let network = |e: ureq::Error| OeisError::Network { anumber: id.clone(), message: e.to_string() };
        let body = self
            .agent
            .get(&url)
            .call()
            .map_err(network)?
            .body_mut()
            .read_to_string()
            .map_err(network)?;
        let terms = parse_search_response(&body)
            .map_err(|message| OeisError::Malformed { anumber: id.clone(), message })?;
        let rec = SequenceRecord::new(&id, terms, Source::Remote)?;
        if let Some(cache) = &self.cache {
            cache.store(&rec)?;
        }
        Ok(rec)
    }

    fn wait_turn(&self) {
        let mut last = self.last_request.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(prev) = *last {
            let elapsed = prev.elapsed();
            if elapsed < self.min_interval {
                thread::sleep(self.min_interval - elapsed);
            }
        }
        *last = Some(Instant::now());
    }
}

/// Terms from the `data` field of the first search result. Accepts both a
/// bare result array and an object with a `results` array.
pub fn parse_search_response(body: &str) -> std::result::Result<Vec<num_bigint::BigInt>, String> {
    let json: Value = serde_json::from_str(body).map_err(|e| format!("invalid JSON: {e}"))?;
    let results = match &json {
        Value::Array(items) => items.as_slice(),
        Value::Object(map) => match map.get("results") {
            Some(Value::Array(items)) => items.as_slice(),
            _ => &[],
        },
        _ => &[],
    };
    let first = results.first().ok_or("no search results")?;
    let data = first.get("data").and_then(Value::as_str).ok_or("result without a data field")?;
    let terms = parse_terms(data)?;
    if terms.is_empty() {
        return Err("empty data field".into());
    }
    Ok(terms)
}
