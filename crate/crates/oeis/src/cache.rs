use std::collections::HashMap;
use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::record::{SequenceRecord, Source};
use crate::{OeisError, Result};

pub const CACHE_ENV: &str = "EULERFORGE_CACHE";

/// One `<A-number>.txt` file per sequence under a directory.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

fn io_err(path: &Path, source: std::io::Error) -> OeisError {
    OeisError::Io { path: path.to_path_buf(), source }
}

/// Process-wide lock per identifier, so writers of one file never interleave.
fn id_lock(anumber: &str) -> Arc<Mutex<()>> {
    static LOCKS: OnceLock<Mutex<HashMap<String, Arc<Mutex<()>>>>> = OnceLock::new();
    let mut map = LOCKS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    map.entry(anumber.to_string()).or_default().clone()
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The directory named by `EULERFORGE_CACHE`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, anumber: &str) -> PathBuf {
        self.dir.join(format!("{anumber}.txt"))
    }

    pub fn load(&self, anumber: &str) -> Result<Option<SequenceRecord>> {
        let path = self.path_for(anumber);
        match fs::read_to_string(&path) {
            Ok(text) => {
                let rec = SequenceRecord::from_text(&text, Source::Cache)?;
                if rec.anumber != anumber {
                    return Err(OeisError::Malformed {
                        anumber: anumber.to_string(),
                        message: format!("cache file {} holds {}", path.display(), rec.anumber),
                    });
                }
                Ok(Some(rec))
            }
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io_err(&path, e)),
        }
    }

    /// Writes to a temporary sibling and renames it into place.
    pub fn store(&self, record: &SequenceRecord) -> Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        fs::create_dir_all(&self.dir).map_err(|e| io_err(&self.dir, e))?;
        let lock = id_lock(&record.anumber);
        let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
        let path = self.path_for(&record.anumber);
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            record.anumber,
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, record.to_text()).map_err(|e| io_err(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| {
            let _ = fs::remove_file(&tmp);
            io_err(&path, e)
        })
    }
}
