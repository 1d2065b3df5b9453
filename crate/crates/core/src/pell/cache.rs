//! Persistent memo of fundamental solutions.
//!
//! File format: one record per line, `n rhs x y` in decimal. Records are
//! re-verified against `x^2 - n y^2 = rhs` when loaded and again on every
//! lookup; anything that fails is dropped and recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{fundamental, FundamentalSource, PellError, PellSolution, Rhs};
use crate::scalar::IntScalar;

pub struct PellCache<T: IntScalar> {
    path: Option<PathBuf>,
    entries: Mutex<BTreeMap<(T, Rhs), (T, T)>>,
}

impl<T: IntScalar> PellCache<T> {
    /// A cache that never touches the filesystem.
    pub fn in_memory() -> Self {
        PellCache {
            path: None,
            entries: Mutex::new(BTreeMap::new()),
        }
    }

    /// Load `path` if it exists. Unreadable lines are skipped, never trusted.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = BTreeMap::new();
        match fs::read_to_string(&path) {
            Ok(text) => {
                for line in text.lines() {
                    if let Some((key, val)) = parse_line::<T>(line) {
                        entries.insert(key, val);
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(PellCache {
            path: Some(path),
            entries: Mutex::new(entries),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lookup(&self, n: &T, rhs: Rhs) -> Option<PellSolution<T>> {
        let entries = self.entries.lock().expect("cache lock");
        let (x, y) = entries.get(&(n.clone(), rhs))?;
        PellSolution::new(x.clone(), y.clone(), n.clone(), rhs)
    }

    /// Record a solution and rewrite the file atomically.
    pub fn store(&self, sol: &PellSolution<T>) -> io::Result<()> {
        let mut entries = self.entries.lock().expect("cache lock");
        entries.insert(
            (sol.n().clone(), sol.rhs()),
            (sol.x().clone(), sol.y().clone()),
        );
        if let Some(path) = &self.path {
            write_atomic(path, &entries)?;
        }
        Ok(())
    }
}

impl<T: IntScalar> FundamentalSource<T> for PellCache<T> {
    fn fundamental(&self, n: &T, rhs: Rhs) -> Result<Option<PellSolution<T>>, PellError> {
        if let Some(hit) = self.lookup(n, rhs) {
            return Ok(Some(hit));
        }
        let fresh = fundamental(n, rhs)?;
        if let Some(sol) = &fresh {
            // a failed write only costs a recomputation next time
            let _ = self.store(sol);
        }
        Ok(fresh)
    }
}

fn parse_line<T: IntScalar>(line: &str) -> Option<((T, Rhs), (T, T))> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 4 {
        return None;
    }
    let n = T::from_str_radix(fields[0], 10).ok()?;
    let rhs = Rhs::from_value(fields[1].parse().ok()?)?;
    let x = T::from_str_radix(fields[2], 10).ok()?;
    let y = T::from_str_radix(fields[3], 10).ok()?;
    PellSolution::new(x.clone(), y.clone(), n.clone(), rhs)?;
    Some(((n, rhs), (x, y)))
}

fn write_atomic<T: IntScalar>(path: &Path, entries: &BTreeMap<(T, Rhs), (T, T)>) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    for ((n, rhs), (x, y)) in entries {
        writeln!(tmp, "{n} {rhs} {x} {y}")?;
    }
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
