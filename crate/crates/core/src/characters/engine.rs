use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use super::weights::{g_coeff, wtbar, GVariant};
use crate::combinatorics::{strip_data, subpartitions, Partition};
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

type Key = (usize, Partition, Partition);

/// Memoized Murnaghan-Nakayama recursion for `χ^{(n)}_{(λ,|λ|)}(T̂_μ)`.
///
/// The memo is safe to share across threads. With a cache directory set,
/// [`MnEngine::load`] and [`MnEngine::save`] persist it between runs.
pub struct MnEngine {
    variant: GVariant,
    memo: RwLock<HashMap<Key, LaurentScalar>>,
    cache_dir: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    n: usize,
    lambda: Partition,
    mu: Partition,
    value: LaurentScalar,
}

/// The directory named by `MIRHECKE_CACHE`, or `.mirhecke-cache`.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os("MIRHECKE_CACHE").map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".mirhecke-cache"))
}

impl MnEngine {
    pub fn new(variant: GVariant) -> Self {
        Self { variant, memo: RwLock::new(HashMap::new()), cache_dir: None }
    }

    /// An engine backed by `dir`, preloaded with whatever is cached there.
    pub fn with_cache_dir(variant: GVariant, dir: impl Into<PathBuf>) -> Result<Self> {
        let mut e = Self::new(variant);
        e.cache_dir = Some(dir.into());
        e.load()?;
        Ok(e)
    }

    pub fn variant(&self) -> GVariant {
        self.variant
    }

    fn cache_file(&self) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("mn-{}.json", self.variant)))
    }

    pub fn load(&self) -> Result<usize> {
        let Some(path) = self.cache_file() else { return Ok(0) };
        if !path.exists() {
            return Ok(0);
        }
        let entries: Vec<CacheEntry> = serde_json::from_str(&fs::read_to_string(&path)?)?;
        let mut memo = self.memo.write();
        let count = entries.len();
        for e in entries {
            memo.insert((e.n, e.lambda, e.mu), e.value);
        }
        Ok(count)
    }

    /// Writes the memo to the cache directory, replacing the file atomically.
    pub fn save(&self) -> Result<()> {
        let Some(path) = self.cache_file() else { return Ok(()) };
        let dir = path.parent().unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let mut entries: Vec<CacheEntry> = self
            .memo
            .read()
            .iter()
            .map(|((n, lambda, mu), value)| CacheEntry { n: *n, lambda: lambda.clone(), mu: mu.clone(), value: value.clone() })
            .collect();
        entries.sort_by(|a, b| (a.n, &a.lambda, &a.mu).cmp(&(b.n, &b.lambda, &b.mu)));
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entries)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn character(&self, n: usize, lambda: &Partition, mu: &Partition) -> Result<LaurentScalar> {
        if lambda.size() > n || mu.size() > n {
            return Err(Error::SizeMismatch(format!("|{lambda}| and |{mu}| must be at most n = {n}")));
        }
        self.character_unchecked(n, lambda, mu)
    }

    fn character_unchecked(&self, n: usize, lambda: &Partition, mu: &Partition) -> Result<LaurentScalar> {
        let key = (n, lambda.clone(), mu.clone());
        if let Some(v) = self.memo.read().get(&key) {
            return Ok(v.clone());
        }
        let value = match mu.last_part() {
            None => {
                if lambda.is_empty() {
                    LaurentScalar::one()
                } else {
                    LaurentScalar::zero()
                }
            }
            Some(m) => self.recurse(n, lambda, m, &mu.without_last())?,
        };
        self.memo.write().insert(key, value.clone());
        Ok(value)
    }

    fn recurse(&self, n: usize, lambda: &Partition, m: usize, rest: &Partition) -> Result<LaurentScalar> {
        let mut acc = LaurentScalar::zero();
        for nu in subpartitions(lambda) {
            let d = strip_data(lambda, &nu)?;
            if !d.is_strip || d.size > m || nu.size() > n - m {
                continue;
            }
            let inner = self.character_unchecked(n - m, &nu, rest)?;
            if inner.is_zero() {
                continue;
            }
            acc += &(&(&g_coeff(d.size, m, self.variant)? * &wtbar(lambda, &nu)?) * &inner);
        }
        Ok(acc)
    }

    /// The same recursion, but stripping the part at position `pos` of `μ`
    /// first and then always the last part. Unmemoized; used to confirm that
    /// the order of removal does not matter.
    pub fn character_removing(&self, n: usize, lambda: &Partition, mu: &Partition, pos: usize) -> Result<LaurentScalar> {
        let m = *mu.parts().get(pos).ok_or_else(|| Error::OutOfRange(format!("{mu} has no part {pos}")))?;
        let rest = mu.without_part(m).expect("part exists");
        self.recurse(n, lambda, m, &rest)
    }
}
