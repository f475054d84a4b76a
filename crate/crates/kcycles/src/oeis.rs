//! OEIS b-file client with a local cache.
//!
//! b-files are plain text, one `index value` pair per line, with `#`
//! comment lines. The client reads from a cache directory first and
//! only goes to the network on a cache miss (never with `offline`).
//! Cached files are stored verbatim as downloaded.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::count_kcycle_perms;
use crate::error::{Error, Result};
use crate::expectation::expected_first_letter;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "KCYCLES_OEIS_CACHE";

/// Where the terms of a sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheSource {
    Remote,
    CachedFile,
}

/// A sequence id plus its b-file terms, verbatim.
#[derive(Debug, Clone)]
pub struct OeisSequence {
    pub id: String,
    pub terms: Vec<(i64, BigInt)>,
    pub source: CacheSource,
}

/// Normalize an id like "A354" or "a000354" to "A000354".
pub fn normalize_id(id: &str) -> Result<String> {
    let rest = id
        .strip_prefix('A')
        .or_else(|| id.strip_prefix('a'))
        .ok_or_else(|| Error::Oeis(format!("sequence id '{id}' must start with 'A'")))?;
    if rest.is_empty() || rest.len() > 6 || !rest.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::Oeis(format!("sequence id '{id}' is not A followed by digits")));
    }
    Ok(format!("A{rest:0>6}"))
}

/// The b-file name for a sequence id: `A000354` -> `b000354.txt`.
pub fn b_file_name(id: &str) -> Result<String> {
    let normalized = normalize_id(id)?;
    Ok(format!("b{}.txt", &normalized[1..]))
}

/// Parse b-file text: `index value` lines, `#` comments, blank lines.
pub fn parse_b_file(id: &str, text: &str) -> Result<Vec<(i64, BigInt)>> {
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let index: i64 = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| Error::Oeis(format!("{id}: bad index on line {}", lineno + 1)))?;
        let value: BigInt = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| Error::Oeis(format!("{id}: bad value on line {}", lineno + 1)))?;
        if fields.next().is_some() {
            return Err(Error::Oeis(format!(
                "{id}: trailing fields on line {}",
                lineno + 1
            )));
        }
        terms.push((index, value));
    }
    if terms.is_empty() {
        return Err(Error::Oeis(format!("{id}: b-file has no terms")));
    }
    Ok(terms)
}

#[derive(Debug, Clone)]
pub struct OeisClient {
    cache_dir: PathBuf,
    offline: bool,
}

impl OeisClient {
    pub fn new(cache_dir: impl Into<PathBuf>, offline: bool) -> Self {
        OeisClient {
            cache_dir: cache_dir.into(),
            offline,
        }
    }

    /// Cache directory resolution: explicit override, then the
    /// `KCYCLES_OEIS_CACHE` environment variable, then `data/oeis`.
    pub fn from_env(override_dir: Option<PathBuf>, offline: bool) -> Self {
        let cache_dir = override_dir
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("data/oeis"));
        OeisClient::new(cache_dir, offline)
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    fn cache_path(&self, id: &str) -> Result<PathBuf> {
        Ok(self.cache_dir.join(b_file_name(id)?))
    }

    /// Fetch a sequence's b-file, cache-first.
    pub fn fetch(&self, id: &str) -> Result<OeisSequence> {
        let id = normalize_id(id)?;
        let path = self.cache_path(&id)?;
        if path.is_file() {
            let text = fs::read_to_string(&path)
                .map_err(|e| Error::Oeis(format!("cannot read cache {}: {e}", path.display())))?;
            return Ok(OeisSequence {
                terms: parse_b_file(&id, &text)?,
                id,
                source: CacheSource::CachedFile,
            });
        }
        if self.offline {
            return Err(Error::Oeis(format!(
                "no cached b-file at {} and --offline forbids the network; \
                 place the file there or drop --offline",
                path.display()
            )));
        }
        let text = download_b_file(&id)?;
        let terms = parse_b_file(&id, &text)?;
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)
                .map_err(|e| Error::Oeis(format!("cannot create cache dir: {e}")))?;
        }
        fs::write(&path, &text)
            .map_err(|e| Error::Oeis(format!("cannot write cache {}: {e}", path.display())))?;
        Ok(OeisSequence {
            id,
            terms,
            source: CacheSource::Remote,
        })
    }
}

fn download_b_file(id: &str) -> Result<String> {
    let url = format!("https://oeis.org/{id}/{}", b_file_name(id)?);
    let mut response = ureq::get(&url)
        .call()
        .map_err(|e| Error::Oeis(format!("GET {url} failed: {e}")))?;
    let mut text = String::new();
    response
        .body_mut()
        .as_reader()
        .read_to_string(&mut text)
        .map_err(|e| Error::Oeis(format!("reading {url} failed: {e}")))?;
    Ok(text)
}

/// Denominators (in lowest terms) of the expected first letter at
/// `m = 0`, over the rows `n = k, 2k, ..., <= n_max`. For `k = 2`
/// these are the interesting denominators of the expectation table.
pub fn expectation_denominators(k: u64, n_max: u64) -> Result<Vec<BigInt>> {
    let mut denominators = Vec::new();
    let mut n = k;
    while n <= n_max {
        if !count_kcycle_perms(n, 0, k).is_zero() {
            denominators.push(expected_first_letter(n, 0, k)?.denom().clone());
        }
        n += k;
    }
    Ok(denominators)
}

/// The best positional alignment of `values` against the b-file terms:
/// the offset into `terms` maximizing the matched prefix length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alignment {
    pub offset: usize,
    pub matched: usize,
    pub total: usize,
}

pub fn align_prefix(values: &[BigInt], terms: &[(i64, BigInt)]) -> Alignment {
    let mut best = Alignment {
        offset: 0,
        matched: 0,
        total: values.len(),
    };
    for offset in 0..terms.len() {
        let matched = values
            .iter()
            .zip(terms[offset..].iter())
            .take_while(|(v, (_, t))| *v == t)
            .count();
        if matched > best.matched {
            best = Alignment {
                offset,
                matched,
                total: values.len(),
            };
        }
    }
    best
}
