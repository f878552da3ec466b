//! Corpus ingestion and the on-disk invariant cache.
//!
//! A corpus is a text file with one graph6 string per line. Blank lines and
//! lines starting with `#` are skipped. Exact duplicate lines are dropped from
//! the entry list but reported so callers can warn about them.
//!
//! The cache is a tab-separated file of `graph6<TAB>invariant<TAB>value`
//! rows, where the invariant column uses [`InvariantId`]'s display form such
//! as `alpha` or `gamma_k:2`. New values are appended on save, so a cache file
//! can be shared across runs and grown incrementally.

use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};
use crate::invariants::{self, InvariantError, InvariantId};
use std::collections::{HashMap, HashSet};
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// The connected graphs on at most seven vertices, embedded so the CLI
/// selftest can run without any external files.
pub const EMBEDDED_SELFTEST_CORPUS: &str = include_str!("../corpora/connected_le7.g6");

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("empty corpus")]
    Empty,
}

/// One parsed corpus line.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// 1-based line number in the source text.
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

/// A parsed corpus with duplicate lines split out.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// graph6 strings that appeared more than once, in first-repeat order.
    pub duplicates: Vec<String>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|e| &e.graph)
    }
}

/// Parse a corpus from text, failing on the first malformed line.
pub fn parse_corpus(text: &str) -> Result<Corpus, CorpusError> {
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    let mut duplicates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(line).map_err(|source| CorpusError::Parse {
            line: idx + 1,
            source,
        })?;
        if !seen.insert(line.to_string()) {
            duplicates.push(line.to_string());
            continue;
        }
        entries.push(CorpusEntry {
            line: idx + 1,
            graph6: line.to_string(),
            graph,
        });
    }
    if entries.is_empty() {
        return Err(CorpusError::Empty);
    }
    Ok(Corpus {
        entries,
        duplicates,
    })
}

/// Read and parse a corpus file.
pub fn load_corpus(path: &Path) -> Result<Corpus, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_corpus(&text)
}

/// Invariant values keyed by graph6 string, optionally backed by a TSV file.
#[derive(Debug, Default)]
pub struct CorpusCache {
    path: Option<PathBuf>,
    values: HashMap<(String, String), usize>,
    pending: Vec<(String, String, usize)>,
    pub hits: u64,
    pub misses: u64,
}

impl CorpusCache {
    /// A purely in-memory cache.
    pub fn in_memory() -> CorpusCache {
        CorpusCache::default()
    }

    /// A cache backed by `path`. Existing rows are loaded; the file is
    /// created on the first [`CorpusCache::persist`] if missing. Malformed
    /// rows are ignored rather than fatal, since the cache is advisory.
    pub fn open(path: &Path) -> std::io::Result<CorpusCache> {
        let mut cache = CorpusCache {
            path: Some(path.to_path_buf()),
            ..CorpusCache::default()
        };
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for line in text.lines() {
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let mut parts = line.split('\t');
                    let (Some(g6), Some(inv), Some(val)) =
                        (parts.next(), parts.next(), parts.next())
                    else {
                        continue;
                    };
                    if let Ok(value) = val.parse::<usize>() {
                        cache
                            .values
                            .insert((g6.to_string(), inv.to_string()), value);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Cache-only probe. Counts a hit when the key is present; callers that
    /// compute the value themselves report it back through
    /// [`CorpusCache::record`].
    pub fn lookup(&mut self, graph6: &str, id: InvariantId) -> Option<usize> {
        let value = self
            .values
            .get(&(graph6.to_string(), id.to_string()))
            .copied();
        if value.is_some() {
            self.hits += 1;
        }
        value
    }

    /// Stores a freshly computed value for appending on the next
    /// [`CorpusCache::persist`]. Values are immutable once present, so a
    /// repeat key is ignored.
    pub fn record(&mut self, graph6: &str, id: InvariantId, value: usize) {
        let key = (graph6.to_string(), id.to_string());
        if self.values.contains_key(&key) {
            return;
        }
        self.misses += 1;
        self.pending.push((key.0.clone(), key.1.clone(), value));
        self.values.insert(key, value);
    }

    /// Look up `(graph6, invariant)`, computing and recording on a miss.
    pub fn get_or_compute(
        &mut self,
        graph6: &str,
        graph: &Graph,
        id: InvariantId,
    ) -> Result<usize, InvariantError> {
        if let Some(value) = self.lookup(graph6, id) {
            return Ok(value);
        }
        let value = invariants::invariant_value(graph, id)?;
        self.record(graph6, id, value);
        Ok(value)
    }

    /// Append newly computed rows to the backing file, if any.
    pub fn persist(&mut self) -> std::io::Result<()> {
        let Some(path) = &self.path else {
            self.pending.clear();
            return Ok(());
        };
        if self.pending.is_empty() {
            return Ok(());
        }
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)?;
        for (g6, inv, value) in self.pending.drain(..) {
            writeln!(file, "{g6}\t{inv}\t{value}")?;
        }
        Ok(())
    }
}
