//! Edge-list ingestion.
//!
//! One edge per line, two integer vertex ids separated by whitespace. Lines
//! whose first non-blank character is `#` are comments. Tokens after the
//! second are ignored so weighted dumps load unchanged.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Reads raw `(source, target)` id pairs, in file order, without any
/// deduplication.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>> {
    let mut edges = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let source = parse_id(tokens.next(), line_no)?;
        let target = parse_id(tokens.next(), line_no)?;
        edges.push((source, target));
    }
    Ok(edges)
}

pub fn read_edge_list_file<P: AsRef<Path>>(path: P) -> Result<Vec<(u64, u64)>> {
    let file = File::open(path)?;
    read_edge_list(BufReader::new(file))
}

fn parse_id(token: Option<&str>, line: usize) -> Result<u64> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: "expected two vertex ids".to_string(),
    })?;
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid vertex id `{token}`"),
    })
}

/// Writes pairs in the same format `read_edge_list` accepts.
pub fn write_edge_list<W, I>(mut writer: W, edges: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = (u64, u64)>,
{
    for (u, v) in edges {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

/// Maps sparse external ids onto dense `0..n` ids in ascending id order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdMap {
    external: Vec<u64>,
}

impl IdMap {
    pub fn from_ids(mut ids: Vec<u64>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        IdMap { external: ids }
    }

    pub fn identity(n: usize) -> Self {
        IdMap {
            external: (0..n as u64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.external.len()
    }

    pub fn is_empty(&self) -> bool {
        self.external.is_empty()
    }

    pub fn dense(&self, external: u64) -> Option<usize> {
        self.external.binary_search(&external).ok()
    }

    pub fn external(&self, dense: usize) -> u64 {
        self.external[dense]
    }
}
