//! Plain-text on-disk cache for partition tables.
//!
//! ```text
//! THETA-ASYM-PTABLE v1
//! k=<k> N=<N>
//! 0<TAB>1
//! ...
//! N<TAB>p_k(N)
//! sha256=<hex digest of every preceding byte>
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rug::Integer;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::{partition_table, PartitionTable};

const MAGIC: &str = "THETA-ASYM-PTABLE v1";

fn corrupt(path: &Path, reason: impl Into<String>) -> Error {
    Error::CorruptCache { path: path.to_path_buf(), reason: reason.into() }
}

pub fn encode(table: &PartitionTable) -> String {
    let mut body = String::new();
    body.push_str(MAGIC);
    body.push('\n');
    body.push_str(&format!("k={} N={}\n", table.k(), table.max_n()));
    for (n, v) in table.values().iter().enumerate() {
        body.push_str(&format!("{n}\t{v}\n"));
    }
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    body.push_str(&format!("sha256={digest}\n"));
    body
}

/// Writes the table atomically (temp file + rename).
pub fn save(path: &Path, table: &PartitionTable) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(encode(table).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Reads a table and checks it against the expected colour count.
pub fn load(path: &Path, expected_k: u32) -> Result<PartitionTable> {
    let text = fs::read_to_string(path)?;
    decode(path, &text, expected_k)
}

fn decode(path: &Path, text: &str, expected_k: u32) -> Result<PartitionTable> {
    let body_end = text
        .rfind("sha256=")
        .ok_or_else(|| corrupt(path, "missing checksum line"))?;
    let (body, trailer) = text.split_at(body_end);
    let stated = trailer["sha256=".len()..].trim_end_matches('\n');
    let actual = hex::encode(Sha256::digest(body.as_bytes()));
    if stated != actual {
        return Err(corrupt(path, "checksum mismatch"));
    }

    let mut lines = body.lines();
    if lines.next() != Some(MAGIC) {
        return Err(corrupt(path, "bad magic line"));
    }
    let header = lines.next().ok_or_else(|| corrupt(path, "missing header"))?;
    let (k, max_n) = parse_header(header).ok_or_else(|| corrupt(path, format!("bad header {header:?}")))?;
    if k != expected_k {
        return Err(corrupt(path, format!("table is for k={k}, requested k={expected_k}")));
    }

    let mut values = Vec::with_capacity(max_n as usize + 1);
    for (expected_n, line) in lines.enumerate() {
        let (n, v) = line
            .split_once('\t')
            .ok_or_else(|| corrupt(path, format!("malformed row {expected_n}")))?;
        if n.parse::<usize>().ok() != Some(expected_n) {
            return Err(corrupt(path, format!("row index {n:?}, expected {expected_n}")));
        }
        let v = Integer::from_str_radix(v, 10).map_err(|_| corrupt(path, format!("bad value in row {n}")))?;
        values.push(v);
    }
    if values.len() as u64 != max_n + 1 {
        return Err(corrupt(path, format!("expected {} rows, found {}", max_n + 1, values.len())));
    }
    Ok(PartitionTable::from_values(k, values))
}

fn parse_header(line: &str) -> Option<(u32, u64)> {
    let (k, n) = line.split_once(' ')?;
    let k = k.strip_prefix("k=")?.parse().ok()?;
    let n = n.strip_prefix("N=")?.parse().ok()?;
    Some((k, n))
}

pub fn cache_path(dir: &Path, k: u32) -> PathBuf {
    dir.join(format!("ptable-k{k}.txt"))
}

/// Returns a table for colour count `k` covering at least `max_n`, reusing a
/// cached table in `dir` when it is long enough and rebuilding (and
/// rewriting the cache) otherwise. A corrupt cache file is reported, not
/// silently replaced.
pub fn load_or_build(dir: &Path, k: u32, max_n: u64) -> Result<PartitionTable> {
    let path = cache_path(dir, k);
    if path.exists() {
        let table = load(&path, k)?;
        if table.max_n() >= max_n {
            log::debug!("partition cache hit {path:?} (N = {})", table.max_n());
            return Ok(table);
        }
        log::info!("partition cache {path:?} too short ({} < {max_n}), rebuilding", table.max_n());
    }
    let table = partition_table(k, max_n);
    save(&path, &table)?;
    Ok(table)
}
