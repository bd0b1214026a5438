//! Exact tables of `p_k(n)`, the number of partitions of `n` with parts in
//! `k` colours (`p_1 = p`).

use rug::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    k: u32,
    values: Vec<Integer>,
}

impl PartitionTable {
    /// Wraps precomputed values. Used by the cache loader; no recurrence
    /// check is performed.
    pub fn from_values(k: u32, values: Vec<Integer>) -> Self {
        assert!(k >= 1 && !values.is_empty());
        Self { k, values }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    /// `p_k(n)`, with the convention `p_k(n) = 0` for `n < 0`.
    pub fn get(&self, n: i64) -> Result<&Integer> {
        static ZERO: Integer = Integer::ZERO;
        if n < 0 {
            return Ok(&ZERO);
        }
        self.values.get(n as usize).ok_or(Error::TableTooShort {
            needed: n as u64,
            available: self.max_n(),
        })
    }

    pub fn require(&self, n: u64) -> Result<()> {
        if n > self.max_n() {
            Err(Error::TableTooShort { needed: n, available: self.max_n() })
        } else {
            Ok(())
        }
    }
}

/// Generalised pentagonal numbers `j(3j∓1)/2` paired with their sign,
/// in increasing order, up to `limit`.
fn pentagonal_offsets(limit: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for j in 1usize.. {
        let first = j * (3 * j - 1) / 2;
        if first > limit {
            break;
        }
        let positive = j % 2 == 1;
        out.push((first, positive));
        let second = j * (3 * j + 1) / 2;
        if second <= limit {
            out.push((second, positive));
        }
    }
    out
}

/// Exact `p_k(n)` for `0 <= n <= max_n`.
///
/// Uses `(q;q)_∞ · P_k = P_{k-1}` with the pentagonal number theorem, so
/// `p_k(n) = p_{k-1}(n) + Σ_j (-1)^{j-1} [p_k(n - j(3j-1)/2) + p_k(n - j(3j+1)/2)]`
/// starting from `p_0 = δ_0`. Each colour costs `O(N^{3/2})` big additions.
pub fn partition_table(k: u32, max_n: u64) -> PartitionTable {
    assert!(k >= 1, "colour count must be positive");
    let len = max_n as usize + 1;
    let offsets = pentagonal_offsets(len - 1);
    let mut prev: Vec<Integer> = vec![Integer::new(); len];
    prev[0] = Integer::from(1);
    for _ in 0..k {
        let mut cur: Vec<Integer> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = prev[n].clone();
            for &(off, positive) in &offsets {
                if off > n {
                    break;
                }
                if positive {
                    acc += &cur[n - off];
                } else {
                    acc -= &cur[n - off];
                }
            }
            cur.push(acc);
        }
        prev = cur;
    }
    PartitionTable { k, values: prev }
}
