//! Independent routes to the exact statistics, used to cross-check the
//! alternating-sum code in [`crate::stats`].

use rug::Integer;

use crate::error::Result;
use crate::series::{eta_power_series, IntSeries};

/// Coefficients `j_{m,k}(n)` for `|m| <= m_max`, `n <= n_max`, read off a
/// direct expansion of the Lerch sum
///
/// `Σ_{t∈ℤ} (-1)^t q^{t(t+1)/2} / (1 - ζ q^t)`
///
/// (geometric in `ζ` for `t >= 0`, in `ζ^{-1}` for `t < 0`) multiplied by
/// `(q;q)_∞^{-k}`. Indices are the generating-series ones, so
/// `j_coeff(m, k, n)` corresponds to `get(m, n - m·1_{m>0})`.
#[derive(Debug, Clone)]
pub struct BiSeriesOracle {
    k: u32,
    m_max: i64,
    n_max: usize,
    rows: Vec<IntSeries>,
}

pub fn lerch_oracle(k: u32, m_max: u32, n_max: u64) -> Result<BiSeriesOracle> {
    let m_max = m_max as i64;
    let n_max = n_max as usize;
    let width = (2 * m_max + 1) as usize;
    let mut lerch: Vec<Vec<Integer>> = vec![vec![Integer::new(); n_max + 1]; width];
    let row = |m: i64| (m + m_max) as usize;

    // t >= 0: (-1)^t q^{t(t+1)/2} Σ_{u>=0} ζ^u q^{tu}
    for t in 0i64.. {
        let base = t * (t + 1) / 2;
        if base as usize > n_max {
            break;
        }
        let sign = if t % 2 == 0 { 1 } else { -1 };
        for u in 0..=m_max {
            let e = base + t * u;
            if e as usize > n_max {
                break;
            }
            lerch[row(u)][e as usize] += sign;
        }
    }
    // t = -s < 0: 1/(1 - ζ q^{-s}) = -Σ_{u>=1} ζ^{-u} q^{su}
    for s in 1i64.. {
        let base = s * (s - 1) / 2;
        if base as usize > n_max {
            break;
        }
        let sign = if s % 2 == 0 { -1 } else { 1 };
        for u in 1..=m_max {
            let e = base + s * u;
            if e as usize > n_max {
                break;
            }
            lerch[row(-u)][e as usize] += sign;
        }
    }

    let colored = eta_power_series(-(k as i64), n_max)?;
    let rows = lerch
        .into_iter()
        .map(|coeffs| IntSeries::from_coeffs(coeffs).mul(&colored))
        .collect();
    Ok(BiSeriesOracle { k, m_max, n_max, rows })
}

impl BiSeriesOracle {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m_max(&self) -> i64 {
        self.m_max
    }

    pub fn n_max(&self) -> u64 {
        self.n_max as u64
    }

    /// `j_{m,k}(n)`; zero for negative `n`. Panics outside the stored window.
    pub fn j(&self, m: i64, n: i64) -> Integer {
        assert!(m.abs() <= self.m_max && n <= self.n_max as i64, "({m}, {n}) outside oracle window");
        if n < 0 {
            return Integer::new();
        }
        self.rows[(m + self.m_max) as usize].coeffs()[n as usize].clone()
    }

    /// The value `j_coeff(m, k, n)` should return.
    pub fn j_shifted(&self, m: i64, n: u64) -> Integer {
        self.j(m, n as i64 - m.max(0))
    }

    /// `a_{m,k}(n)`, formed as `j_coeff(m) - j_coeff(m+1)` for `m >= 0` and
    /// by symmetry otherwise. Needs `|m| + 1 <= m_max`.
    pub fn a(&self, m: i64, n: u64) -> Integer {
        let m = m.abs();
        self.j_shifted(m, n) - self.j_shifted(m + 1, n)
    }

    /// `b_{m,k}(n) = a_{m,k}(n) - a_{m+1,k}(n)`, `m >= 0`.
    pub fn b(&self, m: i64, n: u64) -> Integer {
        self.a(m, n) - self.a(m + 1, n)
    }
}

/// All partitions of `n` as non-increasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Andrews–Garvan crank: the largest part when there are no ones, otherwise
/// (number of parts larger than the number of ones) minus (number of ones).
pub fn crank(parts: &[u32]) -> i64 {
    let ones = parts.iter().filter(|&&p| p == 1).count() as i64;
    if ones == 0 {
        parts.first().copied().unwrap_or(0) as i64
    } else {
        parts.iter().filter(|&&p| p as i64 > ones).count() as i64 - ones
    }
}

/// Dyson rank: largest part minus number of parts.
pub fn rank(parts: &[u32]) -> i64 {
    parts.first().copied().unwrap_or(0) as i64 - parts.len() as i64
}

/// Counts of `statistic` over the partitions of `n`, indexed by
/// `m + n` for `m` in `-n..=n`.
pub fn statistic_counts(n: u32, statistic: fn(&[u32]) -> i64) -> Vec<u64> {
    let mut counts = vec![0u64; 2 * n as usize + 1];
    for parts in partitions(n) {
        let m = statistic(&parts);
        counts[(m + n as i64) as usize] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn crank_and_rank_of_four() {
        let cranks: Vec<i64> = partitions(4).iter().map(|p| crank(p)).collect();
        assert_eq!(cranks, vec![4, 0, 2, -2, -4]);
        let ranks: Vec<i64> = partitions(4).iter().map(|p| rank(p)).collect();
        assert_eq!(ranks, vec![3, 1, 0, -1, -3]);
    }

    #[test]
    fn oracle_mass() {
        let o = lerch_oracle(1, 30, 25).unwrap();
        let p = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for n in 0..=10u64 {
            let total: Integer = (-28..=28).map(|m| o.a(m, n)).sum();
            assert_eq!(total, p[n as usize], "n = {n}");
        }
    }
}
