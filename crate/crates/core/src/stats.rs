//! Exact statistics built from alternating quadratic sums
//!
//! `S_f(a,b;X) = Σ_{ℓ≥1, aℓ²+bℓ≤X} (-1)^{ℓ-1} f(X - aℓ² - bℓ)`
//!
//! with `f = p_k`. Half-integer `a`, `b` are carried doubled so every
//! exponent stays integral.

use std::fmt;
use std::str::FromStr;

use rug::Integer;

use crate::error::{Error, Result};
use crate::partition::PartitionTable;

/// `S_f(a2/2, b2/2; x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadSumSpec {
    a2: i64,
    b2: i64,
    x: u64,
}

impl QuadSumSpec {
    pub fn new(a2: i64, b2: i64, x: u64) -> Result<Self> {
        if a2 < 1 {
            return Err(Error::InvalidArgument(format!("a2 must be positive, got {a2}")));
        }
        if (a2 + b2).rem_euclid(2) != 0 {
            return Err(Error::InvalidArgument(format!(
                "a2 = {a2}, b2 = {b2}: a*l^2 + b*l is not integral"
            )));
        }
        Ok(Self { a2, b2, x })
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }

    pub fn b2(&self) -> i64 {
        self.b2
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    /// `aℓ² + bℓ`.
    pub fn exponent(&self, l: i64) -> i128 {
        let l = l as i128;
        (self.a2 as i128 * l * l + self.b2 as i128 * l) / 2
    }
}

/// Evaluates `S_f` exactly. Terms with `X - (aℓ²+bℓ) < 0` vanish; terms with
/// a negative exponent (possible only when `b < -a`) reach past `X` and need
/// the table to extend that far.
pub fn alt_quad_sum(f: &PartitionTable, spec: QuadSumSpec) -> Result<Integer> {
    f.require(spec.x)?;
    let x = spec.x as i128;
    // beyond the vertex the exponent increases, so the first overshoot ends the sum
    let vertex = (-spec.b2).max(0) / (2 * spec.a2) + 1;
    let mut acc = Integer::new();
    let mut l: i64 = 1;
    loop {
        let e = spec.exponent(l);
        if e > x {
            if l >= vertex {
                break;
            }
        } else {
            let idx = x - e;
            let value = f.get(i64::try_from(idx).map_err(|_| Error::InvalidArgument("index overflow".into()))?)?;
            if l % 2 == 1 {
                acc += value;
            } else {
                acc -= value;
            }
        }
        l += 1;
    }
    Ok(acc)
}

/// `Δ^J g(0) = Σ_j (-1)^{J-j} C(J,j) g(j)`.
pub fn forward_difference(order: usize, samples: &[Integer]) -> Integer {
    assert!(samples.len() > order, "need {} samples for a difference of order {order}", order + 1);
    let mut acc = Integer::new();
    let mut binom = Integer::from(1);
    for j in 0..=order {
        let term = Integer::from(&binom * &samples[j]);
        if (order - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        binom *= (order - j) as u64;
        binom /= (j + 1) as u64;
    }
    acc
}

/// Rises weakly to a peak then falls weakly. The reported peak is the
/// leftmost maximum.
pub fn unimodal_check<T: PartialOrd>(seq: &[T]) -> (bool, usize) {
    assert!(!seq.is_empty());
    let mut peak = 0;
    for (i, v) in seq.iter().enumerate() {
        if *v > seq[peak] {
            peak = i;
        }
    }
    let rising = seq[..=peak].windows(2).all(|w| w[0] <= w[1]);
    let falling = seq[peak..].windows(2).all(|w| w[0] >= w[1]);
    (rising && falling, peak)
}

fn check_colours(f: &PartitionTable, k: u32) -> Result<()> {
    if f.k() != k {
        return Err(Error::InvalidArgument(format!(
            "statistic needs a k={k} table, got k={}",
            f.k()
        )));
    }
    Ok(())
}

/// `S_{p_k}(1/2, b2/2; n)` sampled at `b2 = base_b2 - 2u` for `u = 0..=order`,
/// then differenced.
fn shifted_difference(f: &PartitionTable, base_b2: i64, n: u64, order: usize) -> Result<Integer> {
    let samples = (0..=order)
        .map(|u| alt_quad_sum(f, QuadSumSpec::new(1, base_b2 - 2 * u as i64, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(forward_difference(order, &samples))
}

/// `j_{m,k}(n - m·1_{m>0}) = S_{p_k}(1/2, |m| - 1/2; n)`.
pub fn j_coeff(m: i64, k: u32, n: u64, f: &PartitionTable) -> Result<Integer> {
    check_colours(f, k)?;
    alt_quad_sum(f, QuadSumSpec::new(1, 2 * m.abs() - 1, n)?)
}

/// `a_{m,k}(n) = Δ_u S_{p_k}(1/2, |m| + 1/2 - u; n)` at `u = 0`.
pub fn a_coeff(m: i64, k: u32, n: u64, f: &PartitionTable) -> Result<Integer> {
    check_colours(f, k)?;
    shifted_difference(f, 2 * m.abs() + 1, n, 1)
}

/// `b_{m,k}(n) = Δ²_u S_{p_k}(1/2, m + 3/2 - u; n)` at `u = 0`, for `m >= 0`.
pub fn b_coeff(m: i64, k: u32, n: u64, f: &PartitionTable) -> Result<Integer> {
    if m < 0 {
        return Err(Error::NegativeM(m));
    }
    check_colours(f, k)?;
    shifted_difference(f, 2 * m + 3, n, 2)
}

fn check_plain(p: &PartitionTable) -> Result<()> {
    if p.k() != 1 {
        return Err(Error::InvalidArgument(format!(
            "rank-type statistics need the ordinary partition table, got k={}",
            p.k()
        )));
    }
    Ok(())
}

/// `I_k(m,n) = S_p(k - 1/2, m - 1/2; n)` for `m >= 0`.
pub fn i_coeff(k: u32, m: i64, n: u64, p: &PartitionTable) -> Result<Integer> {
    if m < 0 || k == 0 {
        return Err(Error::InvalidArgument(format!("I_k(m,n) needs k >= 1 and m >= 0 (k={k}, m={m})")));
    }
    check_plain(p)?;
    alt_quad_sum(p, QuadSumSpec::new(2 * k as i64 - 1, 2 * m - 1, n)?)
}

/// `N_k(m,n) = I_k(|m|,n) - I_k(|m|+1,n)`. `N_1` is the crank count and
/// `N_2` the rank count; at `n = 1` this gives the generating-series values
/// `N_1(0,1) = -1`, `N_1(±1,1) = 1`.
pub fn n_coeff(k: u32, m: i64, n: u64, p: &PartitionTable) -> Result<Integer> {
    let m = m.abs();
    Ok(i_coeff(k, m, n, p)? - i_coeff(k, m + 1, n, p)?)
}

/// `N_k(m,n) - N_k(m+1,n)`.
pub fn n_diff_coeff(k: u32, m: i64, n: u64, p: &PartitionTable) -> Result<Integer> {
    Ok(n_coeff(k, m, n, p)? - n_coeff(k, m + 1, n, p)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    J,
    A,
    B,
    I,
    N,
    NDiff,
    Crank,
    Rank,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::J,
        Family::A,
        Family::B,
        Family::I,
        Family::N,
        Family::NDiff,
        Family::Crank,
        Family::Rank,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::J => "J",
            Family::A => "A",
            Family::B => "B",
            Family::I => "I",
            Family::N => "N",
            Family::NDiff => "NDIFF",
            Family::Crank => "CRANK",
            Family::Rank => "RANK",
        }
    }

    /// Whether the statistic is built from `p_k` (true) or from `p` with `k`
    /// entering through the quadratic (false).
    pub fn uses_colored_table(&self) -> bool {
        matches!(self, Family::J | Family::A | Family::B)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// One statistic at one point. For `J` the value is `j_{m,k}(n - m·1_{m>0})`;
/// `CRANK` and `RANK` are `N_1` and `N_2` and ignore `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StatisticId {
    pub family: Family,
    pub m: i64,
    pub k: u32,
    pub n: u64,
}

impl StatisticId {
    pub fn new(family: Family, m: i64, k: u32, n: u64) -> Self {
        Self { family, m, k, n }
    }

    /// Colour count of the partition table the exact value is computed from.
    pub fn table_colours(&self) -> u32 {
        if self.family.uses_colored_table() {
            self.k
        } else {
            1
        }
    }

    /// Effective rank parameter for the `N`-type families.
    pub fn rank_k(&self) -> u32 {
        match self.family {
            Family::Crank => 1,
            Family::Rank => 2,
            _ => self.k,
        }
    }

    pub fn exact(&self, table: &PartitionTable) -> Result<Integer> {
        let StatisticId { family, m, k, n } = *self;
        match family {
            Family::J => j_coeff(m, k, n, table),
            Family::A => a_coeff(m, k, n, table),
            Family::B => b_coeff(m, k, n, table),
            Family::I => i_coeff(k, m, n, table),
            Family::N | Family::Crank | Family::Rank => n_coeff(self.rank_k(), m, n, table),
            Family::NDiff => n_diff_coeff(k, m, n, table),
        }
    }
}
