//! Truncated power series with big-integer coefficients.

use rug::Integer;

use crate::error::{Error, Result};

/// A power series `Σ c_n q^n` known exactly for `0 <= n <= order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<Integer>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Integer::new(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Integer::from(1);
        s
    }

    /// Builds a series from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&Integer> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    /// Sum truncated at the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| Integer::from(a + b))
            .collect();
        Self { coeffs }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if *b != 0 {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse. Integer coefficients are preserved only when
    /// the constant term is a unit, so anything else is rejected.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if *c0 != 1 && *c0 != -1 {
            return Err(Error::InvalidInvert(c0.to_string()));
        }
        let unit = c0.clone();
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = unit.clone();
        for n in 1..=order {
            let mut acc = Integer::new();
            for i in 1..=n {
                if self.coeffs[i] != 0 {
                    acc += &self.coeffs[i] * &out.coeffs[n - i];
                }
            }
            // c0 * out_n = -acc, and c0 = ±1 is its own inverse
            out.coeffs[n] = -(acc * &unit);
        }
        Ok(out)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// Coefficients of `(q;q)_∞^k` through `q^order`, for any integer `k`.
///
/// The product `∏(1 - q^n)` is expanded factor by factor, then raised to
/// `|k|` and inverted when `k < 0`. This deliberately avoids the pentagonal
/// number theorem so it can serve as an independent check on
/// [`crate::partition::partition_table`].
pub fn eta_power_series(k: i64, order: usize) -> Result<IntSeries> {
    let mut eta = IntSeries::one(order);
    for n in 1..=order {
        // multiply in place by (1 - q^n), walking downward
        for i in (n..=order).rev() {
            let (lo, hi) = eta.coeffs.split_at_mut(i);
            if lo[i - n] != 0 {
                hi[0] -= &lo[i - n];
            }
        }
    }
    let magnitude = u32::try_from(k.unsigned_abs())
        .map_err(|_| Error::InvalidArgument(format!("eta exponent {k} is too large")))?;
    let powered = eta.pow(magnitude);
    if k < 0 {
        powered.invert()
    } else {
        Ok(powered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn euler_pentagonal_coefficients() {
        let eta = eta_power_series(1, 15).unwrap();
        assert_eq!(
            eta.coeffs(),
            ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]).as_slice()
        );
    }

    #[test]
    fn inverse_eta_is_partition_numbers() {
        let p = eta_power_series(-1, 12).unwrap();
        assert_eq!(p.coeffs(), ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]).as_slice());
    }

    #[test]
    fn two_colored_partitions() {
        let p2 = eta_power_series(-2, 6).unwrap();
        assert_eq!(p2.coeffs(), ints(&[1, 2, 5, 10, 20, 36, 65]).as_slice());
    }

    #[test]
    fn small_arithmetic() {
        let a = IntSeries::from_coeffs(ints(&[1, 1]));
        let b = IntSeries::from_coeffs(ints(&[1, -1]));
        assert_eq!(a.mul(&b).coeffs(), ints(&[1, 0]).as_slice());
        assert_eq!(a.add(&b).coeffs(), ints(&[2, 0]).as_slice());
        let geometric = IntSeries::from_coeffs(ints(&[1, -1, 0, 0])).invert().unwrap();
        assert_eq!(geometric.coeffs(), ints(&[1, 1, 1, 1]).as_slice());
        let sq = IntSeries::from_coeffs(ints(&[1, 1, 0])).pow(2);
        assert_eq!(sq.coeffs(), ints(&[1, 2, 1]).as_slice());
        assert_eq!(eta_power_series(0, 5).unwrap(), IntSeries::one(5));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let s = IntSeries::from_coeffs(ints(&[2, 1]));
        assert!(matches!(s.invert(), Err(Error::InvalidInvert(_))));
    }

    #[test]
    fn invert_round_trip() {
        let s = IntSeries::from_coeffs(ints(&[-1, 3, 0, -7, 2]));
        let prod = s.mul(&s.invert().unwrap());
        assert_eq!(prod, IntSeries::one(4));
    }
}
