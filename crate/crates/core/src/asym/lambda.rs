//! Shift coefficients `λ_{n,j}` with
//!
//! `f(X+r)/f(X) ~ e^{βr/(2√X)} Σ_j (r X^{-3/4})^j Σ_n λ_{n,j} X^{-n/4}`.
//!
//! They come from two formal expansions: the exponential of
//! `β√X(√(1+r/X) - 1 - r/(2X))`, giving `d_{k,ℓ}`, and the ratio of the
//! `γ`-series at `X+r` and `X`, giving `c_{g,h}`.

use rug::Float;

use super::gen_binomial;
use super::profile::GrowthProfile;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct LambdaTable {
    /// `entries[n][j]`
    entries: Vec<Vec<Float>>,
}

impl LambdaTable {
    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn max_j(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn get(&self, n: usize, j: usize) -> &Float {
        &self.entries[n][j]
    }
}

/// `λ_{n,j}` for `n <= max_n`, `j <= max_j`. Needs `γ_0..γ_{⌊max_n/2⌋}`.
pub fn lambda_table(profile: &GrowthProfile, max_n: usize, max_j: usize) -> Result<LambdaTable> {
    let needed = max_n / 2 + 1;
    if profile.gamma().len() < needed {
        return Err(Error::GammaTooShort { needed, available: profile.gamma().len() });
    }
    Ok(lambda_table_padded(profile, max_n, max_j))
}

/// As [`lambda_table`], with unknown `γ_n` taken as zero.
pub(crate) fn lambda_table_padded(profile: &GrowthProfile, max_n: usize, max_j: usize) -> LambdaTable {
    let bits = profile.precision().bits_with_guard(64);
    let max_h = max_n / 2;
    let max_l = max_j / 2;

    // d_{k,ℓ} = β^ℓ/ℓ! [t^k] (Σ_{h≥0} C(1/2, h+2) t^h)^ℓ
    let half = Float::with_val(bits, 0.5);
    let inner: Vec<Float> = (0..=max_j as u32).map(|h| gen_binomial(&half, h + 2, bits)).collect();
    let mut d = vec![vec![Float::new(bits); max_l + 1]; max_j + 1];
    let mut power = vec![Float::new(bits); max_j + 1];
    power[0] = Float::with_val(bits, 1);
    let mut scale = Float::with_val(bits, 1);
    for l in 0..=max_l {
        if l > 0 {
            power = truncated_mul(&power, &inner, max_j, bits);
            scale *= profile.beta();
            scale /= l as u32;
        }
        for k in 0..=max_j {
            d[k][l] = Float::with_val(bits, &power[k] * &scale);
        }
    }

    // c_{g,h} = [w^h] (Σ γ_n w^n)^{-1} (Σ C(-n/2 - α, g) γ_n w^n)
    let gamma: Vec<Float> = (0..=max_h).map(|n| Float::with_val(bits, profile.gamma_or_zero(n))).collect();
    let gamma_inv = truncated_inverse(&gamma, bits);
    let mut c = vec![vec![Float::new(bits); max_h + 1]; max_j + 1];
    for g in 0..=max_j {
        let weighted: Vec<Float> = gamma
            .iter()
            .enumerate()
            .map(|(n, gm)| {
                let x = Float::with_val(bits, Float::with_val(bits, -(n as f64) / 2.0) - profile.alpha());
                gen_binomial(&x, g as u32, bits) * gm
            })
            .collect();
        c[g] = truncated_mul(&gamma_inv, &weighted, max_h, bits);
    }

    // λ_{n,j} = Σ_{ℓ ≤ j/2} Σ_{k+g = j-2ℓ} c_{g,h} d_{k,ℓ}, h = ℓ + (n-j)/2
    let mut entries = vec![vec![Float::new(bits); max_j + 1]; max_n + 1];
    for (n, row) in entries.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if (n + j) % 2 == 1 {
                continue;
            }
            let mut acc = Float::new(bits);
            for l in 0..=j / 2 {
                let h = l as i64 + (n as i64 - j as i64) / 2;
                if h < 0 {
                    continue;
                }
                let h = h as usize;
                for k in 0..=(j - 2 * l) {
                    let g = j - 2 * l - k;
                    acc += Float::with_val(bits, &c[g][h] * &d[k][l]);
                }
            }
            *cell = acc;
        }
    }
    LambdaTable { entries }
}

fn truncated_mul(a: &[Float], b: &[Float], order: usize, bits: u32) -> Vec<Float> {
    let mut out = vec![Float::new(bits); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += Float::with_val(bits, x * y);
        }
    }
    out
}

fn truncated_inverse(a: &[Float], bits: u32) -> Vec<Float> {
    let mut out = vec![Float::new(bits); a.len()];
    out[0] = Float::with_val(bits, a[0].recip_ref());
    for n in 1..a.len() {
        let mut acc = Float::new(bits);
        for i in 1..=n {
            acc += Float::with_val(bits, &a[i] * &out[n - i]);
        }
        out[n] = -acc * &out[0];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;
    use crate::precision::Precision;
    use proptest::prelude::*;

    fn test_profile(alpha: f64, gamma: &[f64]) -> GrowthProfile {
        let prec = Precision::default();
        GrowthProfile::new(
            prec.float(2.3),
            prec.float(alpha),
            gamma.iter().map(|&g| prec.float(g)).collect(),
            "test",
            prec,
        )
        .unwrap()
    }

    fn close(a: &Float, b: f64) -> bool {
        (a.to_f64() - b).abs() <= 1e-14 * b.abs().max(1.0)
    }

    #[test]
    fn leading_values() {
        let profile = test_profile(0.75, &[1.3, -0.2, 0.4]);
        let table = lambda_table(&profile, 4, 4).unwrap();
        assert!(close(table.get(0, 0), 1.0));
        assert!(close(table.get(1, 1), -0.75));
        assert!(close(table.get(0, 2), -2.3 / 8.0));
        for n in 1..=4 {
            assert!(table.get(n, 0).is_zero() || table.get(n, 0).to_f64().abs() < 1e-50);
        }
    }

    #[test]
    fn strict_table_needs_gamma() {
        let profile = test_profile(1.0, &[1.0]);
        assert!(matches!(
            lambda_table(&profile, 2, 2),
            Err(Error::GammaTooShort { needed: 2, available: 1 })
        ));
        assert!(lambda_table(&profile, 1, 5).is_ok());
    }

    /// Brute-force check of the full expansion: for `f = e^{β√X} X^{-α}(γ0 + γ1/√X)`
    /// exactly, `f(X+r)/f(X)` should match the λ-series to the truncation order.
    #[test]
    fn series_reproduces_shifted_ratio() {
        let prec = Precision::default();
        let profile = test_profile(1.1, &[0.9, 0.35, -0.2]);
        let table = lambda_table(&profile, 5, 7).unwrap();
        let bits = prec.bits();
        let x = prec.float(1e8);
        let r = prec.float(3.0);
        let exact = Float::with_val(bits, profile.eval(&Float::with_val(bits, &x + &r)) / profile.eval(&x));
        let mut series = Float::new(bits);
        let x_q = Float::with_val(bits, x.clone().pow(0.25_f64).recip());
        for j in 0..=7usize {
            for n in 0..=5usize {
                let term = Float::with_val(bits, table.get(n, j) * Float::with_val(bits, &r * x_q.clone().pow(3)).pow(j as u32))
                    * Float::with_val(bits, x_q.clone().pow(n as u32));
                series += term;
            }
        }
        let exp = (Float::with_val(bits, profile.beta() * &r) / Float::with_val(bits, 2 * Float::with_val(bits, x.sqrt_ref()))).exp();
        series *= exp;
        let rel = Float::with_val(bits, (series - &exact) / &exact).abs().to_f64();
        // first omitted terms are O(X^{-6/4})
        assert!(rel < 1e-11, "rel = {rel}");
    }

    proptest! {
        #[test]
        fn parity_zeros(alpha in -2.0f64..2.0, g1 in -1.0f64..1.0, g2 in -1.0f64..1.0) {
            let profile = test_profile(alpha, &[1.0, g1, g2, 0.3]);
            let table = lambda_table(&profile, 6, 6).unwrap();
            for n in 0..=6 {
                for j in 0..=6 {
                    if (n + j) % 2 == 1 {
                        prop_assert!(table.get(n, j).is_zero());
                    }
                }
            }
        }
    }
}
