use std::fmt;

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::Precision;

/// Parameters of `f(X) ~ e^{β√X} X^{-α} Σ_n γ_n X^{-n/2}`.
///
/// Coefficients past the end of `gamma` are unknown. The strict
/// [`crate::asym::lambda_table`] refuses to run past them; the ratio
/// expansions treat them as zero, which only affects terms beyond the
/// order the profile can resolve anyway.
#[derive(Debug, Clone)]
pub struct GrowthProfile {
    beta: Float,
    alpha: Float,
    gamma: Vec<Float>,
    label: String,
    prec: Precision,
}

impl GrowthProfile {
    pub fn new(beta: Float, alpha: Float, gamma: Vec<Float>, label: impl Into<String>, prec: Precision) -> Result<Self> {
        if !(beta > 0) {
            return Err(Error::InvalidArgument(format!("beta must be positive, got {beta}")));
        }
        if gamma.is_empty() || !(gamma[0] > 0) {
            return Err(Error::InvalidArgument("gamma_0 must be present and positive".into()));
        }
        Ok(Self { beta, alpha, gamma, label: label.into(), prec })
    }

    /// Ordinary partitions: `β = 2π/√6`, `α = 1`, `γ_0 = 1/(4√3)` (the
    /// Hardy–Ramanujan leading term).
    pub fn partition(prec: Precision) -> Self {
        let bits = prec.bits();
        let beta = Float::with_val(bits, 2 * prec.pi() / Float::with_val(bits, 6).sqrt());
        let gamma0 = Float::with_val(bits, 4 * Float::with_val(bits, 3).sqrt()).recip();
        Self::new(beta, prec.float(1), vec![gamma0], "p", prec).expect("built-in profile is valid")
    }

    /// `k`-coloured partitions: `β = 2π√(k/6)`, with `α` and `γ` supplied by
    /// the caller.
    pub fn colored(k: u32, alpha: Float, gamma: Vec<Float>, prec: Precision) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("colour count must be positive".into()));
        }
        let bits = prec.bits();
        let beta = Float::with_val(bits, 2 * prec.pi() * Float::with_val(bits, Float::with_val(bits, k) / 6u32).sqrt());
        Self::new(beta, alpha, gamma, format!("p_{k}"), prec)
    }

    /// `β = 2π√(k/6)` alone, with `α = 0` and `γ = [1]`, for closed forms
    /// that depend on `β` only.
    pub fn colored_beta_only(k: u32, prec: Precision) -> Result<Self> {
        Self::colored(k, prec.float(0), vec![prec.float(1)], prec)
    }

    pub fn beta(&self) -> &Float {
        &self.beta
    }

    pub fn alpha(&self) -> &Float {
        &self.alpha
    }

    pub fn gamma(&self) -> &[Float] {
        &self.gamma
    }

    /// `γ_n`, zero past the known coefficients.
    pub fn gamma_or_zero(&self, n: usize) -> Float {
        self.gamma.get(n).cloned().unwrap_or_else(|| Float::new(self.prec.bits()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// The truncated asymptotic series itself; zero for `x <= 0`.
    pub fn eval(&self, x: &Float) -> Float {
        let bits = self.prec.bits_with_guard(32);
        if !(*x > 0) {
            return Float::new(self.prec.bits());
        }
        let sqrt_x = Float::with_val(bits, x.sqrt_ref());
        let mut series = Float::new(bits);
        let inv_sqrt = Float::with_val(bits, sqrt_x.recip_ref());
        let mut pow = Float::with_val(bits, 1);
        for g in &self.gamma {
            series += Float::with_val(bits, g * &pow);
            pow *= &inv_sqrt;
        }
        let growth = Float::with_val(bits, &self.beta * &sqrt_x).exp();
        let decay = Float::with_val(bits, x.ln_ref()) * &self.alpha;
        let decay = Float::with_val(bits, -decay).exp();
        Float::with_val(self.prec.bits(), growth * decay * series)
    }
}

impl fmt::Display for GrowthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (beta = {:.12}, alpha = {:.6}, {} gamma terms)",
            self.label,
            self.beta.to_f64(),
            self.alpha.to_f64(),
            self.gamma.len()
        )
    }
}
