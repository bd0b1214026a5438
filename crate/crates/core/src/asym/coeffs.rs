//! Operator coefficients.
//!
//! Small `b`: `L_g(μ,a,b,∂) = Σ_{3r+2ℓ+2s ≤ 2g} C_{r,ℓ,s}(g) a^s b^r μ^ℓ ∂^{r+ℓ+2s}`, with
//! `(-1)^s C_{r,ℓ,s}(g) = C(s+ℓ,s) Σ_{j ≤ s+ℓ, n = 2g-j-2s-2ℓ-3r ≥ 0}
//!     (β/2)^{s+ℓ-j}/(s+ℓ-j)! · C(j+r,r) λ_{n,j+r}`.
//!
//! Large `b`: `Σ_{ℓ+s ≤ g} C_{ℓ,s}(g) μ^ℓ a^s`, with
//! `(-1)^{ℓ+s} C_{ℓ,s}(g) = C(ℓ+s,s) Σ_{j ≤ ℓ+s, n = 2g-j-2(ℓ+s) ≥ 0}
//!     (β/2)^{ℓ+s-j}/(ℓ+s-j)! · λ_{n,j}`.

use std::collections::BTreeMap;

use rug::{Float, Integer};

use super::lambda::{lambda_table, lambda_table_padded, LambdaTable};
use super::profile::GrowthProfile;
use crate::error::Result;

pub type CentralCoeffs = BTreeMap<(u32, u32, u32), Float>;
pub type TailCoeffs = BTreeMap<(u32, u32), Float>;

/// All coefficients of one order `g`, with the λ table they came from.
#[derive(Debug, Clone)]
pub struct OperatorCoeffs {
    pub order: u32,
    /// `(r, ℓ, s) -> C_{r,ℓ,s}(g)`
    pub central: CentralCoeffs,
    /// `(ℓ, s) -> C_{ℓ,s}(g)`
    pub tail: TailCoeffs,
    pub lambda: LambdaTable,
}

impl OperatorCoeffs {
    pub fn build(profile: &GrowthProfile, g: u32) -> Result<Self> {
        let lambda = lambda_table(profile, 2 * g as usize, g as usize)?;
        Ok(Self {
            order: g,
            central: central_from_lambda(profile, &lambda, g),
            tail: tail_from_lambda(profile, &lambda, g),
            lambda,
        })
    }
}

/// `C_{r,ℓ,s}(g)` for every `(r,ℓ,s)` with `3r + 2ℓ + 2s <= 2g`. Needs
/// `γ_0..γ_g`.
pub fn coeff_c_central(g: u32, profile: &GrowthProfile) -> Result<CentralCoeffs> {
    let lambda = lambda_table(profile, 2 * g as usize, g as usize)?;
    Ok(central_from_lambda(profile, &lambda, g))
}

/// `C_{ℓ,s}(g)` for every `(ℓ,s)` with `ℓ + s <= g`. Needs `γ_0..γ_g`.
pub fn coeff_c_tail(g: u32, profile: &GrowthProfile) -> Result<TailCoeffs> {
    let lambda = lambda_table(profile, 2 * g as usize, g as usize)?;
    Ok(tail_from_lambda(profile, &lambda, g))
}

/// `(β/2)^e / e!`
fn scaled_power(profile: &GrowthProfile, e: u32, bits: u32) -> Float {
    let half_beta = Float::with_val(bits, profile.beta() / 2u32);
    let mut out = Float::with_val(bits, 1);
    for i in 1..=e {
        out *= &half_beta;
        out /= i;
    }
    out
}

fn binom(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

pub(crate) fn central_from_lambda(profile: &GrowthProfile, lambda: &LambdaTable, g: u32) -> CentralCoeffs {
    let bits = profile.precision().bits_with_guard(64);
    let mut out = CentralCoeffs::new();
    for r in 0..=(2 * g / 3) {
        for ls in 0..=((2 * g - 3 * r) / 2) {
            for s in 0..=ls {
                let l = ls - s;
                let mut acc = Float::new(bits);
                for j in 0..=ls {
                    let n = 2 * g as i64 - j as i64 - 2 * ls as i64 - 3 * r as i64;
                    if n < 0 {
                        continue;
                    }
                    let term = scaled_power(profile, ls - j, bits) * binom(j + r, r);
                    acc += term * lambda.get(n as usize, (j + r) as usize);
                }
                acc *= binom(ls, s);
                if s % 2 == 1 {
                    acc = -acc;
                }
                out.insert((r, l, s), acc);
            }
        }
    }
    out
}

pub(crate) fn tail_from_lambda(profile: &GrowthProfile, lambda: &LambdaTable, g: u32) -> TailCoeffs {
    let bits = profile.precision().bits_with_guard(64);
    let mut out = TailCoeffs::new();
    for ls in 0..=g {
        for s in 0..=ls {
            let l = ls - s;
            let mut acc = Float::new(bits);
            for j in 0..=ls {
                let n = 2 * g as i64 - j as i64 - 2 * ls as i64;
                if n < 0 {
                    continue;
                }
                acc += scaled_power(profile, ls - j, bits) * lambda.get(n as usize, j as usize);
            }
            acc *= binom(ls, s);
            if ls % 2 == 1 {
                acc = -acc;
            }
            out.insert((l, s), acc);
        }
    }
    out
}

/// Coefficients for every order `g < orders`, with unknown `γ` as zero.
pub(crate) fn central_up_to(profile: &GrowthProfile, orders: u32) -> Vec<CentralCoeffs> {
    let top = orders.saturating_sub(1);
    let lambda = lambda_table_padded(profile, 2 * top as usize, top as usize);
    (0..orders).map(|g| central_from_lambda(profile, &lambda, g)).collect()
}

pub(crate) fn tail_up_to(profile: &GrowthProfile, orders: u32) -> Vec<TailCoeffs> {
    let top = orders.saturating_sub(1);
    let lambda = lambda_table_padded(profile, 2 * top as usize, top as usize);
    (0..orders).map(|g| tail_from_lambda(profile, &lambda, g)).collect()
}

/// A computed coefficient next to its closed form.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub label: &'static str,
    pub j: u32,
    pub computed: Float,
    pub expected: Float,
}

impl IdentityCheck {
    pub fn relative_error(&self) -> Float {
        let diff = Float::with_val(self.computed.prec(), &self.computed - &self.expected);
        if self.expected.is_zero() {
            diff.abs()
        } else {
            (diff / &self.expected).abs()
        }
    }
}

/// The leading coefficients with known closed forms, for one `J >= 1`:
/// `C_{0,J,0}(J)`, `C_{0,J,0}(J+1)`, `C_{0,J,1}(J+1)`, `C_{1,J,0}(J+2)`,
/// `C_{2,J,0}(J+3)` and `C_{J,0}(J)`, `C_{J,0}(J+1)`, `C_{J,1}(J+1)`.
/// Needs `γ_0..γ_{J+3}`.
pub fn closed_form_checks(profile: &GrowthProfile, j: u32) -> Result<Vec<IdentityCheck>> {
    if j == 0 {
        return Err(crate::error::Error::InvalidArgument("closed forms start at J = 1".into()));
    }
    let bits = profile.precision().bits_with_guard(64);
    let beta = Float::with_val(bits, profile.beta());
    let alpha = Float::with_val(bits, profile.alpha());
    // β^e / (2^t · n!), with 1/n! = 0 for negative n
    let term = |e: u32, t: u32, fact: i64| -> Float {
        if fact < 0 {
            return Float::new(bits);
        }
        let mut v = Float::with_val(bits, beta.clone().pow_u(e));
        v >>= t;
        v / Integer::from(Integer::factorial(fact as u32))
    };
    let j_i = j as i64;
    let leading = term(j, j, j_i);
    let next = -Float::with_val(bits, &alpha * term(j - 1, j - 1, j_i - 1)) - term(j - 1, j + 1, j_i - 2);
    let upper = term(j + 1, j + 1, j_i);
    let one_r = -term(j, j + 1, j_i - 1) - Float::with_val(bits, &alpha * term(j, j, j_i));
    let two_r = -term(j + 1, j + 3, j_i);
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };

    let c0 = coeff_c_central(j, profile)?;
    let c1 = coeff_c_central(j + 1, profile)?;
    let c2 = coeff_c_central(j + 2, profile)?;
    let c3 = coeff_c_central(j + 3, profile)?;
    let t0 = coeff_c_tail(j, profile)?;
    let t1 = coeff_c_tail(j + 1, profile)?;
    let check = |label, computed: &Float, expected: Float| IdentityCheck { label, j, computed: computed.clone(), expected };
    Ok(vec![
        check("C_{0,J,0}(J)", &c0[&(0, j, 0)], leading.clone()),
        check("C_{0,J,0}(J+1)", &c1[&(0, j, 0)], next.clone()),
        check("C_{0,J,1}(J+1)", &c1[&(0, j, 1)], -upper.clone()),
        check("C_{1,J,0}(J+2)", &c2[&(1, j, 0)], one_r),
        check("C_{2,J,0}(J+3)", &c3[&(2, j, 0)], two_r),
        check("C_{J,0}(J)", &t0[&(j, 0)], leading * sign),
        check("C_{J,0}(J+1)", &t1[&(j, 0)], next * sign),
        check("C_{J,1}(J+1)", &t1[&(j, 1)], upper * -sign),
    ])
}

trait PowU {
    fn pow_u(self, e: u32) -> Float;
}

impl PowU for Float {
    fn pow_u(self, e: u32) -> Float {
        use rug::ops::Pow;
        self.pow(e)
    }
}
