//! Asymptotic expansions of `S_f(a,b;X)` relative to `f`.
//!
//! All entry points take real parameters as [`Float`] and return the ratio
//! at the profile's working precision.

use rug::ops::Pow;
use rug::Float;

use super::coeffs::{central_up_to, tail_up_to, CentralCoeffs, TailCoeffs};
use super::lambda::lambda_table_padded;
use super::profile::GrowthProfile;
use crate::error::{Error, Result};
use crate::kernel::shared_kernel;

/// `f(X+r)/f(X)` from the shift coefficients, keeping `λ_{n,j}` with
/// `j < p` and `n + 3j < 3p`.
pub fn shift_ratio(profile: &GrowthProfile, x: &Float, r: &Float, p: u32) -> Float {
    let prec = profile.precision();
    if r.is_zero() {
        return prec.float(1);
    }
    let p = p.max(1) as usize;
    let bits = prec.bits_with_guard(32);
    let lambda = lambda_table_padded(profile, 3 * p - 1, p - 1);
    let x_quarter = Float::with_val(bits, x.sqrt_ref()).sqrt();
    let inv_quarter = Float::with_val(bits, x_quarter.recip_ref());
    let shift_unit = Float::with_val(bits, r * Float::with_val(bits, inv_quarter.clone().pow(3u32)));

    let mut total = Float::new(bits);
    let mut shift_pow = Float::with_val(bits, 1);
    for j in 0..p {
        let mut inner = Float::new(bits);
        let mut x_pow = Float::with_val(bits, 1);
        for n in 0..(3 * p - 3 * j) {
            inner += Float::with_val(bits, lambda.get(n, j) * &x_pow);
            x_pow *= &inv_quarter;
        }
        total += Float::with_val(bits, inner * &shift_pow);
        shift_pow *= &shift_unit;
    }
    let sqrt_x = Float::with_val(bits, x.sqrt_ref());
    let growth = Float::with_val(bits, profile.beta() * r) / (2u32 * sqrt_x);
    Float::with_val(prec.bits(), total * growth.exp())
}

/// Precomputed small-`b` expansion of `S_f(a,b+μ;X)/f(X)` through
/// `X^{-(3p-1)/2}`.
#[derive(Debug, Clone)]
pub struct CentralExpansion {
    profile: GrowthProfile,
    p: u32,
    coeffs: Vec<CentralCoeffs>,
}

impl CentralExpansion {
    pub fn new(profile: &GrowthProfile, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidArgument("expansion order must be positive".into()));
        }
        let requested = 6 * p as usize - 2;
        let max = shared_kernel().max_order();
        if requested > max {
            return Err(Error::OrderTooHigh { requested, max });
        }
        Ok(Self { profile: profile.clone(), p, coeffs: central_up_to(profile, 3 * p) })
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    pub fn eval(&self, a: &Float, b: &Float, mu: &Float, x: &Float) -> Result<Float> {
        if *b < 0 {
            return Err(Error::InvalidArgument(format!("b must be nonnegative, got {b}")));
        }
        if !(*x > 0) {
            return Err(Error::InvalidArgument(format!("X must be positive, got {x}")));
        }
        let prec = self.profile.precision();
        let bits = prec.bits_with_guard(32);
        let limit = Float::with_val(bits, x.clone().pow(0.74_f64));
        if *b > limit {
            log::warn!("b = {} exceeds X^0.74 = {}; the small-b expansion may be inaccurate", b.to_f64(), limit.to_f64());
        }
        let sqrt_x = Float::with_val(bits, x.sqrt_ref());
        let alpha = Float::with_val(bits, b * self.profile.beta()) / (2u32 * sqrt_x.clone());
        let kernel = shared_kernel().eval_all(6 * self.p as usize - 2, &alpha, prec)?;

        let inv_sqrt = Float::with_val(bits, sqrt_x.recip_ref());
        let mut total = Float::new(bits);
        let mut x_pow = Float::with_val(bits, 1);
        for table in &self.coeffs {
            let mut level = Float::new(bits);
            for (&(r, l, s), c) in table {
                if c.is_zero() {
                    continue;
                }
                let mut term = Float::with_val(bits, c * &kernel[(r + l + 2 * s) as usize]);
                term *= Float::with_val(bits, a.pow_ref_u(s));
                term *= Float::with_val(bits, b.pow_ref_u(r));
                term *= Float::with_val(bits, mu.pow_ref_u(l));
                level += term;
            }
            total += level * &x_pow;
            x_pow *= &inv_sqrt;
        }
        Ok(Float::with_val(prec.bits(), total))
    }
}

/// `S_f(a, b+μ; X)/f(X)` for `b` small against `X^{3/4}`: the operator
/// series `Σ_{g<3p} X^{-g/2} L_g(μ,a,b,∂)` applied to `1/(1+e^α)` at
/// `α = bβ/(2√X)`.
pub fn sf_ratio_central(profile: &GrowthProfile, a: &Float, b: &Float, mu: &Float, x: &Float, p: u32) -> Result<Float> {
    CentralExpansion::new(profile, p)?.eval(a, b, mu, x)
}

/// Precomputed large-`b` expansion of `S_f(a,b+μ;X)/f(X-b)`.
#[derive(Debug, Clone)]
pub struct TailExpansion {
    profile: GrowthProfile,
    coeffs: Vec<TailCoeffs>,
}

impl TailExpansion {
    pub fn new(profile: &GrowthProfile, order: u32) -> Self {
        Self { profile: profile.clone(), coeffs: tail_up_to(profile, order.max(1)) }
    }

    pub fn eval(&self, a: &Float, b: &Float, mu: &Float, x: &Float) -> Result<Float> {
        let prec = self.profile.precision();
        let bits = prec.bits_with_guard(32);
        if !(*x > 0) || *b < 0 {
            return Err(Error::InvalidArgument(format!("need X > 0 and b >= 0, got X = {x}, b = {b}")));
        }
        let shifted_b = Float::with_val(bits, b + mu);
        let rest = Float::with_val(bits, x - b);
        let violation = || Error::RegimeViolation { b: b.to_f64(), x: x.to_f64() };

        if shifted_b > Float::with_val(bits, x / 3u32) {
            // at most the n = 1 and n = 2 terms survive
            let denom = self.profile.eval(&rest);
            if denom.is_zero() {
                return Err(violation());
            }
            let first = Float::with_val(bits, Float::with_val(bits, x - a) - &shifted_b);
            let four_a = Float::with_val(bits, a * 4u32);
            let second = Float::with_val(bits, Float::with_val(bits, x - four_a) - Float::with_val(bits, &shifted_b * 2u32));
            let mut sum = self.profile.eval(&first);
            if second >= 0 {
                sum -= self.profile.eval(&second);
            }
            return Ok(Float::with_val(prec.bits(), sum / denom));
        }

        let sqrt_x = Float::with_val(bits, x.sqrt_ref());
        let floor = sqrt_x * Float::with_val(bits, x.ln_ref());
        if *b < floor || !(rest > 0) {
            return Err(violation());
        }
        let inv_sqrt = Float::with_val(bits, rest.sqrt()).recip();
        let mut total = Float::new(bits);
        let mut x_pow = Float::with_val(bits, 1);
        for table in &self.coeffs {
            let mut level = Float::new(bits);
            for (&(l, s), c) in table {
                let term = Float::with_val(bits, c * Float::with_val(bits, mu.pow_ref_u(l)));
                level += term * Float::with_val(bits, a.pow_ref_u(s));
            }
            total += level * &x_pow;
            x_pow *= &inv_sqrt;
        }
        Ok(Float::with_val(prec.bits(), total))
    }
}

/// `S_f(a, b+μ; X)/f(X-b)` for large `b`: the exact two-term value when
/// `b+μ > X/3`, otherwise `Σ_{g<order} (X-b)^{-g/2} Σ_{ℓ+s≤g} C_{ℓ,s}(g) μ^ℓ a^s`
/// for `b >= √X log X`.
pub fn sf_ratio_tail(profile: &GrowthProfile, a: &Float, b: &Float, mu: &Float, x: &Float, order: u32) -> Result<Float> {
    TailExpansion::new(profile, order).eval(a, b, mu, x)
}

/// `Δ_u^J S_f(a, b+uμ; X)/f(X)` at `u = 0`, to relative order `X^{-1/2}`.
pub fn sf_delta_ratio(j: u32, profile: &GrowthProfile, a: &Float, b: &Float, mu: &Float, x: &Float) -> Result<Float> {
    let prec = profile.precision();
    let bits = prec.bits_with_guard(32);
    if *b < 0 || !(*x > 0) {
        return Err(Error::InvalidArgument(format!("need X > 0 and b >= 0, got X = {x}, b = {b}")));
    }
    let mu_j = Float::with_val(bits, mu * j);
    let centre = Float::with_val(bits, b * 2u32) + &mu_j;
    if centre.is_zero() {
        return Err(Error::DegenerateB);
    }
    let requested = j as usize + 2;
    let max = shared_kernel().max_order();
    if requested > max {
        return Err(Error::OrderTooHigh { requested, max });
    }
    let beta = profile.beta();
    let sqrt_x = Float::with_val(bits, x.sqrt_ref());
    let alpha = Float::with_val(bits, centre * beta) / Float::with_val(bits, &sqrt_x * 4u32);
    let d = shared_kernel().eval_all(requested, &alpha, prec)?;
    let ju = j as usize;

    let growth_alpha = profile.alpha();
    let c0 = Float::with_val(bits, Float::with_val(bits, growth_alpha * 4u32) - 1u32 + j) * j;
    let c1 = Float::with_val(bits, Float::with_val(bits, growth_alpha * 2u32) + j) * 2u32 * &alpha;
    let c2 = Float::with_val(bits, a * Float::with_val(bits, beta.square_ref())) + Float::with_val(bits, alpha.square_ref());
    let m_op = c0 * &d[ju] + c1 * &d[ju + 1] + c2 * &d[ju + 2];
    let correction = m_op / Float::with_val(bits, Float::with_val(bits, beta * 2u32) * &sqrt_x);
    let bracket = Float::with_val(bits, &d[ju] - correction);

    let unit = Float::with_val(bits, mu * beta) / (2u32 * sqrt_x);
    let scale = unit.pow(j);
    Ok(Float::with_val(prec.bits(), bracket * scale))
}

trait PowU {
    fn pow_ref_u(&self, e: u32) -> Float;
}

impl PowU for Float {
    fn pow_ref_u(&self, e: u32) -> Float {
        if e == 0 {
            return Float::with_val(self.prec(), 1);
        }
        Float::with_val(self.prec(), self.pow(e))
    }
}
