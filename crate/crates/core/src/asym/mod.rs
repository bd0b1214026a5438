//! Asymptotic machinery for `S_f(a,b;X)` when `f` grows like
//! `e^{β√X} X^{-α} Σ γ_n X^{-n/2}`.
//!
//! - [`profile`]: the growth parameters `(β, α, γ)`.
//! - [`lambda`]: shift coefficients `λ_{n,j}` in the expansion of
//!   `f(X+r)/f(X)`.
//! - [`coeffs`]: operator coefficients `C_{r,ℓ,s}(g)` (small `b`) and
//!   `C_{ℓ,s}(g)` (large `b`).
//! - [`ratios`]: the resulting expansions of `S_f/f` and its finite
//!   differences in `b`.
//! - [`closed`]: the hyperbolic closed forms for the partition statistics.

pub mod closed;
pub mod coeffs;
pub mod lambda;
pub mod profile;
pub mod ratios;

pub use closed::{
    closed_b_critical_point, closed_ratio, exact_target, min_diff_prediction, peak_prediction, t_value, ClosedForm,
    Prediction,
};
pub use coeffs::{closed_form_checks, coeff_c_central, coeff_c_tail, IdentityCheck, OperatorCoeffs};
pub use lambda::{lambda_table, LambdaTable};
pub use profile::GrowthProfile;
pub use ratios::{sf_delta_ratio, sf_ratio_central, sf_ratio_tail, shift_ratio, CentralExpansion, TailExpansion};

use rug::Float;

/// Generalised binomial coefficient `C(x, g) = x(x-1)...(x-g+1)/g!`.
pub(crate) fn gen_binomial(x: &Float, g: u32, bits: u32) -> Float {
    let mut acc = Float::with_val(bits, 1);
    for i in 0..g {
        acc *= Float::with_val(bits, x - i);
        acc /= i + 1;
    }
    acc
}
