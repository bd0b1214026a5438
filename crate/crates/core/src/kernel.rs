//! Derivatives of the logistic function `D_J(α) = ∂_α^J 1/(1+e^α)`.
//!
//! With `g = 1/(1+e^α)` we have `g' = g² - g`, so every `D_J` is an integer
//! polynomial `P_J(g)` of degree `J+1`, generated by
//! `P_{J+1}(g) = P_J'(g)·(g² - g)`. Evaluation uses the reflections
//! `D_0(-α) = 1 - D_0(α)` and `D_J(-α) = (-1)^{J+1} D_J(α)` so that `g` is
//! always taken from the half plane `Re α >= 0`, where `|g| <= 1`-ish and the
//! polynomial does not cancel against a value close to one.

use std::sync::OnceLock;

use rug::{Complex, Float, Integer};

use crate::error::{Error, Result};
use crate::precision::Precision;

/// Largest derivative order of the shared kernel.
pub const DEFAULT_MAX_ORDER: usize = 40;

#[derive(Debug, Clone)]
pub struct LogisticKernel {
    /// `polys[J][i]` is the coefficient of `g^i` in `P_J`.
    polys: Vec<Vec<Integer>>,
}

impl LogisticKernel {
    pub fn new(max_order: usize) -> Self {
        let mut polys: Vec<Vec<Integer>> = Vec::with_capacity(max_order + 1);
        polys.push(vec![Integer::new(), Integer::from(1)]);
        for j in 0..max_order {
            let prev = &polys[j];
            // derivative of P_J in g, then multiply by (g² - g)
            let mut next = vec![Integer::new(); prev.len() + 1];
            for (i, c) in prev.iter().enumerate().skip(1) {
                let d = Integer::from(c * i as u64);
                next[i + 1] += &d; // d·g^{i-1}·g²
                next[i] -= d; // -d·g^{i-1}·g
            }
            polys.push(next);
        }
        Self { polys }
    }

    pub fn max_order(&self) -> usize {
        self.polys.len() - 1
    }

    /// Integer coefficients of `P_J` in ascending powers of `g`.
    pub fn poly(&self, order: usize) -> &[Integer] {
        &self.polys[order]
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order() {
            Err(Error::OrderTooHigh { requested: order, max: self.max_order() })
        } else {
            Ok(())
        }
    }

    fn guard_bits(&self) -> u32 {
        3 * self.max_order() as u32 + 32
    }

    /// `D_J(α)` for `J = 0..=up_to`, sharing one evaluation of `g`.
    pub fn eval_all(&self, up_to: usize, alpha: &Float, prec: Precision) -> Result<Vec<Float>> {
        self.check(up_to)?;
        let work = prec.bits_with_guard(self.guard_bits());
        let reflect = alpha.is_sign_negative();
        let abs_alpha = Float::with_val(work, alpha.abs_ref());
        let g = Float::with_val(work, abs_alpha.exp() + 1u32).recip();
        let out = (0..=up_to)
            .map(|j| {
                let mut v = horner(&self.polys[j], &g);
                if reflect {
                    if j == 0 {
                        v = Float::with_val(work, 1u32 - &v);
                    } else if j % 2 == 0 {
                        v = -v;
                    }
                }
                Float::with_val(prec.bits(), &v)
            })
            .collect();
        Ok(out)
    }

    pub fn eval(&self, order: usize, alpha: &Float, prec: Precision) -> Result<Float> {
        self.check(order)?;
        let mut all = self.eval_orders(&[order], alpha, prec)?;
        Ok(all.pop().unwrap())
    }

    /// `D_J(α)` for each requested `J`.
    pub fn eval_orders(&self, orders: &[usize], alpha: &Float, prec: Precision) -> Result<Vec<Float>> {
        let top = orders.iter().copied().max().unwrap_or(0);
        let all = self.eval_all(top, alpha, prec)?;
        Ok(orders.iter().map(|&j| all[j].clone()).collect())
    }

    /// Complex version of [`Self::eval_all`], reflecting when `Re α < 0`.
    pub fn eval_all_complex(&self, up_to: usize, alpha: &Complex, prec: Precision) -> Result<Vec<Complex>> {
        self.check(up_to)?;
        let work = prec.bits_with_guard(self.guard_bits());
        let reflect = alpha.real().is_sign_negative();
        let a = if reflect {
            Complex::with_val(work, -alpha)
        } else {
            Complex::with_val(work, alpha)
        };
        let g = Complex::with_val(work, a.exp() + 1u32).recip();
        let out = (0..=up_to)
            .map(|j| {
                let mut v = horner_complex(&self.polys[j], &g);
                if reflect {
                    if j == 0 {
                        v = Complex::with_val(work, 1u32 - &v);
                    } else if j % 2 == 0 {
                        v = -v;
                    }
                }
                Complex::with_val(prec.bits(), &v)
            })
            .collect();
        Ok(out)
    }
}

fn horner(coeffs: &[Integer], g: &Float) -> Float {
    let mut acc = Float::new(g.prec());
    for c in coeffs.iter().rev() {
        acc *= g;
        acc += c;
    }
    acc
}

fn horner_complex(coeffs: &[Integer], g: &Complex) -> Complex {
    let mut acc = Complex::new(g.prec());
    for c in coeffs.iter().rev() {
        acc *= g;
        acc += c;
    }
    acc
}

/// The process-wide kernel with [`DEFAULT_MAX_ORDER`].
pub fn shared_kernel() -> &'static LogisticKernel {
    static KERNEL: OnceLock<LogisticKernel> = OnceLock::new();
    KERNEL.get_or_init(|| LogisticKernel::new(DEFAULT_MAX_ORDER))
}

/// `D_J(α)` from the shared kernel.
pub fn logistic_deriv(order: usize, alpha: &Float, prec: Precision) -> Result<Float> {
    shared_kernel().eval(order, alpha, prec)
}
