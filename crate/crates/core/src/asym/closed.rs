//! Hyperbolic closed forms for the partition statistics.
//!
//! Each form predicts `statistic / base` where the base is `p_k(n)` for the
//! `J`, `A`, `B` families and `p(n)` for the rank-type families. With
//! `δ_k = π√(k/(6n))` and `δ = δ_1`:
//!
//! | family | [`ClosedForm::Central`] | [`ClosedForm::Wide`] (value at `n+|m|`) |
//! |---|---|---|
//! | J | `½(1 - tanh((2|m|-1)δ_k/4))` | `1/(1+e^{-|m|δ_k})` |
//! | A | `(δ_k/4) sech²(mδ_k/2)` | `δ_k/(1+e^{-|m|δ_k})²` |
//! | B | `(δ_k²/4) sech²(x) tanh(x)`, `x = (2m+1)δ_k/4` | `δ_k² tanh(x)/(1+e^{-|m|δ_k})²` |
//! | I | `½(1 - tanh((2|m|-1)δ/4))` | `1/(1+e^{-|m|δ})` (value at `n`) |
//! | N, CRANK, RANK | `(δ/4) sech²(mδ/2)` | `δ/(1+e^{-|m|δ})²` |
//! | NDIFF | `(δ²/4) sech²(y) tanh(y)`, `y = (2m+1)δ/4` | `δ² tanh(y)/(1+e^{-|m|δ})²` |
//!
//! [`ClosedForm::KDifference`] covers `I_k - I_{k+1}` and `N_{k+1} - N_k`.

use std::fmt;
use std::str::FromStr;

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::partition::PartitionTable;
use crate::precision::Precision;
use crate::stats::{i_coeff, n_coeff, Family, StatisticId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// Valid for `m = o(n^{3/4})`.
    Central,
    /// Uniform in `m`, asymptotic equivalence only.
    Wide,
    /// Difference between consecutive `k` for `I` and `N`.
    KDifference,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 3] = [ClosedForm::Central, ClosedForm::Wide, ClosedForm::KDifference];

    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::Central => "central",
            ClosedForm::Wide => "wide",
            ClosedForm::KDifference => "kdiff",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|form| form.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown closed form `{s}`")))
    }
}

/// A predicted ratio together with where it applies: the statistic is
/// evaluated at `target_n` and compared against the partition count at
/// `base_n`.
#[derive(Debug, Clone)]
pub struct Prediction {
    pub target_n: u64,
    pub base_n: u64,
    pub ratio: Float,
}

impl Prediction {
    /// Predicted value of the statistic, `ratio * base(base_n)`.
    pub fn value(&self, base: &PartitionTable) -> Result<Float> {
        let base = base.get(self.base_n as i64)?;
        Ok(Float::with_val(self.ratio.prec(), &self.ratio * base))
    }
}

fn delta(k: u32, n: u64, bits: u32) -> Float {
    let pi = Float::with_val(bits, rug::float::Constant::Pi);
    let inside = Float::with_val(bits, k) / Float::with_val(bits, 6 * n as u128);
    pi * inside.sqrt()
}

fn sech_sq(x: &Float) -> Float {
    let c = Float::with_val(x.prec(), x.cosh_ref());
    c.square().recip()
}

fn logistic_weight(m: i64, d: &Float) -> Float {
    let bits = d.prec();
    let e = Float::with_val(bits, -Float::with_val(bits, d * m.unsigned_abs())).exp();
    e + 1u32
}

/// Closed-form prediction for `id`, with `id.k` the colour count for
/// `J`/`A`/`B` and the rank parameter for `I`/`N`/`NDIFF`.
pub fn closed_ratio(form: ClosedForm, id: &StatisticId, prec: Precision) -> Result<Prediction> {
    let StatisticId { family, m, k, n } = *id;
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("closed forms need n >= 1 and k >= 1".into()));
    }
    let bits = prec.bits_with_guard(16);
    let abs_m = m.unsigned_abs();
    let colours = if family.uses_colored_table() { k } else { 1 };
    let d = delta(colours, n, bits);
    let quarter = |shift: i64| Float::with_val(bits, &d * (2 * shift + 1)) / 4u32;

    let (target_n, ratio) = match form {
        ClosedForm::Central => {
            let ratio = match family {
                Family::J | Family::I => {
                    let t = quarter(abs_m as i64 - 1).tanh();
                    (1u32 - t) / 2u32
                }
                Family::A | Family::N | Family::Crank | Family::Rank => {
                    let x = Float::with_val(bits, &d * m) / 2u32;
                    Float::with_val(bits, &d / 4u32) * sech_sq(&x)
                }
                Family::B | Family::NDiff => {
                    let x = quarter(m);
                    let t = Float::with_val(bits, x.tanh_ref());
                    Float::with_val(bits, d.square_ref()) / 4u32 * sech_sq(&x) * t
                }
            };
            (n, ratio)
        }
        ClosedForm::Wide => {
            let w = logistic_weight(m, &d);
            match family {
                Family::J => (n + abs_m, w.recip()),
                Family::I => (n, w.recip()),
                Family::A | Family::N | Family::Crank | Family::Rank => (n + abs_m, d / w.square()),
                Family::B | Family::NDiff => {
                    let t = quarter(m).tanh();
                    (n + abs_m, Float::with_val(bits, d.square_ref()) * t / w.square())
                }
            }
        }
        ClosedForm::KDifference => match family {
            Family::I => {
                let x = quarter(abs_m as i64 - 1);
                let t = Float::with_val(bits, x.tanh_ref());
                (n, Float::with_val(bits, &d / 4u32) * sech_sq(&x) * t)
            }
            Family::N | Family::Crank | Family::Rank => {
                let y = Float::with_val(bits, &d * m) / 2u32;
                let t2 = Float::with_val(bits, y.tanh_ref()).square();
                let shape = sech_sq(&y) * (1u32 - 3u32 * t2);
                (n, Float::with_val(bits, d.square_ref()) / 8u32 * shape)
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "the k-difference form applies to I and N only, not {family}"
                )))
            }
        },
    };
    Ok(Prediction { target_n, base_n: n, ratio: Float::with_val(prec.bits(), ratio) })
}

/// Exact counterpart of [`closed_ratio`], computed from `table` (the
/// `id.table_colours()`-coloured partition table).
pub fn exact_target(form: ClosedForm, id: &StatisticId, table: &PartitionTable) -> Result<Integer> {
    match form {
        ClosedForm::Central => id.exact(table),
        ClosedForm::Wide => {
            let target = closed_target_n(form, id);
            StatisticId { n: target, ..*id }.exact(table)
        }
        ClosedForm::KDifference => {
            let k = id.rank_k();
            match id.family {
                Family::I => {
                    let m = id.m.abs();
                    Ok(i_coeff(k, m, id.n, table)? - i_coeff(k + 1, m, id.n, table)?)
                }
                Family::N | Family::Crank | Family::Rank => {
                    Ok(n_coeff(k + 1, id.m, id.n, table)? - n_coeff(k, id.m, id.n, table)?)
                }
                family => Err(Error::InvalidArgument(format!(
                    "the k-difference form applies to I and N only, not {family}"
                ))),
            }
        }
    }
}

fn closed_target_n(form: ClosedForm, id: &StatisticId) -> u64 {
    match (form, id.family) {
        (ClosedForm::Wide, Family::I) => id.n,
        (ClosedForm::Wide, _) => id.n + id.m.unsigned_abs(),
        _ => id.n,
    }
}

/// Central `B` prediction for `k = 1`, scaled by the exact `p(n)`.
pub fn t_value(m: i64, n: u64, p: &PartitionTable, prec: Precision) -> Result<Float> {
    let id = StatisticId::new(Family::B, m, 1, n);
    closed_ratio(ClosedForm::Central, &id, prec)?.value(p)
}

/// `(1/2π)√(6n/k) log(2+√3)`, the location given for the increase of
/// `b_{m,k}(n)` to stop.
pub fn peak_prediction(k: u32, n: u64) -> f64 {
    (6.0 * n as f64 / k as f64).sqrt() * (2.0 + 3f64.sqrt()).ln() / (2.0 * std::f64::consts::PI)
}

/// `(√(6n)/π) log(2+√3)`, where `|N_k - N_{k+1}|` is smallest.
pub fn min_diff_prediction(n: u64) -> f64 {
    2.0 * peak_prediction(1, n)
}

/// Critical point in `m` of the central `B` closed form, where
/// `tanh((2m+1)δ_k/4) = 1/√3`.
pub fn closed_b_critical_point(k: u32, n: u64) -> f64 {
    (6.0 * n as f64 / k as f64).sqrt() * (2.0 + 3f64.sqrt()).ln() / std::f64::consts::PI - 0.5
}
