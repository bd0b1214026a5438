use rug::Float;
use serde::Serialize;
use theta_asym::asym::{closed_ratio, exact_target, ClosedForm};
use theta_asym::precision::{fixed_float, sci_float};
use theta_asym::stats::StatisticId;
use theta_asym::Integer;

use crate::config::RunConfig;
use crate::store::TableStore;

/// One statistic with its exact value, closed-form prediction and their
/// ratio.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub family: String,
    pub k: u32,
    pub m: i64,
    pub n: u64,
    pub form: String,
    /// Full decimal expansion.
    pub exact: String,
    pub asym: String,
    pub ratio: String,
}

impl ScanRecord {
    pub const CSV_HEADER: [&'static str; 7] = ["family", "k", "m", "n", "exact", "asym", "ratio"];

    pub fn csv_row(&self) -> [String; 7] {
        [
            self.family.clone(),
            self.k.to_string(),
            self.m.to_string(),
            self.n.to_string(),
            self.exact.clone(),
            self.asym.clone(),
            self.ratio.clone(),
        ]
    }
}

/// Exact value, prediction and ratio as numbers, before formatting.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub exact: Integer,
    pub asym: Float,
    pub ratio: Option<Float>,
}

/// Significant digits printed for the predicted value.
pub const ASYM_DIGITS: usize = 15;
/// Decimals printed for the ratio.
pub const RATIO_DECIMALS: u32 = 10;

pub fn evaluate(id: &StatisticId, form: ClosedForm, store: &TableStore, config: &RunConfig) -> anyhow::Result<Evaluation> {
    let prediction = closed_ratio(form, id, config.precision)?;
    let needed = prediction.target_n.max(prediction.base_n);
    let table = store.get(id.table_colours(), needed)?;
    let exact = exact_target(form, id, &table)?;
    let asym = prediction.value(&table)?;
    let ratio = if asym.is_zero() {
        None
    } else {
        Some(Float::with_val(asym.prec(), Float::with_val(asym.prec(), &exact) / &asym))
    };
    Ok(Evaluation { exact, asym, ratio })
}

pub fn compute(id: &StatisticId, form: ClosedForm, store: &TableStore, config: &RunConfig) -> anyhow::Result<ScanRecord> {
    let eval = evaluate(id, form, store, config)?;
    Ok(ScanRecord {
        family: id.family.name().to_string(),
        k: id.k,
        m: id.m,
        n: id.n,
        form: form.name().to_string(),
        exact: eval.exact.to_string(),
        asym: sci_float(&eval.asym, ASYM_DIGITS),
        ratio: eval.ratio.as_ref().map_or_else(|| "nan".to_string(), |r| fixed_float(r, RATIO_DECIMALS)),
    })
}
