//! The two published tables of second differences at `n = row²`.
//!
//! Table 1 compares `b_{m,1}(N)` with `T(m,N)` at `m = 1` and `m = row`;
//! table 2 compares `N_2(m,N) - N_2(m+1,N)` with `T(m,N)` at `m = 0` and
//! `m = row + 1`. `T` is the central closed form for `B` at `k = 1` scaled
//! by the exact `p(N)`.

use serde::Serialize;
use theta_asym::asym::t_value;
use theta_asym::precision::{fixed_float, sci_float, sci_integer};
use theta_asym::stats::{b_coeff, n_diff_coeff};
use theta_asym::Integer;

use crate::config::RunConfig;
use crate::store::TableStore;

pub const FAST_ROWS: [u64; 2] = [50, 100];
pub const SLOW_ROWS: [u64; 2] = [200, 400];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Which {
    Second,
    RankSecond,
}

impl Which {
    pub fn from_number(n: u32) -> Option<Self> {
        match n {
            1 => Some(Self::Second),
            2 => Some(Self::RankSecond),
            _ => None,
        }
    }

    pub fn number(&self) -> u32 {
        match self {
            Self::Second => 1,
            Self::RankSecond => 2,
        }
    }

    /// The two `m` values compared in a row.
    pub fn columns(&self, row: u64) -> [i64; 2] {
        let row = row as i64;
        match self {
            Self::Second => [1, row],
            Self::RankSecond => [0, row + 1],
        }
    }
}

/// One `(m, N)` cell: exact value, prediction, ratio, formatted as in the
/// published tables.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub m: i64,
    pub exact: String,
    pub asym: String,
    pub ratio: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub row: u64,
    pub big_n: u64,
    pub cells: [TableCell; 2],
}

pub fn is_slow_row(row: u64) -> bool {
    row * row >= 40_000
}

pub fn table_row(which: Which, row: u64, store: &TableStore, config: &RunConfig) -> anyhow::Result<TableRow> {
    if row == 0 {
        anyhow::bail!("table rows must be positive");
    }
    let big_n = row * row;
    let table = store.get(1, big_n)?;
    let cell = |m: i64| -> anyhow::Result<TableCell> {
        let exact: Integer = match which {
            Which::Second => b_coeff(m, 1, big_n, &table)?,
            Which::RankSecond => n_diff_coeff(2, m, big_n, &table)?,
        };
        let asym = t_value(m, big_n, &table, config.precision)?;
        let ratio = rug::Float::with_val(asym.prec(), &exact) / &asym;
        Ok(TableCell { m, exact: sci_integer(&exact, 6), asym: sci_float(&asym, 6), ratio: fixed_float(&ratio, 4) })
    };
    let [m0, m1] = which.columns(row);
    Ok(TableRow { row, big_n, cells: [cell(m0)?, cell(m1)?] })
}

pub fn table(which: Which, rows: &[u64], store: &TableStore, config: &RunConfig) -> anyhow::Result<Vec<TableRow>> {
    if rows.is_empty() {
        anyhow::bail!("no table rows requested");
    }
    if let Some(&row) = rows.iter().find(|&&r| is_slow_row(r) && !config.slow) {
        anyhow::bail!("row {row} needs p(n) up to {} and runs only with --slow", row * row);
    }
    rows.iter().map(|&row| table_row(which, row, store, config)).collect()
}

/// Flat cells for CSV and terminal output.
pub fn flatten(row: &TableRow) -> Vec<String> {
    let mut out = vec![row.row.to_string(), row.big_n.to_string()];
    for cell in &row.cells {
        out.extend([cell.m.to_string(), cell.exact.clone(), cell.asym.clone(), cell.ratio.clone()]);
    }
    out
}

pub const HEADER: [&str; 10] = ["n", "N", "m_a", "exact_a", "asym_a", "ratio_a", "m_b", "exact_b", "asym_b", "ratio_b"];
