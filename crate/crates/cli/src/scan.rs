use std::ops::RangeInclusive;

use rayon::prelude::*;
use theta_asym::asym::ClosedForm;
use theta_asym::stats::{Family, StatisticId};

use crate::config::RunConfig;
use crate::record::{compute, ScanRecord};
use crate::store::TableStore;

#[derive(Debug, Clone)]
pub struct ScanRequest {
    pub family: Family,
    pub k: u32,
    pub ns: Vec<u64>,
    pub ms: RangeInclusive<i64>,
    pub form: ClosedForm,
}

/// Parses `A..B` (inclusive) or a single integer.
pub fn parse_m_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("bad m bound `{s}`: {e}"));
    match text.split_once("..") {
        Some((lo, hi)) => Ok(parse(lo)?..=parse(hi.trim_start_matches('='))?),
        None => {
            let m = parse(text)?;
            Ok(m..=m)
        }
    }
}

/// One record per `(n, m)`, `n` outermost, in request order. Tables are
/// built once up front; cells are evaluated in parallel.
pub fn scan(request: &ScanRequest, store: &TableStore, config: &RunConfig) -> anyhow::Result<Vec<ScanRecord>> {
    let cells: Vec<StatisticId> = request
        .ns
        .iter()
        .flat_map(|&n| request.ms.clone().map(move |m| StatisticId::new(request.family, m, request.k, n)))
        .collect();
    if cells.is_empty() {
        return Ok(Vec::new());
    }
    let reach = cells
        .iter()
        .map(|id| id.n + if request.form == ClosedForm::Wide { id.m.unsigned_abs() } else { 0 })
        .max()
        .unwrap_or(0);
    let colours = cells[0].table_colours();
    store.get(colours, reach)?;
    cells.par_iter().map(|id| compute(id, request.form, store, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_ranges() {
        assert_eq!(parse_m_range("0..60").unwrap(), 0..=60);
        assert_eq!(parse_m_range("-5..=5").unwrap(), -5..=5);
        assert_eq!(parse_m_range("7").unwrap(), 7..=7);
        assert!(parse_m_range("a..3").is_err());
        assert!(parse_m_range("3..1").unwrap().is_empty());
    }
}
