use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use theta_asym::cache::load_or_build;
use theta_asym::{partition_table, PartitionTable};

/// Partition tables per colour count, grown on demand and shared between
/// threads. With a cache directory, tables are read from and written to
/// disk.
#[derive(Debug, Default)]
pub struct TableStore {
    cache_dir: Option<PathBuf>,
    tables: Mutex<HashMap<u32, Arc<PartitionTable>>>,
}

impl TableStore {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Self { cache_dir, tables: Mutex::new(HashMap::new()) }
    }

    /// The `k`-coloured table reaching at least `max_n`.
    pub fn get(&self, k: u32, max_n: u64) -> theta_asym::Result<Arc<PartitionTable>> {
        let mut tables = self.tables.lock().expect("table store poisoned");
        if let Some(t) = tables.get(&k) {
            if t.max_n() >= max_n {
                return Ok(Arc::clone(t));
            }
        }
        log::info!("building p_{k}(n) for n <= {max_n}");
        let table = match &self.cache_dir {
            Some(dir) => load_or_build(dir, k, max_n)?,
            None => partition_table(k, max_n),
        };
        let table = Arc::new(table);
        tables.insert(k, Arc::clone(&table));
        Ok(table)
    }
}
