use std::path::PathBuf;

use theta_asym::Precision;

use crate::output::OutputFormat;

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub precision: Precision,
    /// Where partition tables are cached; `None` keeps them in memory only.
    pub cache_dir: Option<PathBuf>,
    pub output: OutputFormat,
    /// Allow the table rows that need `p(n)` for `n >= 40000`.
    pub slow: bool,
}

impl RunConfig {
    pub const MIN_DIGITS: u32 = 20;

    pub fn new(digits: u32) -> anyhow::Result<Self> {
        if digits < Self::MIN_DIGITS {
            anyhow::bail!("precision must be at least {} digits, got {digits}", Self::MIN_DIGITS);
        }
        Ok(Self { precision: Precision::new(digits), cache_dir: None, output: OutputFormat::Tty, slow: false })
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn with_output(mut self, output: OutputFormat) -> Self {
        self.output = output;
        self
    }

    pub fn with_slow(mut self, slow: bool) -> Self {
        self.slow = slow;
        self
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::new(Precision::DEFAULT_DIGITS).expect("default precision is valid")
    }
}
