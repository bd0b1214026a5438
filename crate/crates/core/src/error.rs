use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("partition table too short: need values through n = {needed}, table stops at {available}")]
    TableTooShort { needed: u64, available: u64 },

    #[error("series inverse requires a unit constant term, found {0}")]
    InvalidInvert(String),

    #[error("corrupt partition cache {path:?}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },

    #[error("b_{{m,k}} is only defined for m >= 0 (got m = {0})")]
    NegativeM(i64),

    #[error("series did not converge within {0} terms")]
    NoConvergence(u64),

    #[error("derivative order {requested} exceeds the kernel limit {max}")]
    OrderTooHigh { requested: usize, max: usize },

    #[error("growth profile has {available} gamma coefficients, {needed} required")]
    GammaTooShort { needed: usize, available: usize },

    #[error("b = {b} is outside both tail regimes for X = {x}")]
    RegimeViolation { b: f64, x: f64 },

    #[error("degenerate shift: 2b = -mu*J")]
    DegenerateB,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
