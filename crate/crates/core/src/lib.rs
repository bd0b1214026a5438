//! Exact and asymptotic evaluation of theta-quotient Fourier coefficients and
//! the rank/crank statistics of integer partitions.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`], [`partition`], [`cache`]: exact big-integer power series,
//!   `p_k(n)` tables and their on-disk cache.
//! - [`stats`], [`oracle`]: alternating quadratic sums `S_f(a,b;X)` and the
//!   statistics built from them (`j`, `a`, `b`, `I_k`, `N_k`), plus
//!   independent oracles (Lerch-sum expansion, partition enumeration).
//! - [`kernel`], [`false_theta`]: the logistic derivative kernel
//!   `D_J(α) = ∂^J 1/(1+e^α)` and three evaluation routes for the false theta
//!   function `T_{a,b}(z)`.
//! - [`asym`]: growth profiles, shift coefficients `λ_{n,j}`, operator
//!   coefficients `C_{r,ℓ,s}` / `C_{ℓ,s}`, the `S_f` expansions and the closed
//!   hyperbolic formulas.

pub mod asym;
pub mod cache;
pub mod error;
pub mod false_theta;
pub mod kernel;
pub mod oracle;
pub mod partition;
pub mod precision;
pub mod series;
pub mod stats;

pub use error::{Error, Result};
pub use partition::{partition_table, PartitionTable};
pub use precision::{HighComplex, HighFloat, Precision};
pub use rug::Integer;
pub use series::{eta_power_series, IntSeries};
pub use stats::{Family, QuadSumSpec, StatisticId};
