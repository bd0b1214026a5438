use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use theta_asym::asym::ClosedForm;
use theta_asym::cache::{cache_path, load, load_or_build};
use theta_asym::stats::{Family, StatisticId};

use crate::config::RunConfig;
use crate::output::{write_aligned, write_csv, write_json, write_records, OutputFormat};
use crate::record::compute;
use crate::scan::{parse_m_range, scan, ScanRequest};
use crate::store::TableStore;
use crate::table::{flatten, table, Which, FAST_ROWS, HEADER, SLOW_ROWS};
use crate::verify::{run_suite, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "theta-asym", version, about = "Exact values and asymptotics of partition statistics built from false theta sums")]
pub struct Cli {
    /// Working precision in decimal digits (at least 20).
    #[arg(long, global = true, default_value_t = theta_asym::Precision::DEFAULT_DIGITS)]
    pub precision: u32,
    /// Directory for cached partition tables.
    #[arg(long, global = true, env = "THETA_ASYM_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, default_value = "tty")]
    pub output: OutputFormat,
    /// Enable the table rows that need p(n) for n >= 40000.
    #[arg(long, global = true)]
    pub slow: bool,
    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value, closed-form prediction and their ratio for one statistic.
    Compute(ComputeArgs),
    /// Reproduce rows of the two second-difference tables.
    Table(TableArgs),
    /// Run verification suites (all of them when none are named).
    Verify(VerifyArgs),
    /// Compute a grid of statistics.
    Scan(ScanArgs),
    /// Build or check cached partition tables.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// J, A, B, I, N, NDIFF, CRANK or RANK.
    #[arg(long)]
    pub family: Family,
    #[arg(short, long, allow_negative_numbers = true)]
    pub m: i64,
    /// Colour count for J/A/B, rank parameter for I/N/NDIFF.
    #[arg(short, long, default_value_t = 1)]
    pub k: u32,
    #[arg(short, long)]
    pub n: u64,
    /// central, wide or kdiff.
    #[arg(long, default_value = "central")]
    pub form: ClosedForm,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// 1 for b_(m,1), 2 for N_2(m) - N_2(m+1).
    pub which: u32,
    /// Comma-separated rows (values of n; the statistic is taken at n^2).
    #[arg(long, value_delimiter = ',')]
    pub rows: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suites: Vec<Suite>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(short, long, default_value_t = 1)]
    pub k: u32,
    /// Comma-separated list of n.
    #[arg(short, long, value_delimiter = ',', required = true)]
    pub n: Vec<u64>,
    /// Inclusive range `A..B` or a single value.
    #[arg(short, long, allow_hyphen_values = true, value_parser = parse_m_range)]
    pub m: std::ops::RangeInclusive<i64>,
    #[arg(long, default_value = "central")]
    pub form: ClosedForm,
}

#[derive(Debug, Subcommand)]
pub enum CacheCommand {
    /// Build (or extend) the table of p_k(n) for n <= N.
    Build {
        #[arg(short, long, default_value_t = 1)]
        k: u32,
        #[arg(short = 'N', long = "max-n")]
        max_n: u64,
    },
    /// Verify the checksum and layout of a cached table.
    Check {
        #[arg(short, long, default_value_t = 1)]
        k: u32,
    },
}

/// Errors caused by the invocation rather than the computation.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    use theta_asym::Error as E;
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<E>() {
        Some(E::InvalidArgument(_) | E::NegativeM(_) | E::DegenerateB | E::RegimeViolation { .. } | E::OrderTooHigh { .. }) => {
            EXIT_USAGE
        }
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Results go to `out`, diagnostics to
/// stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = RunConfig::new(cli.precision)
        .map_err(|e| usage(e.to_string()))?
        .with_cache_dir(cli.cache_dir.clone())
        .with_output(cli.output)
        .with_slow(cli.slow);
    let store = TableStore::new(config.cache_dir.clone());
    match &cli.command {
        Command::Compute(args) => {
            let id = StatisticId::new(args.family, args.m, args.k, args.n);
            let record = compute(&id, args.form, &store, &config)?;
            write_records(out, config.output, &[record])?;
            Ok(EXIT_OK)
        }
        Command::Table(args) => {
            let which = Which::from_number(args.which).ok_or_else(|| usage(format!("no table {}; expected 1 or 2", args.which)))?;
            let rows = if args.rows.is_empty() {
                let mut rows = FAST_ROWS.to_vec();
                if config.slow {
                    rows.extend(SLOW_ROWS);
                }
                rows
            } else {
                args.rows.clone()
            };
            if let Some(&row) = rows.iter().find(|&&r| crate::table::is_slow_row(r) && !config.slow) {
                return Err(usage(format!("row {row} needs p(n) up to {} and runs only with --slow", row * row)));
            }
            let result = table(which, &rows, &store, &config)?;
            match config.output {
                OutputFormat::Json => write_json(out, &result)?,
                OutputFormat::Csv => write_csv(out, &HEADER, result.iter().map(flatten))?,
                OutputFormat::Tty => {
                    writeln!(out, "Table {}", which.number())?;
                    write_aligned(out, &HEADER, &result.iter().map(flatten).collect::<Vec<_>>())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let suites = if args.suites.is_empty() { Suite::ALL.to_vec() } else { args.suites.clone() };
            let mut reports = Vec::new();
            for suite in suites {
                log::info!("running suite {suite}");
                reports.push(run_suite(suite, &store, &config)?);
            }
            write_reports(out, config.output, &reports)?;
            Ok(if reports.iter().all(SuiteReport::passed) { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Scan(args) => {
            let request = ScanRequest { family: args.family, k: args.k, ns: args.n.clone(), ms: args.m.clone(), form: args.form };
            let records = scan(&request, &store, &config)?;
            write_records(out, config.output, &records)?;
            Ok(EXIT_OK)
        }
        Command::Cache(cmd) => {
            let dir = config.cache_dir.as_ref().ok_or_else(|| usage("cache commands need --cache-dir"))?;
            match *cmd {
                CacheCommand::Build { k, max_n } => {
                    std::fs::create_dir_all(dir)?;
                    let t = load_or_build(dir, k, max_n)?;
                    writeln!(out, "{}: k={} N={}", cache_path(dir, k).display(), t.k(), t.max_n())?;
                    Ok(EXIT_OK)
                }
                CacheCommand::Check { k } => {
                    let path = cache_path(dir, k);
                    match load(&path, k) {
                        Ok(t) => {
                            writeln!(out, "{}: ok, k={} N={}", path.display(), t.k(), t.max_n())?;
                            Ok(EXIT_OK)
                        }
                        Err(e) => {
                            writeln!(out, "{}: {e}", path.display())?;
                            Ok(EXIT_FAILURE)
                        }
                    }
                }
            }
        }
    }
}

fn write_reports(out: &mut dyn Write, format: OutputFormat, reports: &[SuiteReport]) -> anyhow::Result<()> {
    match format {
        OutputFormat::Json => write_json(out, reports),
        OutputFormat::Csv => write_csv(
            out,
            &["suite", "check", "passed", "detail"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| vec![r.suite.to_string(), c.name.clone(), c.passed.to_string(), c.detail.clone()])
            }),
        ),
        OutputFormat::Tty => {
            for r in reports {
                writeln!(out, "[{}] {} ({:.2} s)", if r.passed() { "PASS" } else { "FAIL" }, r.suite, r.seconds)?;
                for c in &r.checks {
                    writeln!(out, "  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
                }
            }
            Ok(())
        }
    }
}
