//! Batch experiment driver. Each subcommand evaluates one studied object
//! (a frequency, functional, majorant, or discrepancy scan), embeds the
//! resolved parameters in a JSON report, and exits 0 on success. Reports are
//! byte-identical across reruns and thread counts.
//!
//! Exit codes: 2 bad configuration, 3 resource limit, 4 numerical
//! inconsistency between redundant evaluation routes, 1 other failures.

mod commands;
mod config;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use config::ExperimentConfig;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(primelab_core::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        use primelab_core::Error;
        match self {
            CliError::Config(_) => 2,
            CliError::Core(Error::InvalidArgument(_))
            | CliError::Core(Error::IncompleteSpec { .. })
            | CliError::Core(Error::EmptyPopulation(_)) => 2,
            CliError::Core(Error::ResourceLimit(_)) => 3,
            CliError::Core(Error::NumericalInconsistency { .. }) => 4,
            _ => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "primelab",
    version,
    about = "Empirical laboratory for additive functions on shifted primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Experiment description (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Factor-table cache directory (flag > PRIMELAB_CACHE_DIR > config > ./primelab-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Factor-table limit; raised automatically to what the command needs.
    #[arg(long, global = true)]
    limit: Option<u64>,
    /// Report path (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores). Reports do not depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for randomized property probes; recorded in the report.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Build or load the smallest-prime-factor table cache.
    Sieve,
    /// Window frequencies C_h / Q_h / S_h and their exact supremum.
    Concentration,
    /// Dispersion functionals W, Y, E with the bounded minimisation.
    Dispersion,
    /// sup_h frequency times the square root of the matching functional.
    TheoremRatio,
    /// Kernel majorant of Q_h, exact and by quadrature.
    Fejer,
    /// Expanded Selberg square bound over divisor pairs.
    Eq2,
    /// Weighted mean-value majorant of Q_h.
    Eq5,
    /// Weighted mean-value majorant of S_h.
    GoldbachMajorant,
    /// Convolution decomposition tables and diagnostics.
    Decompose,
    /// Averaged progression discrepancy of beta over split moduli.
    Lemma1,
    /// Single-modulus discrepancy and the exceptional-modulus scan.
    Lemma2,
    /// Sieved mean value against both right-side alternatives.
    Lemma3,
    /// Partial sums and verdicts for the three-series criterion.
    ThreeSeries,
    /// Ladder of Goldbach CDFs paired with the three-series verdicts.
    LimitVerdict,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Sieve => "sieve",
            Command::Concentration => "concentration",
            Command::Dispersion => "dispersion",
            Command::TheoremRatio => "theorem-ratio",
            Command::Fejer => "fejer",
            Command::Eq2 => "eq2",
            Command::Eq5 => "eq5",
            Command::GoldbachMajorant => "goldbach-majorant",
            Command::Decompose => "decompose",
            Command::Lemma1 => "lemma1",
            Command::Lemma2 => "lemma2",
            Command::Lemma3 => "lemma3",
            Command::ThreeSeries => "three-series",
            Command::LimitVerdict => "limit-verdict",
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if cli.threads > 0 {
        // Ignore the error when a pool already exists (tests call run twice).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }

    let config = match &cli.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::default(),
    };

    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("PRIMELAB_CACHE_DIR").map(PathBuf::from))
        .or_else(|| config.cache.as_ref().and_then(|c| c.dir.clone()))
        .unwrap_or_else(|| PathBuf::from("primelab-cache"));
    let limit_override = cli
        .limit
        .or_else(|| config.cache.as_ref().and_then(|c| c.limit));

    let ctx = commands::Ctx {
        config: &config,
        cache_dir,
        limit_override,
    };

    let (params, report) = match cli.command {
        Command::Sieve => commands::sieve(&ctx)?,
        Command::Concentration => commands::concentration(&ctx)?,
        Command::Dispersion => commands::dispersion(&ctx)?,
        Command::TheoremRatio => commands::theorem_ratio_cmd(&ctx)?,
        Command::Fejer => commands::fejer(&ctx)?,
        Command::Eq2 => commands::eq2(&ctx)?,
        Command::Eq5 => commands::eq5(&ctx)?,
        Command::GoldbachMajorant => commands::goldbach_majorant(&ctx)?,
        Command::Decompose => commands::decompose_cmd(&ctx)?,
        Command::Lemma1 => commands::lemma1(&ctx)?,
        Command::Lemma2 => commands::lemma2(&ctx)?,
        Command::Lemma3 => commands::lemma3(&ctx)?,
        Command::ThreeSeries => commands::three_series_cmd(&ctx)?,
        Command::LimitVerdict => commands::limit_verdict_cmd(&ctx)?,
    };

    let envelope = json!({
        "artifact": "primelab",
        "version": env!("CARGO_PKG_VERSION"),
        "command": cli.command.name(),
        "seed": cli.seed,
        "params": params,
        "report": report,
    });
    let mut text = serde_json::to_string_pretty(&envelope)
        .map_err(|e| CliError::Config(format!("serialize: {e}")))?;
    text.push('\n');

    match &cli.out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent).map_err(CliError::Io)?;
            }
            std::fs::write(path, text).map_err(CliError::Io)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("primelab: error: {e}");
        std::process::exit(e.exit_code());
    }
}
