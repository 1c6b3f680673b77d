//! Command-line surface over the `hyponorm` library.
//!
//! [`RunConfig`] is the parsed command line; [`run`] executes it and returns the
//! rendered report together with the process exit status.

mod commands;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use output::Outcome;

/// Exit statuses.
pub mod exit {
    /// A verdict or a report was produced.
    pub const OK: u8 = 0;
    /// Usage, parse or precondition error.
    pub const USAGE: u8 = 1;
    /// The question was left open.
    pub const INCONCLUSIVE: u8 = 2;
    /// `reproduce` found a line that does not match its stated value.
    pub const MISMATCH: u8 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hyponorm::Error),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot write csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot encode json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hyponorm",
    version,
    about = "Hyponormality of Toeplitz operators with radial-monomial symbols on the Bergman space"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

/// Truncation and budget limits for the numerical stages.
#[derive(Clone, Debug, Args)]
pub struct Limits {
    /// Trial budget for the annulus and conjugate searches.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Largest truncation for the eigen-certificate search.
    #[arg(long, default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Relative tolerance below which an eigenvalue counts as negative.
    #[arg(long, default_value_t = hyponorm::commutator::DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bergman projection of z^k z̄^j |z|^t.
    Project {
        k: u64,
        j: u64,
        /// Radial exponent, decimal or p/q.
        t: String,
    },
    /// Search for a negative direction of the self-commutator.
    Check {
        symbol: String,
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Apply the strongest available criterion.
    Classify {
        symbol: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// Thresholds for z^n + C|z|^s.
    Threshold {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(1..))]
        pencil_size: u64,
    },
    /// Certified non-hyponormal |a| for z^n|z|^s + a z^m|z|^t.
    Annuli {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Also write the annulus rows to this CSV file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// z^m(|z|^s0 + a1|z|^s1 + ...).
    Algebraic {
        #[arg(long)]
        m: u64,
        /// Comma-separated exponents s0,s1,...
        #[arg(long, allow_hyphen_values = true)]
        powers: String,
        /// Comma-separated coefficients a1,... (complex literals allowed).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Classify a template over a grid of values of the parameter `a`.
    Scan {
        /// Symbol text in which the identifier `a` is the parameter.
        template: String,
        /// `lo,hi` for Re a.
        #[arg(long, allow_hyphen_values = true)]
        re_range: String,
        /// `lo,hi` for Im a.
        #[arg(long, allow_hyphen_values = true)]
        im_range: String,
        /// Grid spacing in both directions.
        #[arg(long)]
        step: String,
        /// Also write the rows to this CSV file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Quadrature cross-checks; not used by any verdict.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Recompute the published numbers.
    Reproduce,
}

#[derive(Debug, Subcommand)]
pub enum OracleQuery {
    /// <z^a z̄^b |z|^s, z^c z̄^d |z|^t> by radial quadrature.
    Inner {
        a: u64,
        b: u64,
        s: f64,
        c: u64,
        d: u64,
        t: f64,
    },
    /// <[T*,T]u, u> assembled from quadrature inner products.
    Gram {
        symbol: String,
        /// Comma-separated coefficients u_0,u_1,...
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
}

/// Executes one command. Errors map to [`exit::USAGE`].
pub fn run(config: &RunConfig) -> CliResult<Outcome> {
    let outcome = commands::execute(config)?;
    if let Some(path) = &config.output {
        std::fs::write(path, &outcome.text)?;
    }
    Ok(outcome)
}

/// Parses `args` (program name first) and runs; returns the text for stdout, the
/// text for stderr and the exit status. Help and version requests exit 0.
pub fn run_args<I, S>(args: I) -> (String, String, u8)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let text = e.render().to_string();
            return if code == exit::OK {
                (text, String::new(), code)
            } else {
                (String::new(), text, code)
            };
        }
    };
    match run(&config) {
        Ok(o) if config.output.is_some() => (String::new(), String::new(), o.code),
        Ok(o) => (o.text, String::new(), o.code),
        Err(e) => (String::new(), format!("error: {e}\n"), exit::USAGE),
    }
}
