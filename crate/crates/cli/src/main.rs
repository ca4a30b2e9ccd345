use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod run;

use run::CliError;

/// Exact tools for SU(3)-structures on six-dimensional Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "su3", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Working precision in decimal digits for float values (at least 32).
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(32..))]
    pub precision: u32,
    /// Wall-clock budget for Gröbner work, in minutes.
    #[arg(long = "budget-min", global = true, default_value_t = 30.0)]
    pub budget_min: f64,
    /// Memory budget for Gröbner work, in MiB.
    #[arg(long = "budget-mib", global = true, default_value_t = 4096)]
    pub budget_mib: u64,
    /// Recorded in the report header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a pair (ω, ψ₊) and print its invariants and metric.
    Validate {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
    },
    /// Torsion class of a structure on an algebra.
    Classify {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
    },
    /// Covector obstruction to half-flat structures.
    Obstruct {
        #[arg(long)]
        algebra: String,
        /// A 1-form; without it the default candidates are scanned.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Reduced Gröbner basis of the generators in a file (one per line).
    Groebner {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// Replace the ideal by its quotient by this polynomial first.
        #[arg(long)]
        quotient: Option<String>,
        /// Replace the ideal by its saturation by this polynomial first.
        #[arg(long)]
        saturate: Option<String>,
    },
    /// Polynomial-system pipelines.
    Pipeline {
        #[command(subcommand)]
        which: Pipeline,
    },
    /// List the built-in algebras.
    Catalog,
    /// Ricci curvature of a metric and the Einstein constant, if any.
    Einstein {
        #[arg(long)]
        algebra: String,
        /// identity, jensen or file:<path> (six rows of six scalars).
        #[arg(long, default_value = "identity")]
        metric: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Pipeline {
    /// Coupled structures on su(2)⊕su(2) inducing the standard or Jensen metric.
    Su2su2Coupled,
    /// Non-existence of coupled or half-flat structures inducing the Einstein metric.
    Nonexist {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "coupled")]
        mode: Mode,
        /// Also write the generators, one per line, to this file.
        #[arg(long = "emit-ideal")]
        emit_ideal: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Mode {
    Coupled,
    Halfflat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("su3: {}", e);
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Budget(_) => 3,
            })
        }
    }
}
