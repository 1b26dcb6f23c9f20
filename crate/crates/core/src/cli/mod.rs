//! Command-line front end: argument parsing and the subcommands.
//!
//! Exit codes: `0` success, `2` validation, `3` numeric-certificate failure,
//! `4` I/O.

pub mod commands;
pub mod config;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "ISOFIELD_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "isofield", version, about = "Isotropic random fields on the circle, the sphere and SU(2)")]
pub struct Cli {
    /// Directory for output files.
    #[arg(long, global = true, env = OUT_DIR_ENV, hide_env_values = true, default_value = ".")]
    pub out_dir: PathBuf,

    /// Worker threads for seeded runs (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample coefficients and write them with the field on a quadrature grid.
    Simulate {
        /// Simulation config (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Override the seed in the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run an invariance, independence or Gaussianity experiment.
    Test {
        /// Experiment config (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Override the number of seeded runs.
        #[arg(long)]
        runs: Option<usize>,
        /// Override the base seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Search for a witness rotation instead of using the configured one.
        #[arg(long)]
        search_rotation: bool,
    },
    /// Search witness rotations for degrees 1..=DEGREE and probe the zero set.
    CheckAssumption {
        /// Largest degree to check.
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Haar samples for the zero-set probe.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Split the SU(2) fundamental into conjugation-orthogonal parts.
    ConjBasisDemo {
        /// Order of the SU(2) product quadrature.
        #[arg(long, default_value_t = 4)]
        quadrature_order: usize,
        /// Seed for the sampled group elements.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Calibrate the sample size of an experiment arm for a target power.
    Pilot {
        /// Pilot config (JSON).
        #[arg(long)]
        config: PathBuf,
    },
}

/// Parses `args`, runs the command, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second initialization (e.g. in tests) keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match commands::dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
