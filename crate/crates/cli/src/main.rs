//! `r1d`: construct, check and enumerate one-dimensional models with rational MLE.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use r1d_core::enumerate::DEFAULT_BUDGET;

/// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget.
#[derive(Parser, Debug)]
#[command(name = "r1d", version, about, propagate_version = true)]
pub struct Cli {
    /// Print timings and search statistics to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Search {
    /// Worker threads; capped by R1D_MAX_JOBS when set.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum number of partial-support extensions per search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count, and optionally export, all fundamental models of size n and degree d.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Do not retain models; print the count only.
        #[arg(long)]
        count_only: bool,
        /// Write the catalog here (JSON when the name ends in `.json`).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the number of classes under the swap (ν, μ) ↦ (μ, ν).
        #[arg(long)]
        up_to_swap: bool,
        /// Switch off a pruning rule: P1–P5 (or degree, axes, sharp, rank, size) or window.
        #[arg(long = "no-prune", value_name = "RULE", num_args = 1..)]
        no_prune: Vec<String>,
        #[command(flatten)]
        search: Search,
    },
    /// Recompute the known counts for every n ≤ max-n and compare.
    Table {
        #[arg(long)]
        max_n: u32,
        /// Allow n ≥ 6, which takes hours to days.
        #[arg(long)]
        long_running: bool,
        /// Also search d = n − 1 and d = 2n for n ≤ 3 without the window shortcut.
        #[arg(long)]
        probe: bool,
        #[command(flatten)]
        search: Search,
    },
    /// Compare the degree-(2n−2) count with the composition lower bound.
    Recursive {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        search: Search,
    },
    /// Report on a model file, or solve and report on a bare support.
    Check {
        /// Model file, or `-` for standard input.
        #[arg(required_unless_present = "support", conflicts_with = "support")]
        path: Option<String>,
        /// Support as `ν,μ;ν,μ;…`.
        #[arg(long)]
        support: Option<String>,
    },
    /// Solve for the scalings on a support and print the model.
    Solve {
        #[arg(long)]
        support: String,
    },
    /// Compose two models at (d, 0) of the first.
    Compose { first: String, second: String },
    /// Apply one unsplitting move to f, given as a polynomial or a model file.
    Unsplit {
        #[arg(required_unless_present = "poly", conflicts_with = "poly")]
        path: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        /// Target monomial as `a,b`.
        #[arg(long)]
        at: String,
        /// Weight moved, as `p/q`.
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Print the Newton diagram of the cofactor g.
    Diagram {
        path: String,
        /// Omit the sink and source legend.
        #[arg(long)]
        no_markers: bool,
    },
    /// Print the chip configuration of a model.
    Chips {
        path: String,
        /// Mark occupied cells with `*` instead of the scaling.
        #[arg(long)]
        stars: bool,
    },
    /// Maximum likelihood estimate from counts listed in the model's entry order.
    Mle {
        path: String,
        #[arg(long)]
        counts: String,
    },
    /// Instantiate the one-parameter family of size n and degree d at c.
    Family {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        c: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let outcome = commands::run(&cli.command, cli.verbose);
    if cli.verbose {
        eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    }
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
