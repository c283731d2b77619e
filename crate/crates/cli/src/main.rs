//! `radon-nets` command-line front end.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "radon-nets",
    version,
    about = "Invariants, weak nets and lower bounds for finite convexity spaces"
)]
struct Cli {
    /// Print a two-column table instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a space file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write the space here instead of stdout.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Radon number, Helly number, VC dimension and separability.
    Analyze {
        spaces: Vec<PathBuf>,
        /// Analyze every `.json` file in a directory.
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Build a weak ε-net.
    Net {
        space: PathBuf,
        /// Distribution file; uniform when omitted.
        dist: Option<PathBuf>,
        #[arg(long)]
        eps: String,
        /// Re-check the net against every convex set.
        #[arg(long)]
        verify: bool,
        /// Also compute the exact minimum weak net.
        #[arg(long)]
        oracle: bool,
    },
    /// Lower-bound certificate for weak ε-net size.
    Lowerbound {
        space: PathBuf,
        dist: Option<PathBuf>,
        #[arg(long)]
        eps: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Kneser graph sizes and chromatic number.
    Kneser {
        #[arg(long)]
        n: usize,
        /// Defaults to n/4 with --alon.
        #[arg(long)]
        k: Option<usize>,
        /// Colour the graph exactly.
        #[arg(long)]
        exact: bool,
        /// Check χ(KG(n, n/4)) > n/10.
        #[arg(long)]
        alon: bool,
    },
    /// Check |F_1 ∪ .. ∪ F_s| <= 2^n - 2^(n-s) for intersecting families.
    Kleitman {
        #[arg(long)]
        n: usize,
        /// One family, sets separated by ';' and points by ',', e.g. "0;0,1".
        #[arg(long = "family", required = true)]
        families: Vec<String>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// All subsets of m points.
    Power {
        #[arg(long)]
        m: usize,
    },
    /// Cylinders of the n-cube.
    Cylinders {
        #[arg(long)]
        n: usize,
    },
    /// Subtrees of a tree given as labelled edges, e.g. a-b,b-c.
    Subtree {
        #[arg(long)]
        edges: String,
    },
    /// Lattice-convex sets of a width x height grid.
    Lattice {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
    },
    /// Linear extensions of a poset; relations like 0<1,0<2.
    Poset {
        #[arg(long)]
        elements: usize,
        #[arg(long, default_value = "")]
        relations: String,
    },
    /// Random separable space.
    Random {
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Chromatic,
    Radon,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
