mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "htiling", version, about = "h-tilings and Morse shellings of simplicial complexes")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a standard complex.
    Generate {
        /// simplex, boundary, wedge, disjoint, cone or join.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Number of simplices for `disjoint`.
        #[arg(long, default_value_t = 2)]
        count: u32,
        /// Complex files for `cone` (one) and `join` (two).
        #[arg(long)]
        input: Vec<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Apply one stellar subdivision, or a barycentric one.
    Subdivide {
        #[arg(long, short)]
        input: PathBuf,
        /// Face to subdivide at, e.g. "0 1 2".
        #[arg(long, conflicts_with = "barycentric", required_unless_present = "barycentric")]
        at: Option<String>,
        #[arg(long)]
        barycentric: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Shell a complex, writing tiling, log and stats files.
    Shell {
        #[arg(long, short)]
        input: PathBuf,
        /// facets, ridges, mixed or barycentric.
        #[arg(long, default_value = "facets")]
        mode: String,
        /// Use the ridge-adjacency order for closed pseudo-manifolds.
        #[arg(long)]
        pseudomanifold: bool,
        #[arg(long)]
        output_dir: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Check that a tiling partitions its target and is shelled.
    Verify {
        #[arg(long, short)]
        tiling: PathBuf,
        /// List every witness rather than the first of each kind.
        #[arg(long, short)]
        verbose: bool,
        /// Only check the tiling, not the shelling order.
        #[arg(long)]
        no_shelling: bool,
    },
    /// h-, c- and f-vectors with their identities.
    Vectors {
        #[arg(long, short)]
        tiling: PathBuf,
        /// Treat the target as a closed homology manifold.
        #[arg(long)]
        manifold: bool,
    },
    /// Enumerate the h-tilings of a tiny complex.
    Enumerate {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        /// Write each tiling as tiling_<i>.txt here.
        #[arg(long)]
        output_dir: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Compare the constructive shelling with exhaustive search.
    CrossCheck {
        #[arg(long, short)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = match args.command {
        Command::Generate {
            name,
            n,
            count,
            input,
            output,
            force,
        } => commands::generate(&name, n, count, &input, output.as_deref(), force),
        Command::Subdivide {
            input,
            at,
            barycentric,
            output,
            force,
        } => commands::subdivide(&input, at.as_deref(), barycentric, output.as_deref(), force),
        Command::Shell {
            input,
            mode,
            pseudomanifold,
            output_dir,
            force,
        } => commands::shell(&input, &mode, pseudomanifold, &output_dir, force),
        Command::Verify {
            tiling,
            verbose,
            no_shelling,
        } => commands::verify(&tiling, verbose, !no_shelling),
        Command::Vectors { tiling, manifold } => commands::vectors(&tiling, manifold),
        Command::Enumerate {
            input,
            limit,
            output_dir,
            force,
        } => commands::enumerate(&input, limit, output_dir.as_deref(), force),
        Command::CrossCheck { input } => commands::cross_check(&input),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
