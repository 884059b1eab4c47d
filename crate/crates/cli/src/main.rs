//! `twmis`: solve, check, transform, generate and benchmark instances.
//!
//! Exit codes: 0 success, 1 I/O or usage error, 2 parse error, 3 invalid
//! decomposition, 4 audit failure, 5 black-box refusal.
//! `TWMIS_THREADS` sets the worker thread count.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twmis::graph::GraphFormat;

use commands::{SolveOptions, TransformOp};

#[derive(Parser)]
#[command(
    name = "twmis",
    version,
    about = "Maximum independent set approximation by tree decompositions"
)]
struct Cli {
    /// Graph file format: gr, dimacs or edge-list.
    #[arg(long, global = true, default_value = "gr")]
    format: GraphFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Approximate a maximum independent set.
    Solve {
        graph: PathBuf,
        td: PathBuf,
        /// exact:<budget> or clique-removal.
        #[arg(long = "box", default_value = "exact:30")]
        black_box: String,
        /// Also compute the independence number and the ratio.
        #[arg(long)]
        oracle: bool,
        /// Run all structural checks; exit 4 if any fails.
        #[arg(long)]
        audit: bool,
        /// Write the solution, one 1-indexed vertex per line.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Check a tree decomposition against its graph.
    Validate { graph: PathBuf, td: PathBuf },
    /// Rewrite a decomposition.
    Transform {
        graph: PathBuf,
        td: PathBuf,
        #[arg(long, value_enum)]
        op: TransformOp,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random partial k-tree as <prefix>.gr and <prefix>.td.
    Gen {
        n: usize,
        k: usize,
        keep: f64,
        seed: u64,
        prefix: PathBuf,
    },
    /// Solve every <name>.gr / <name>.td pair in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long = "box", default_value = "exact:30")]
        black_box: String,
        /// Number of classes of the width-splitting baseline.
        #[arg(long = "classes", default_value_t = 2)]
        classes: usize,
        /// Write the JSON summary.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check that a solution file is an independent set of the graph.
    Check { graph: PathBuf, solution: PathBuf },
}

fn init_threads() {
    if let Some(n) = std::env::var("TWMIS_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // Ignored if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    let format = cli.format;
    let result = match cli.command {
        Command::Solve {
            graph,
            td,
            black_box,
            oracle,
            audit,
            out,
            report,
            json,
        } => commands::solve(&SolveOptions {
            graph,
            td,
            format,
            black_box,
            oracle,
            audit,
            out,
            report,
            json,
        }),
        Command::Validate { graph, td } => commands::validate(&graph, &td, format),
        Command::Transform { graph, td, op, out } => {
            commands::transform(&graph, &td, format, op, out.as_deref())
        }
        Command::Gen {
            n,
            k,
            keep,
            seed,
            prefix,
        } => commands::gen(n, k, keep, seed, &prefix),
        Command::Bench {
            dir,
            black_box,
            classes,
            json,
        } => commands::bench(&dir, format, &black_box, classes, json.as_deref()),
        Command::Check { graph, solution } => commands::check_solution(&graph, &solution, format),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
