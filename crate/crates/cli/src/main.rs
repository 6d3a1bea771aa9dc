//! Command-line front end: parses function documents, dispatches to the
//! construction/certification/verification operations, and emits
//! machine-readable JSON reports.
//!
//! Exit codes: 0 success or property holds; 1 property fails (witness in the
//! report); 2 input or usage error; 3 exhaustive guard exceeded.

mod commands;
mod report;
mod schema;

use clap::{Parser, Subcommand};
use commands::{CommandOutput, GalleryKind, Method};
use std::path::PathBuf;
use std::process::ExitCode;
use subapprox::Guard;

#[derive(Parser)]
#[command(
    name = "subapprox",
    version,
    about = "Exact approximation of submodular function classes by cuts, trees, and coverage"
)]
struct Cli {
    /// Exhaustive-scan guard: refuse ground sets larger than this
    #[arg(long, global = true, default_value_t = subapprox::DEFAULT_MAX_EXHAUSTIVE)]
    max_n: usize,

    /// Thread count for internal parallel scans (results are unchanged)
    #[arg(long, global = true)]
    parallel: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive submodularity and class checks for a function document
    Check { file: PathBuf },

    /// Construct an approximator and verify its sandwich exactly
    Approx {
        /// Which construction to run
        #[arg(long, value_enum)]
        method: Method,
        file: PathBuf,
        /// Also write the approximator as a loadable function document
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Sampling seed (coverage-sampled only; default 0)
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Exact approximation-ratio report between two function documents
    Verify {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
    },

    /// Decide whether a function is a coverage function (hitting weights)
    IsCoverage { file: PathBuf },

    /// Emit and check the explicit dual certificate for the budgeted-uniform
    /// instance with n = k^2
    CertifyDual {
        #[arg(long)]
        k: usize,
    },

    /// Solve the symmetrized primal exactly by basic-point enumeration
    CertifyPrimal {
        #[arg(long)]
        k: usize,
    },

    /// Emit a hard-instance function document
    Gallery {
        #[arg(long, value_enum)]
        kind: GalleryKind,
        #[arg(long)]
        n: Option<usize>,
        /// Size of the distinguished set A (general kind; default n/2)
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<CommandOutput> {
    if let Some(threads) = cli.parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .ok();
    }
    let guard = Guard::new(cli.max_n);
    match cli.command {
        Command::Check { file } => commands::cmd_check(&file, guard),
        Command::Approx {
            method,
            file,
            output,
            seed,
        } => commands::cmd_approx(method, &file, &output, seed, guard),
        Command::Verify { target, candidate } => commands::cmd_verify(&target, &candidate, guard),
        Command::IsCoverage { file } => commands::cmd_is_coverage(&file, guard),
        Command::CertifyDual { k } => commands::cmd_certify_dual(k),
        Command::CertifyPrimal { k } => commands::cmd_certify_primal(k),
        Command::Gallery {
            kind,
            n,
            a,
            k,
            output,
        } => commands::cmd_gallery(kind, n, a, k, &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let guard_exceeded = err.chain().any(|cause| {
                matches!(
                    cause.downcast_ref::<subapprox::Error>(),
                    Some(subapprox::Error::ExhaustiveGuardExceeded { .. })
                )
            });
            if guard_exceeded {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
