//! `triadic` command-line tool.
//!
//! Exit codes: 0 on success (including reports that only carry markers such
//! as `no-wedges`), 1 on usage errors, 2 on I/O or parse errors.

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use triadic::{Error, SampleSize};

use commands::{CompareArgs, EstimateArgs, Metric, StatsArgs};
use report::OutputFormat;

#[derive(Parser)]
#[command(
    name = "triadic",
    version,
    about = "Exact and wedge-sampled triangle statistics for edge-list graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Edge-list file: two integer ids per line, `#` starts a comment line.
    graph: PathBuf,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Exact counts by full triangle enumeration.
    Stats {
        #[command(flatten)]
        common: Common,
        /// Treat edges as directed and add the per-type triangle census.
        #[arg(long)]
        directed: bool,
        /// Emit C_v for every vertex.
        #[arg(long)]
        per_vertex: bool,
        /// Average C over vertices of degree >= 2 only.
        #[arg(long)]
        exclude_low_degree: bool,
    },
    /// Wedge-sampling estimate of one metric.
    Estimate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        metric: Metric,
        /// Number of wedge samples.
        #[arg(long, conflicts_with = "epsilon")]
        samples: Option<u64>,
        /// Target additive error; the sample count is derived with --delta.
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = triadic::sampler::DEFAULT_DELTA)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `log`, `none` (one bin per degree) or ascending upper bounds such as `2,4,16`.
        #[arg(long, default_value = "log")]
        bins: String,
        /// Overrides of the wedge type used per triangle type, e.g. `a=i,c=i`.
        #[arg(long, default_value = "default")]
        wedge_assignment: String,
        /// Worker threads; 0 uses every available core.
        #[arg(long, env = "TRIADIC_WORKERS", default_value_t = 0)]
        workers: usize,
    },
    /// Error and speed-up of sampling against exact enumeration.
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Metric::Transitivity)]
        metric: Metric,
        /// Comma-separated sample counts.
        #[arg(long, value_delimiter = ',', default_value = "2000,8000,32000")]
        ladder: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        trials: u32,
        #[arg(long, default_value_t = triadic::sampler::DEFAULT_DELTA)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "TRIADIC_WORKERS", default_value_t = 0)]
        workers: usize,
    },
}

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let path = match &cli.command {
        Command::Stats { common, .. } | Command::Estimate { common, .. } | Command::Compare { common, .. } => {
            common.graph.clone()
        }
    };
    let (result, output) = run(cli.command);
    match result {
        Ok(report) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = report.write(&mut lock, output).and_then(|_| lock.flush()) {
                eprintln!("error: writing report: {e}");
                return ExitCode::from(EXIT_IO);
            }
            ExitCode::SUCCESS
        }
        Err(e @ (Error::Io(_) | Error::Parse { .. })) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(EXIT_IO)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> (Result<report::Report, Error>, OutputFormat) {
    match command {
        Command::Stats {
            common,
            directed,
            per_vertex,
            exclude_low_degree,
        } => (
            commands::stats(StatsArgs {
                path: &common.graph,
                directed,
                per_vertex,
                exclude_low_degree,
            }),
            common.output,
        ),
        Command::Estimate {
            common,
            metric,
            samples,
            epsilon,
            delta,
            seed,
            bins,
            wedge_assignment,
            workers,
        } => {
            let size = match (samples, epsilon) {
                (Some(k), _) => SampleSize::Count(k),
                (None, Some(epsilon)) => SampleSize::Accuracy { epsilon },
                (None, None) => {
                    return (
                        Err(Error::InvalidArgument("give --samples or --epsilon".into())),
                        common.output,
                    )
                }
            };
            (
                commands::estimate(EstimateArgs {
                    path: &common.graph,
                    metric,
                    size,
                    delta,
                    seed,
                    workers,
                    bins: &bins,
                    assignment: &wedge_assignment,
                }),
                common.output,
            )
        }
        Command::Compare {
            common,
            metric,
            ladder,
            trials,
            delta,
            seed,
            workers,
        } => (
            commands::compare(CompareArgs {
                path: &common.graph,
                metric,
                ladder: &ladder,
                trials,
                delta,
                seed,
                workers,
            }),
            common.output,
        ),
    }
}
