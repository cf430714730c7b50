use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use yolk::{Metric, NormTag};

use crate::generate::Generator;
use crate::input::InputFormat;

#[derive(Debug, Parser)]
#[command(name = "yolk", version, about = "Yolk of a planar point set under L1, L-infinity or approximate L2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the yolk with the decision-driven solver.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metric: MetricArgs,
        /// Write an SVG rendering of the instance and the yolk.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Compute the yolk with the brute-force reference (at most 300 points).
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run solver and reference and compare radii; exits 3 on disagreement.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Time the decision procedure on generated inputs of growing size.
    Bench {
        #[arg(long, value_enum, default_value_t = Generator::Uniform)]
        gen: Generator,
        /// Comma-separated point counts.
        #[arg(long, value_delimiter = ',', default_values_t = [1_000usize, 10_000, 100_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Timed runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Polygon vertex count.
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Write a generated point file.
    Gen {
        #[arg(long, value_enum)]
        gen: Generator,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Destination file; standard output if omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Point file, or `-` for standard input.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub input: Option<PathBuf>,
    /// Overrides detection from the file extension.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
    /// Generate the instance instead of reading one.
    #[arg(long, value_enum)]
    pub gen: Option<Generator>,
    /// Instance size for `--gen` (default 16).
    #[arg(long)]
    pub n: Option<usize>,
    /// Seed for `--gen` (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct MetricArgs {
    #[arg(long, value_enum, default_value_t = MetricArg::L1)]
    pub metric: MetricArg,
    /// Approximation factor; required with `--metric l2` and rejected otherwise.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    L1,
    L2,
    Linf,
}

impl MetricArg {
    pub fn metric(self) -> Metric {
        match self {
            MetricArg::L1 => Metric::L1,
            MetricArg::L2 => Metric::L2Approx,
            MetricArg::Linf => Metric::Linf,
        }
    }

    pub fn norm(self) -> NormTag {
        match self {
            MetricArg::L1 => NormTag::Diamond,
            MetricArg::L2 => NormTag::Euclidean,
            MetricArg::Linf => NormTag::Square,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}
