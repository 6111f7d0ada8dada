use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use splitlab::config::{Experiment, RunConfig};
use splitlab::execute;

/// Splitting-integrator laboratory on the Sun-Earth-Moon system.
#[derive(Parser)]
#[command(name = "splitlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one scheme and emit the energy series as CSV
    Simulate(RunArgs),
    /// Measure energy error over a step grid and fit the order
    Converge(RunArgs),
    /// Tabulate weighted evaluation cost against achieved accuracy
    Benchmark(RunArgs),
    /// Verify a scheme's shadow-Hamiltonian expansion in exact arithmetic
    #[command(name = "shadow-verify")]
    ShadowVerify(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// TOML config file; command-line flags override its values
    #[arg(long)]
    config: Option<PathBuf>,

    /// Scheme name (leapfrog, leapfrog-dkd, omelyan5, omelyan5-fg,
    /// nested-leapfrog, alike5, nested-fg)
    #[arg(long)]
    scheme: Option<String>,

    /// Comma-separated scheme names for the benchmark
    #[arg(long, value_delimiter = ',')]
    schemes: Option<Vec<String>>,

    /// Inner-loop repetitions for nested schemes
    #[arg(long = "M", alias = "m")]
    m: Option<u32>,

    /// Outer kick coefficient `p/q` for alike5
    #[arg(long)]
    lambda: Option<String>,

    /// Step size(s) in months, comma separated where a grid is expected
    #[arg(long, value_delimiter = ',')]
    h: Option<Vec<f64>>,

    /// Integration span in months
    #[arg(long = "t-end")]
    t_end: Option<f64>,

    /// Record a sample every this many steps
    #[arg(long = "sample-every")]
    sample_every: Option<u64>,

    /// Truncation degree for shadow verification (2..=6)
    #[arg(long)]
    degree: Option<usize>,

    /// Output file; stdout when omitted
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,

    /// Cost of one slow force evaluation
    #[arg(long = "slow-cost")]
    slow_cost: Option<f64>,

    /// Cost of one fast force evaluation
    #[arg(long = "fast-cost")]
    fast_cost: Option<f64>,

    /// Cost of one slow force-gradient evaluation
    #[arg(long = "slow-gradient-cost")]
    slow_gradient_cost: Option<f64>,

    /// Cost of one fast force-gradient evaluation
    #[arg(long = "fast-gradient-cost")]
    fast_gradient_cost: Option<f64>,

    /// Cost of one drift
    #[arg(long = "drift-cost")]
    drift_cost: Option<f64>,
}

fn merge(experiment: Experiment, args: RunArgs) -> Result<RunConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("config: cannot read {}", path.display()))?;
            let mut from_file = RunConfig::from_toml(&text)?;
            from_file.experiment = experiment;
            from_file
        }
        None => RunConfig::new(experiment),
    };
    if let Some(scheme) = args.scheme {
        config.scheme = Some(scheme);
    }
    if let Some(schemes) = args.schemes {
        config.schemes = schemes;
    }
    if let Some(m) = args.m {
        config.m = m;
    }
    if let Some(lambda) = args.lambda {
        config.lambda = lambda;
    }
    if let Some(h) = args.h {
        config.h = h;
    }
    if let Some(t_end) = args.t_end {
        config.t_end = t_end;
    }
    if let Some(sample_every) = args.sample_every {
        config.sample_every = sample_every;
    }
    if let Some(degree) = args.degree {
        config.degree = degree;
    }
    if let Some(output) = args.output {
        config.output = Some(output);
    }
    if let Some(w) = args.slow_cost {
        config.weights.slow_force = w;
    }
    if let Some(w) = args.fast_cost {
        config.weights.fast_force = w;
    }
    if let Some(w) = args.slow_gradient_cost {
        config.weights.slow_force_gradient = w;
    }
    if let Some(w) = args.fast_gradient_cost {
        config.weights.fast_force_gradient = w;
    }
    if let Some(w) = args.drift_cost {
        config.weights.drift = w;
    }
    if config.experiment == Experiment::Benchmark && config.schemes.is_empty() {
        config.schemes = vec!["leapfrog".into(), "omelyan5-fg".into(), "nested-fg".into()];
    }
    Ok(config)
}

/// Write via a temporary sibling and rename, so partial output never lands
/// under the final name.
fn write_atomically(path: &PathBuf, text: &str) -> Result<()> {
    let mut tmp = path.clone();
    let mut name = tmp.file_name().unwrap_or_default().to_os_string();
    name.push(".tmp");
    tmp.set_file_name(name);
    std::fs::write(&tmp, text).with_context(|| format!("output: cannot write {}", tmp.display()))?;
    std::fs::rename(&tmp, path)
        .with_context(|| format!("output: cannot move into place at {}", path.display()))?;
    Ok(())
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let (experiment, args) = match cli.command {
        Command::Simulate(args) => (Experiment::Simulate, args),
        Command::Converge(args) => (Experiment::Converge, args),
        Command::Benchmark(args) => (Experiment::Benchmark, args),
        Command::ShadowVerify(args) => (Experiment::ShadowVerify, args),
    };
    let config = merge(experiment, args)?;
    let text = execute(&config)?;
    match &config.output {
        Some(path) => write_atomically(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
