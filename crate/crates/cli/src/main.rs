use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use compensated_rsqrt::fp::check_fma;
use compensated_rsqrt::harness::{
    inspect, parse_float, render_reports, run_comparison, AlgorithmId, Distribution, Execution, InspectInput,
    ReportFormat, DEFAULT_CHUNK,
};
use compensated_rsqrt::ConfigError;

const EXIT_CONFIG: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "crsqrt", version, about = "Ulp accuracy trials for compensated rsqrt, rhypot and Givens kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded error-rate trial against the exact oracle.
    Bench(BenchArgs),
    /// Run every kernel and the oracle on one input.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// Algorithm id, or a comma-separated list sharing one oracle
    /// (e.g. rsqrt-naive,rsqrt-compensated).
    #[arg(long)]
    algo: String,
    /// `uniform:<lo>,<hi>` or `normal:<mean>,<stddev>`.
    #[arg(long, allow_hyphen_values = true)]
    dist: String,
    #[arg(long, default_value_t = 10_000_000)]
    n: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// csv, json or md.
    #[arg(long, default_value = "md")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Process samples on one thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["f", "g"])]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "g")]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "f")]
    g: Option<String>,
}

fn config_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_CONFIG)
}

fn bench(args: BenchArgs) -> ExitCode {
    let algorithms = match args.algo.split(',').map(str::parse).collect::<Result<Vec<AlgorithmId>, ConfigError>>() {
        Ok(a) => a,
        Err(e) => return config_error(e),
    };
    let dist: Distribution = match args.dist.parse() {
        Ok(d) => d,
        Err(e) => return config_error(e),
    };
    let format: ReportFormat = match args.format.parse() {
        Ok(f) => f,
        Err(e) => return config_error(e),
    };
    let execution = if args.serial { Execution::Serial } else { Execution::Parallel { chunk: DEFAULT_CHUNK } };
    let started = Instant::now();
    let reports = match run_comparison(&algorithms, dist, args.n, args.seed, execution) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };
    log::info!("trial finished in {:.2?}", started.elapsed());
    let text = render_reports(&reports, format);
    match args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn run_inspect(args: InspectArgs) -> ExitCode {
    let input = match (args.x, args.f, args.g) {
        (Some(x), None, None) => parse_float(&x).map(InspectInput::Single),
        (None, Some(f), Some(g)) => parse_float(&f).and_then(|f| parse_float(&g).map(|g| InspectInput::Pair(f, g))),
        _ => return config_error("inspect needs --x, or both --f and --g"),
    };
    let input = match input {
        Ok(i) => i,
        Err(e) => return config_error(e),
    };
    match inspect(input) {
        Ok(record) => {
            print!("{record}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Err(e) = check_fma() {
        eprintln!("error: {e}; refusing to run");
        return ExitCode::from(EXIT_CONFIG);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Bench(args) => bench(args),
        Command::Inspect(args) => run_inspect(args),
    }
}
