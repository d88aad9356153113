//! `lrdcov`: generate series, run independence tests, reproduce rejection
//! tables and evaluate limit-theory diagnostics.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit status when the independence hypothesis is rejected.
pub const EXIT_REJECT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "lrdcov", version, about = "Distance-covariance independence tests for long-range dependent series")]
struct Cli {
    /// Worker threads (default: all cores); results do not depend on it
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate fractional Gaussian noise or a dependent pair as CSV
    Gen(GenArgs),
    /// Run the subsampling independence test; exit 3 on rejection
    Test(TestArgs),
    /// Rejection rates over a published grid or a single scenario
    Mc(McArgs),
    /// Limit-theory quantities as JSON
    Diag(DiagArgs),
    /// Write the synthetic three-station monthly fixture
    Fixtures(FixtureArgs),
}

fn unit_open(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("must lie in (0, 1), got {v}"))
    }
}

fn unit_closed_signed(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.abs() <= 1.0 {
        Ok(v)
    } else {
        Err(format!("must lie in [-1, 1], got {v}"))
    }
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be finite, got {v}"))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Transform {
    Uniform,
    Parabolic,
    Wavy,
    Rotation,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Hurst parameter H in (0, 1)
    #[arg(long, value_parser = unit_open)]
    pub hurst: f64,
    /// Series length, at least 2
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
    /// Master seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cross-correlation r in [-1, 1]; emits a pair `x,y`
    #[arg(long, value_parser = unit_closed_signed)]
    pub cross_corr: Option<f64>,
    /// Transform applied to the Gaussian series
    #[arg(long, value_enum)]
    pub transform: Option<Transform>,
    /// Transform parameter: parabolic |v| ≤ √15/2, wavy |v| ≤ √(4725/242), rotation any
    #[arg(long, value_parser = finite)]
    pub v: Option<f64>,
    /// Output path (default: stdout)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StatisticArg {
    /// √n · V_n
    DcovSqrtN,
    /// n^D · V_n (requires --d)
    DcovNPowD,
    /// n^{-1/2} |Σ (X − X̄)(Y − Ȳ)|
    Pearson,
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Paired CSV with columns `x` and `y` (`#` lines ignored)
    #[arg(long, conflicts_with_all = ["x", "y"], required_unless_present = "x")]
    pub input: Option<PathBuf>,
    /// Monthly CSV (`year,month,value`) for X
    #[arg(long, requires = "y")]
    pub x: Option<PathBuf>,
    /// Monthly CSV (`year,month,value`) for Y
    #[arg(long, requires = "x")]
    pub y: Option<PathBuf>,
    /// Remove yearly trend and seasonal means before testing (monthly input)
    #[arg(long, requires = "x")]
    pub deseasonalize: bool,
    /// Block length l ≥ 1 (default ⌊√n⌋)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub block_len: Option<u64>,
    /// Lag d ≥ 0 between X and Y blocks (default ⌊0.1 n⌋)
    #[arg(long)]
    pub lag: Option<u64>,
    /// Significance level α in (0, 1)
    #[arg(long, default_value_t = 0.05, value_parser = unit_open)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = StatisticArg::DcovSqrtN)]
    pub statistic: StatisticArg,
    /// Long-range dependence parameter D in (0, 1) for dcov-n-pow-d
    #[arg(long, value_parser = unit_open)]
    pub d: Option<f64>,
    /// Output path for the JSON report (default: stdout)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScenarioArg {
    Linear,
    Parabolic,
    Wavy,
    Rectangular,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Published table 1..8 (odd: distance covariance, even: Pearson)
    #[arg(long, conflicts_with = "scenario", required_unless_present = "scenario")]
    pub table: Option<u8>,
    /// Single scenario instead of a table
    #[arg(long, value_enum, requires_all = ["param", "hurst", "n"])]
    pub scenario: Option<ScenarioArg>,
    /// Scenario parameters (comma-separated r or v values)
    #[arg(long, value_delimiter = ',', value_parser = finite)]
    pub param: Vec<f64>,
    /// Hurst parameters in (0, 1), comma-separated
    #[arg(long, value_delimiter = ',', value_parser = unit_open)]
    pub hurst: Vec<f64>,
    /// Sample sizes, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Statistic for --scenario runs (default: regime chosen from H)
    #[arg(long, value_enum)]
    pub statistic: Option<StatisticArg>,
    /// Replications per cell, at least 1
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub reps: u64,
    /// Block-length exponent γ in (0, 1): l = ⌊n^γ⌋
    #[arg(long, default_value_t = 0.5, value_parser = unit_open)]
    pub gamma: f64,
    /// Master seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output path (default: stdout)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Also write one simulated sample per parameter value (columns param,x,y)
    #[arg(long)]
    pub scatter: Option<PathBuf>,
    /// Sample size for --scatter
    #[arg(long, default_value_t = 1000)]
    pub scatter_n: usize,
    /// Hurst parameter for --scatter
    #[arg(long, default_value_t = 0.7, value_parser = unit_open)]
    pub scatter_hurst: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Diagnostic {
    /// σ² = Σ ρ_X(k) ρ_Y(k)
    Sigma,
    /// Γ_{s,t}
    Gamma,
    /// C_{s,t}
    Cparam,
    /// n^{D/2} · ‖reduction residual‖ medians over a list of n
    Reduction,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    #[arg(value_enum)]
    pub name: Diagnostic,
    /// Use i.i.d. autocovariances for both series
    #[arg(long, conflicts_with = "hurst")]
    pub iid: bool,
    /// Hurst parameter in (0, 1) for X (and Y unless --hurst-y)
    #[arg(long, value_parser = unit_open)]
    pub hurst: Option<f64>,
    /// Hurst parameter in (0, 1) for Y
    #[arg(long, value_parser = unit_open)]
    pub hurst_y: Option<f64>,
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub s: f64,
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub t: f64,
    /// Truncation lag for the series
    #[arg(long, default_value_t = lrdcov::asymptotics::DEFAULT_KMAX)]
    pub kmax: u64,
    /// Sample sizes for `reduction`, comma-separated
    #[arg(long, value_delimiter = ',', default_value = "256,1024,4096")]
    pub ns: Vec<usize>,
    /// Replications per sample size for `reduction`
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub reps: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path (default: stdout)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// Directory receiving station_a.csv, station_b.csv, station_c.csv
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads.into()).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::FAILURE;
        }
    }
    let result = match cli.command {
        Command::Gen(a) => commands::gen(a).map(|_| false),
        Command::Test(a) => commands::test(a),
        Command::Mc(a) => commands::mc(a).map(|_| false),
        Command::Diag(a) => commands::diag(a).map(|_| false),
        Command::Fixtures(a) => commands::fixtures(a).map(|_| false),
    };
    match result {
        Ok(true) => ExitCode::from(EXIT_REJECT),
        Ok(false) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
