mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::CliError;

/// Exact Hodge integrals, intersection numbers and identity checks.
#[derive(Debug, Parser)]
#[command(name = "socle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a single exact quantity.
    Eval(EvalArgs),
    /// Print the coefficients of a named series.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "I")]
    I,
    #[value(name = "Q")]
    Q,
    #[value(name = "P")]
    P,
    #[value(name = "f")]
    F,
    #[value(name = "hyperelliptic")]
    Hyperelliptic,
    #[value(name = "bracket")]
    Bracket,
    #[value(name = "socle")]
    Socle,
    #[value(name = "named")]
    Named,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub quantity: Quantity,
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub e: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    /// For `named`: kappa_top, kappa_lambda_g, theorem1 or triple_lambda.
    #[arg(long)]
    pub which: Option<String>,
    /// For `bracket`: comma-separated psi exponents.
    #[arg(long, value_delimiter = ',')]
    pub indices: Option<Vec<u32>>,
    /// Append a floating-point approximation to each exact value.
    #[arg(long)]
    pub decimal: bool,
    #[arg(long)]
    pub json: bool,
    /// Bracket memo file to load before and save after evaluation.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "G_k")]
    GK,
    #[value(name = "log_sinc")]
    LogSinc,
    #[value(name = "sinc")]
    Sinc,
    #[value(name = "neg_log_cos_half")]
    NegLogCosHalf,
    #[value(name = "H")]
    H,
    #[value(name = "tau")]
    Tau,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub name: SeriesName,
    #[arg(long, default_value_t = 1)]
    pub k: u64,
    #[arg(long, default_value_t = 1)]
    pub d: u64,
    #[arg(long, env = "SOCLE_ORDER", default_value_t = 24)]
    pub order: usize,
    #[arg(long)]
    pub decimal: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_g: u64,
    #[arg(long, default_value_t = 6)]
    pub max_k: u64,
    #[arg(long, default_value_t = 4)]
    pub max_d: u64,
    #[arg(long, env = "SOCLE_ORDER", default_value_t = 24)]
    pub order: usize,
    /// Write the report document to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Bracket memo file to load before and save after the run.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Run checks on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
    /// Print every report instead of one line per identity.
    #[arg(long)]
    pub verbose: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Eval(args) => commands::eval(&args),
        Command::Series(args) => commands::series(&args),
        Command::Verify(args) => commands::verify(&args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Io(_) => ExitCode::from(3),
            }
        }
    }
}
