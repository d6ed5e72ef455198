//! `qjump`: coefficient tables, figure data, analytic comparisons, and
//! Monte Carlo validation for the microscopic photodetector jump models.
//!
//! Exit codes: 0 on success, 2 when a tolerance gate fails (compare,
//! traject), 1 on any runtime or usage error.

mod commands;
mod config;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use config::{parse_chi_list, parse_config_file, parse_format, parse_model, parse_range, PartialConfig};

#[derive(Parser)]
#[command(
    name = "qjump",
    version,
    about = "Quantum jump coefficient tables from microscopic detector models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an f_mn coefficient table (values reported as T*f)
    Coeffs(RunArgs),
    /// Compare analytic forms against quadrature; exit 2 on gate failure
    Compare(RunArgs),
    /// Emit fig1.csv / fig2.csv / fig3.csv into the output directory
    Figures(RunArgs),
    /// Sample seeded first-jump trajectories; exit 2 when |z| > 3
    Traject(RunArgs),
    /// Fit log-log slopes of the diagonal and report the implied beta
    Slope(RunArgs),
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Detector model: jc (two-level atom) or osc (harmonic oscillator)
    #[arg(long)]
    model: Option<String>,
    /// Comma-separated damping ratios chi = lambda/(2|g|)
    #[arg(long)]
    chi: Option<String>,
    /// Dimensionless averaging window lambda*T (default 10)
    #[arg(long = "lambda-T", alias = "lambda-t")]
    lambda_t: Option<f64>,
    /// Field frequency in units of |g| (default 1e3)
    #[arg(long = "omega-over-g")]
    omega_over_g: Option<f64>,
    /// Mode range LO:HI (initial Fock level for traject)
    #[arg(long)]
    n: Option<String>,
    /// Number of trajectories (traject only)
    #[arg(long = "n-traj")]
    n_traj: Option<usize>,
    /// Master seed for trajectory streams
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (directory for figures)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// key = value configuration file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

impl RunArgs {
    fn to_partial(&self) -> Result<PartialConfig, String> {
        Ok(PartialConfig {
            model: self.model.as_deref().map(parse_model).transpose()?,
            chi: self.chi.as_deref().map(parse_chi_list).transpose()?,
            lambda_t: self.lambda_t,
            omega_over_g: self.omega_over_g,
            n: self.n.as_deref().map(parse_range).transpose()?,
            n_traj: self.n_traj,
            seed: self.seed,
            out: self.out.clone(),
            format: self.format.as_deref().map(parse_format).transpose()?,
        })
    }

    /// defaults < config file < flags
    fn layered(&self) -> Result<PartialConfig, String> {
        let flags = self.to_partial()?;
        let base = match &self.config {
            Some(path) => parse_config_file(path)?,
            None => PartialConfig::default(),
        };
        Ok(base.overlaid_with(flags))
    }
}

fn run() -> Result<i32, String> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => commands::EXIT_ERROR,
            };
            let _ = e.print();
            return Ok(code);
        }
    };
    match &cli.command {
        Command::Coeffs(args) => {
            let cfg = args.layered()?.resolve((1, 16), 1, "coeffs.csv")?;
            commands::cmd_coeffs(&cfg)
        }
        Command::Compare(args) => {
            let cfg = args.layered()?.resolve((1, 50), 1, "compare.csv")?;
            commands::cmd_compare(&cfg)
        }
        Command::Figures(args) => {
            let layered = args.layered()?;
            let chi_override = layered.chi.clone();
            let cfg = layered.resolve((1, 300), 1, ".")?;
            commands::cmd_figures(&cfg, chi_override.as_deref())
        }
        Command::Traject(args) => {
            let cfg = args.layered()?.resolve((5, 5), 0, "traject.csv")?;
            commands::cmd_traject(&cfg)
        }
        Command::Slope(args) => {
            let cfg = args.layered()?.resolve((50, 300), 1, "slope.csv")?;
            commands::cmd_slope(&cfg)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(commands::EXIT_ERROR);
        }
    }
}
