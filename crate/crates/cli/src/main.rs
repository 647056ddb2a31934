mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{Job, Output};
use config::JobConfig;

/// Eigenbases, norms, submodules and finite-dimensional quotients of
/// standard modules M(λ) for the rational Cherednik algebra of G(r,1,n).
#[derive(Parser, Debug)]
#[command(name = "cherednik", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON job file; explicit flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// r-partition as inline JSON (e.g. '[[1],[]]') or a file.
    #[arg(long, global = true)]
    shape: Option<String>,
    /// Point as inline JSON, a file, or "generic".
    #[arg(long, global = true)]
    point: Option<String>,
    #[arg(long, global = true)]
    maxdeg: Option<u32>,
    #[arg(long, global = true)]
    pdiv: Option<u32>,
    /// Composition μ as JSON or comma separated.
    #[arg(long, global = true)]
    mu: Option<String>,
    /// Tableau index or rows as JSON.
    #[arg(long, global = true)]
    tableau: Option<String>,
    /// Seed for --point generic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Count or list standard tableaux.
    Syt {
        #[arg(long)]
        list: bool,
    },
    /// 𝔱-weights of f_{μ,T}.
    Weights,
    /// Norms ⟨f_{μ,T}, f_{μ,T}⟩/γ_T.
    Norm,
    /// Exceptional hyperplanes through the point.
    Spectrum,
    /// Closed generator sets at the point.
    Generators,
    /// Graded dimensions of the radical and of L(λ).
    Lattice,
    /// Finite-dimensionality certificate and dim L(λ).
    Findim,
    /// Splitting of L(λ) over the G(r,p,n) subalgebra.
    Clifford,
    /// Run the brute-force consistency suite.
    Verify,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Syt { .. } => "syt",
            Command::Weights => "weights",
            Command::Norm => "norm",
            Command::Spectrum => "spectrum",
            Command::Generators => "generators",
            Command::Lattice => "lattice",
            Command::Findim => "findim",
            Command::Clifford => "clifford",
            Command::Verify => "verify",
        }
    }

    fn needs_kappa_one(self) -> bool {
        matches!(self, Command::Generators | Command::Lattice | Command::Findim | Command::Clifford)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(cherednik_core::Error),
}

impl From<cherednik_core::Error> for CliError {
    fn from(e: cherednik_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_mathematical_refusal() => 2,
            _ => 1,
        }
    }

    fn reason(&self) -> &'static str {
        match self {
            CliError::Input(_) => "invalid_input",
            CliError::Core(e) => e.reason_code(),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

fn parse_mu_arg(text: &str) -> Result<Vec<u32>, CliError> {
    let t = text.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| CliError::Input(format!("--mu: {e}")));
    }
    t.split(',').map(|s| s.trim().parse().map_err(|e| CliError::Input(format!("--mu: {s:?}: {e}")))).collect()
}

fn build_job(cli: &Cli) -> Result<Job, CliError> {
    let cfg = match &cli.config {
        Some(path) => JobConfig::load(path)?,
        None => JobConfig::default(),
    };
    let shape_v = match &cli.shape {
        Some(s) => config::json_arg(s)?,
        None => cfg.shape.clone().ok_or_else(|| CliError::Input("missing --shape".into()))?,
    };
    let shape = config::parse_shape(&shape_v)?;
    let seed = cli.seed.or(cfg.seed).unwrap_or(0);
    let point_v = match &cli.point {
        Some(s) if s == "generic" => Some(json!("generic")),
        Some(s) => Some(config::json_arg(s)?),
        None => cfg.point.clone(),
    };
    let point = point_v.map(|v| config::parse_point(&v, &shape, seed, cli.command.needs_kappa_one())).transpose()?;
    let mu = match &cli.mu {
        Some(s) => Some(parse_mu_arg(s)?),
        None => cfg.mu.clone(),
    };
    let mu = mu.map(|m| config::parse_mu(&m, &shape)).transpose()?;
    let tableau_v = match &cli.tableau {
        Some(s) => Some(serde_json::from_str(s).map_err(|e| CliError::Input(format!("--tableau: {e}")))?),
        None => cfg.tableau.clone(),
    };
    let tableau = tableau_v.map(|v| config::parse_tableau(&v, &shape)).transpose()?;
    Ok(Job {
        shape,
        point,
        maxdeg: cli.maxdeg.or(cfg.maxdeg),
        pdiv: cli.pdiv.or(cfg.pdiv),
        mu,
        tableau,
        list: matches!(cli.command, Command::Syt { list: true }),
    })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let job = build_job(cli)?;
    match cli.command {
        Command::Syt { .. } => commands::syt(&job),
        Command::Weights => commands::weights(&job),
        Command::Norm => commands::norms(&job),
        Command::Spectrum => commands::spectrum(&job),
        Command::Generators => commands::generators(&job),
        Command::Lattice => commands::lattice(&job),
        Command::Findim => commands::findim(&job),
        Command::Clifford => commands::clifford(&job),
        Command::Verify => commands::verify(&job),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable report")),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.exit)
        }
        Err(err) => {
            match cli.format {
                Format::Json => {
                    let v = json!({
                        "command": cli.command.name(),
                        "error": { "reason": err.reason(), "message": err.message() },
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable error"));
                }
                Format::Text => eprintln!("error ({}): {}", err.reason(), err.message()),
            }
            ExitCode::from(err.exit_code())
        }
    }
}
