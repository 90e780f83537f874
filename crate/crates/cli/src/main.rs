mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use supergrade::constructions::{D21Alpha, F4Model};
use supergrade::scalars::{parse_scalar, CycNumber, Scalar};

#[derive(Debug, Parser)]
#[command(name = "supergrade", version, about = "Exact checks of fine gradings on exceptional Lie superalgebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report (or the serialized algebra for `build`) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    F4,
    G3,
    D21a,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildTarget {
    K3,
    K10,
    Cayley,
    Quaternions,
    F4,
    G3,
    D21a,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Cayley,
    Tkk,
    Quaternion,
}

impl From<Model> for F4Model {
    fn from(m: Model) -> Self {
        match m {
            Model::Cayley => F4Model::Cayley,
            Model::Tkk => F4Model::Tkk,
            Model::Quaternion => F4Model::Quaternion,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Serialize an algebra and check that reloading it reproduces the structure constants.
    Build {
        #[arg(value_enum)]
        target: BuildTarget,
        #[arg(long, value_enum, default_value_t = Model::Cayley)]
        model: Model,
        /// Value of alpha for d21a; the default keeps alpha symbolic.
        #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
        alpha: Option<D21Alpha>,
    },
    /// Reproduce the fine gradings of a target together with its supporting checks.
    TheoremCheck {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
        alpha: Option<D21Alpha>,
    },
    /// Normalize a graded quadratic space from a configuration file and classify `Cl_0`.
    CliffordClass { config: PathBuf },
    /// List the homogeneous components of every catalog grading of a target.
    GradingReport {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
        alpha: Option<D21Alpha>,
    },
}

/// `a` stands for the symbolic parameter; constants must avoid `0` and `-1`.
fn parse_alpha(s: &str) -> Result<D21Alpha, String> {
    let v = parse_scalar(s).map_err(|e| e.to_string())?;
    if v == Scalar::alpha() {
        return Ok(D21Alpha::Symbolic);
    }
    let c = v.as_cyc().ok_or_else(|| format!("{s} is neither a constant nor the symbol a"))?;
    if c.is_zero() || (c + &CycNumber::one()).is_zero() {
        return Err(format!("alpha must differ from 0 and -1, got {}", v.to_expr()));
    }
    Ok(D21Alpha::Value(c.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut report, payload) = match &cli.command {
        Command::Build { target, model, alpha } => commands::build(*target, *model, alpha.clone(), cli.out.as_deref()),
        Command::TheoremCheck { target, alpha } => (commands::theorem_check(*target, alpha.clone()), None),
        Command::CliffordClass { config } => (commands::clifford_class(config), None),
        Command::GradingReport { target, alpha } => (commands::grading_report(*target, alpha.clone()), None),
    };
    report.finish();
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    // for `build`, --out names the algebra file and the report goes to the terminal
    let report_path = if matches!(cli.command, Command::Build { .. }) { None } else { cli.out.as_ref() };
    match payload {
        Some(text) => {
            print!("{text}");
            eprint!("{rendered}");
        }
        None => match report_path {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::FAILURE;
                }
            }
            None => print!("{rendered}"),
        },
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
