use std::path::{Path, PathBuf};
use std::process::ExitCode;

use acmsol_core::manifest::parse_manifest;
use acmsol_core::suite::{run_suite, ReportDocument, Suite};
use acmsol_core::Status;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "acmsol", version, about = "Exact checks for 3-dimensional normal almost contact metric frames")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Frame construction and the almost contact metric axioms.
    Validate { file: PathBuf },
    /// Levi-Civita connection coefficients.
    Connection { file: PathBuf },
    /// Riemann, Ricci and sectional curvature.
    Curvature { file: PathBuf },
    /// Axioms, normality and the α, β invariants.
    Acm { file: PathBuf },
    /// Structure type of the frame.
    Classify { file: PathBuf },
    /// Structural identities of normal structures.
    Identities { file: PathBuf },
    /// Riemann soliton candidates.
    Soliton {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Gradient Riemann soliton candidates.
    Gradient {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Theorem-level verdicts.
    Theorems { file: PathBuf },
    /// Every suite.
    Report { file: PathBuf },
}

impl Command {
    fn split(self) -> (PathBuf, Suite) {
        match self {
            Command::Validate { file } => (file, Suite::Validate),
            Command::Connection { file } => (file, Suite::Connection),
            Command::Curvature { file } => (file, Suite::Curvature),
            Command::Acm { file } => (file, Suite::Acm),
            Command::Classify { file } => (file, Suite::Classify),
            Command::Identities { file } => (file, Suite::Identities),
            Command::Soliton { file, name } => (file, Suite::Soliton { name }),
            Command::Gradient { file, name } => (file, Suite::Gradient { name }),
            Command::Theorems { file } => (file, Suite::Theorems),
            Command::Report { file } => (file, Suite::Report),
        }
    }
}

fn load(path: &Path, suite: &Suite) -> Result<ReportDocument, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let manifest = parse_manifest(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(run_suite(&manifest, suite))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (file, suite) = cli.command.split();
    let doc = match load(&file, &suite) {
        Ok(doc) => doc,
        Err(msg) => {
            if !cli.quiet {
                eprintln!("error: {msg}");
            }
            return ExitCode::from(2);
        }
    };
    if !cli.quiet {
        match cli.format {
            Format::Text => print!("{}", doc.to_text()),
            Format::Json => print!("{}", doc.to_json()),
        }
    }
    match (doc.error.is_some(), doc.overall) {
        (true, _) => ExitCode::from(2),
        (false, Status::Fail) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}
