//! Binary entry point; the command logic lives in the library's cli module.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use polymap::cli::{
    cmd_analyze, cmd_pg, cmd_resultant, cmd_verify, CommandOutput, Outcome, OutputFormat,
    RunConfig,
};

#[derive(Parser)]
#[command(
    name = "polymap",
    version,
    about = "Exact invariants and growth bounds of polynomial mappings"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Seed fixing every random draw
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sphere radii for growth checks, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    radii: Option<Vec<f64>>,
    /// Samples per sphere radius
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Certification attempts per candidate linear form
    #[arg(long, global = true)]
    attempts: Option<usize>,
    /// Column cap for Macaulay matrices
    #[arg(long = "max-matrix", global = true)]
    max_matrix: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute invariants, exponent bounds and the classification of a map
    Analyze { file: PathBuf },
    /// Exact resultant of the homogeneous forms listed in the file
    Resultant { file: PathBuf },
    /// Validate the certified exponents numerically
    Verify { file: PathBuf },
    /// Exact slice of the elimination curve at a point w
    Pg {
        file: PathBuf,
        /// Comma-separated rational coordinates of w
        #[arg(long)]
        w: String,
    },
}

fn run(cli: &Cli, config: &RunConfig) -> Result<CommandOutput, String> {
    let read = |p: &PathBuf| fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
    match &cli.command {
        Cmd::Analyze { file } => cmd_analyze(&read(file)?, config).map_err(|e| e.to_string()),
        Cmd::Resultant { file } => cmd_resultant(&read(file)?, config).map_err(|e| e.to_string()),
        Cmd::Verify { file } => cmd_verify(&read(file)?, config).map_err(|e| e.to_string()),
        Cmd::Pg { file, w } => cmd_pg(&read(file)?, w, config).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let mut config = RunConfig {
        seed: cli.seed,
        format: match cli.format {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        },
        ..RunConfig::default()
    };
    if let Some(radii) = &cli.radii {
        config.radii = radii.clone();
    }
    if let Some(samples) = cli.samples {
        config.samples_per_radius = samples;
    }
    if let Some(attempts) = cli.attempts {
        config.certificate_attempts = attempts;
    }
    if let Some(cap) = cli.max_matrix {
        config.matrix_size_cap = cap;
    }

    match run(&cli, &config) {
        Ok(out) => {
            print!("{}", out.stdout);
            match out.outcome {
                Outcome::NotCertified => eprintln!("hypothesis not certified"),
                Outcome::Failure => eprintln!("verification failed"),
                Outcome::Success => {}
            }
            ExitCode::from(out.outcome.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
