use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wes_cli::commands::{self, Options, DEFAULT_BUDGET};
use wes_cli::{exit, CliError, Outcome};

/// Γ-automorphisms of the Whitehead exact sequence of a 2-connected
/// 6-dimensional CW complex.
#[derive(Debug, Parser)]
#[command(name = "wes", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of candidates per automorphism enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the input against the hypotheses and shape rules.
    Validate { path: PathBuf },
    /// Γ5, coker b6, Ext and π5.
    Invariants { path: PathBuf },
    /// Enumerate ΓS(X).
    GammaGroup {
        path: PathBuf,
        /// Also decide every tuple with the diagram oracle; exit 3 on any
        /// disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Homology of the chain_complex block plus an input template.
    Homology { path: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::parse(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let mut opts = Options {
        json: cli.json,
        budget: cli.budget,
        oracle: false,
    };
    match &cli.command {
        Command::Validate { path } => commands::validate(&read(path)?, opts),
        Command::Invariants { path } => commands::invariants(&read(path)?, opts),
        Command::GammaGroup { path, oracle } => {
            opts.oracle = *oracle;
            commands::gamma_group(&read(path)?, opts)
        }
        Command::Homology { path } => commands::homology(&read(path)?, opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
