use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jetframe_cli::commands::{self, CliError, GenKind, Level, OracleAction, Operation};
use jetframe_cli::suites::{Mutant, RunConfig};
use serde_json::Value;

/// Exact algebra of second-order frame bundles and their jet groups.
///
/// Inputs are JSON documents given as file paths, or `-` for standard input.
#[derive(Parser)]
#[command(name = "jetframe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random element, frame or 2-jet.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Apply a group operation to element documents.
    Op {
        operation: Operation,
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Project a frame one level down the bundle picture.
    Project {
        level: Level,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Report the strongest class of a frame.
    Classify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Split a hat2 element into G² × A₂, or a semi-holonomic frame into
    /// its extension class.
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Compute with the truncated jet calculus.
    Oracle {
        action: OracleAction,
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Run property suites; exits 0 iff every property passes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Dimension to test (repeatable); n = 1 is always included.
        #[arg(long = "n", default_values_t = [1usize, 2, 3, 4])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        mutant: Option<Mutant>,
    },
}

/// Writes to stdout, stopping quietly if the reader has gone away.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json value")));
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let doc = match cli.command {
        Command::Gen { kind, n, seed } => commands::gen(kind, n, seed)?,
        Command::Op { operation, inputs } => commands::op(operation, &inputs)?,
        Command::Project { level, input } => commands::project(level, &input)?,
        Command::Classify { input } => commands::classify(&input)?,
        Command::Decompose { input } => commands::decompose(&input)?,
        Command::Oracle { action, inputs } => commands::oracle(action, &inputs)?,
        Command::Verify { suite, n, trials, seed, json, mutant } => {
            let cfg = RunConfig { ns: n, trials, seed, mutant };
            let reports = commands::verify(&suite, &cfg)?;
            let passed = reports.iter().all(|r| r.passed);
            if json {
                print(&commands::verify_document(&reports));
            } else {
                let mut text: String = reports.iter().map(|r| r.to_string()).collect();
                let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.suite.as_str()).collect();
                if failed.is_empty() {
                    text += &format!("all {} suite(s) passed\n", reports.len());
                } else {
                    text += &format!("failed: {}\n", failed.join(", "));
                }
                emit(&text);
            }
            return Ok(passed);
        }
    };
    print(&doc);
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
