//! Command-line front end that parses arguments and dispatches subcommands.
//!
//! Every number in the output is an exact integer or `num/den` string, and the run
//! settings are echoed so a run can be repeated byte for byte.

pub mod cli;
pub mod commands;
pub mod error;
pub mod input;

use serde_json::json;

pub use cli::{CaseArg, Cli, Command, Format, GroupArg, RunConfig, ShapeArgs};
pub use commands::{execute, field_of, Outcome};
pub use error::{CliError, Result};
pub use input::{morphism_doc, Problem, ProjectiveSpec};

/// Name of the subcommand, as written on the command line.
pub fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Mutate { .. } => "mutate",
        Command::Dual { .. } => "dual",
        Command::Stability { .. } => "stability",
        Command::Polarization { .. } => "polarization",
        Command::Constants { .. } => "constants",
        Command::Thresholds { .. } => "thresholds",
        Command::Singular { .. } => "singular",
        Command::Sweep { .. } => "sweep",
    }
}

/// Renders an outcome in the requested format.
pub fn render(cli: &Cli, outcome: &Outcome) -> Result<String> {
    let cfg = &cli.config;
    match cfg.format {
        Format::Json => {
            let doc = json!({
                "command": command_name(&cli.command),
                "config": cfg,
                "passed": outcome.passed,
                "result": outcome.result,
            });
            Ok(serde_json::to_string_pretty(&doc).expect("values serialize") + "\n")
        }
        Format::Csv => {
            let table = outcome
                .table
                .as_ref()
                .ok_or_else(|| CliError::Usage(format!("{} has no csv form", command_name(&cli.command))))?;
            Ok(format!(
                "# command={} field={} seed={} budget_subspaces={} budget_orbit={}\n{table}",
                command_name(&cli.command),
                cfg.field,
                cfg.seed,
                cfg.budget_subspaces,
                cfg.budget_orbit
            ))
        }
    }
}

/// Runs a parsed command line, writing the rendered output; returns the exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    let outcome = execute(&cli.command, &cli.config)?;
    let text = render(cli, &outcome)?;
    match &cli.config.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(if outcome.passed { 0 } else { 1 })
}

/// Applies `MUTATION_FORGE_THREADS` to the global worker pool.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("MUTATION_FORGE_THREADS") else { return Ok(()) };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("MUTATION_FORGE_THREADS must be a positive integer, got {value:?}")))?;
    if threads == 0 {
        return Err(CliError::Usage("MUTATION_FORGE_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}
