//! Library side of the `nfg` binary: argument types, command execution
//! and report rendering. [`run`] returns the full stdout text so the
//! commands can be exercised without spawning a process.

pub mod args;
mod commands;
pub mod render;

use std::path::{Path, PathBuf};

use nfg::format::FormatError;
use nfg::{GameError, NormalFormGame};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: FormatError,
    },

    #[error(transparent)]
    Game(#[from] GameError),

    #[error("bad flag: {0}")]
    BadFlag(String),
}

impl CliError {
    /// 3 for oversized games, 2 for every other parse or validation error.
    pub fn exit_code(&self) -> i32 {
        let game_error = match self {
            CliError::Game(e) => Some(e),
            CliError::Parse { source, .. } => source.game_error(),
            _ => None,
        };
        match game_error {
            Some(GameError::GameTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

/// A finished command: what ran, on what, and what came out.
#[derive(Debug)]
pub struct CliReport {
    pub command: &'static str,
    pub input: Value,
    pub results: Value,
    /// Echo of the inputs for the text report.
    pub header: Vec<String>,
    pub body: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    input: &'a Value,
    results: &'a Value,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
}

impl CliReport {
    pub fn render(&self, json: bool, quiet: bool) -> String {
        let notes: &[String] = if quiet { &[] } else { &self.notes };
        if json {
            let report = JsonReport {
                command: self.command,
                input: &self.input,
                results: &self.results,
                notes,
            };
            let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
            out.push('\n');
            return out;
        }
        let mut lines = Vec::new();
        if !quiet {
            lines.extend(self.header.iter().cloned());
        }
        lines.extend(self.body.iter().cloned());
        lines.extend(notes.iter().map(|n| format!("note: {n}")));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

pub fn load_game(path: &Path) -> Result<NormalFormGame, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| {
        if source.kind() == std::io::ErrorKind::NotFound {
            CliError::FileNotFound(path.to_path_buf())
        } else {
            CliError::Io {
                path: path.to_path_buf(),
                source,
            }
        }
    })?;
    nfg::format::from_json_str(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Executes a parsed command line and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let report = commands::execute(&cli.command)?;
    Ok(match report {
        commands::Outcome::Report(r) => r.render(cli.json, cli.quiet),
        commands::Outcome::Raw(text) => text,
    })
}
