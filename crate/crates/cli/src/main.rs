//! `grady`: analyse group-graded rings from JSON descriptions.

mod commands;
mod encode;
mod error;
mod examples;
mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grady_core::grading::Bounds;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::input::{Doc, LoadedRing};

#[derive(Parser)]
#[command(
    name = "grady",
    version,
    about = "Epsilon-strong gradings, epsilon idempotents and strongly graded decompositions"
)]
struct Cli {
    /// Print the report as JSON (keys sorted).
    #[arg(long, global = true)]
    json: bool,
    /// Word length bound for path algebra searches.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Expansion depth bound for path algebra searches.
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    /// Largest closure or enumeration, in elements.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the grading of a ring.
    Analyze { file: PathBuf },
    /// Epsilon idempotents, their boolean semigroup and the sets N(r).
    Epsilon { file: PathBuf },
    /// Split an epsilon-strong ring into strongly graded corners.
    Decompose { file: PathBuf },
    /// Graded module checks over a structure-constant ring.
    Module { ring: PathBuf, module: PathBuf },
    /// Print a built-in example file, or list them.
    Examples { name: Option<String> },
}

fn run(cli: &Cli) -> Result<(Value, i32)> {
    let defaults = Bounds::default();
    let bounds = Bounds {
        max_len: cli.max_len,
        max_depth: cli.max_depth,
        closure_cap: cli.closure_cap.unwrap_or(defaults.closure_cap),
        ..defaults
    };
    let load = |path: &PathBuf| Doc::read(path)?.ring();
    match &cli.command {
        Command::Analyze { file } => match load(file)? {
            LoadedRing::Sc(r) => commands::analyze(&r, &bounds),
            LoadedRing::Lpa(r) => commands::analyze(&r, &bounds),
        }
        .map(|v| (v, 0)),
        Command::Epsilon { file } => match load(file)? {
            LoadedRing::Sc(r) => commands::epsilon(&r, &bounds),
            LoadedRing::Lpa(r) => commands::epsilon(&r, &bounds),
        }
        .map(|v| (v, 0)),
        Command::Decompose { file } => match load(file)? {
            LoadedRing::Sc(r) => commands::decompose(&r, &bounds),
            LoadedRing::Lpa(r) => commands::decompose(&r, &bounds),
        },
        Command::Module { ring, module } => {
            let LoadedRing::Sc(r) = load(ring)? else {
                return Err(CliError::Parse {
                    file: ring.display().to_string(),
                    location: "/kind".into(),
                    message: "module checks need a structure-constant ring".into(),
                });
            };
            let spec = Doc::read(module)?.module(&r)?;
            commands::module(&r, spec, &bounds).map(|v| (v, 0))
        }
        Command::Examples { name: Some(name) } => examples::example(name).map(|v| (v, 0)),
        Command::Examples { name: None } => {
            let list: Vec<Value> =
                examples::GALLERY.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect();
            Ok((json!({ "examples": list }), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, code)) => {
            // Example files are always JSON so they can be saved and re-read.
            let as_json = cli.json || matches!(cli.command, Command::Examples { name: Some(_) });
            if as_json {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                print!("{}", render::text(&value));
            }
            if code != 0 {
                eprintln!("grady: the decomposition halted; see the outcome in the report");
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("grady: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
