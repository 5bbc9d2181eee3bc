use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, ValueEnum};

use algebroid::fixtures::{fixture, NAMES};
use algebroid::format::{self, Document};
use algebroid::workbench::{exit_code, render, run_command, Command, Options, OutputFormat, EXIT_INPUT};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Text,
    Json,
}

/// Exact checks for finite-dimensional bialgebroids.
///
/// Commands: check-axioms, check-hopf, check-anti-hopf, finiteness, dual,
/// verify-thm1, verify-thm2, verify-thm3, verify-all, export.
/// Exit codes: 0 pass, 1 fail, 2 inapplicable only, 3 input error.
#[derive(Parser, Debug)]
#[command(name = "algebroid", version)]
struct Cli {
    command: String,
    /// Path to a JSON document (alternative to --fixture).
    document: Option<String>,
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Fmt,
    #[arg(long = "test-grid", default_value_t = algebroid::pipelines::DEFAULT_GRID)]
    test_grid: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "reconstruct-dual")]
    reconstruct_dual: bool,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT as u8)
}

fn load(cli: &Cli) -> Result<(String, Document), String> {
    match (&cli.fixture, &cli.document) {
        (Some(_), Some(_)) => Err("give either --fixture or a document, not both".into()),
        (None, None) => Err("no input: give --fixture NAME or a document path".into()),
        (Some(name), None) => fixture(name)
            .map(|fx| (fx.name.to_string(), Document::new((*fx.bialgebroid).clone())))
            .ok_or_else(|| format!("unknown fixture {name:?}; known: {}", NAMES.join(", "))),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let doc = format::parse(&text).map_err(|e| format!("{path}: {e}"))?;
            Ok((doc.bialgebroid.name.clone(), doc))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if cli.command == "export" {
        return match load(&cli) {
            Ok((_, doc)) => {
                print!("{}", format::render(&doc));
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        };
    }
    let Some(cmd) = Command::parse(&cli.command) else {
        return input_error(format!("unknown command {:?}", cli.command));
    };
    if cli.test_grid == 0 {
        return input_error("--test-grid must be positive");
    }
    let (subject, doc) = match load(&cli) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let opts = Options { grid: cli.test_grid, seed: cli.seed, reconstruct_dual: cli.reconstruct_dual };
    let report = run_command(cmd, &Arc::new(doc.bialgebroid), &opts);
    let fmt = match cli.format {
        Fmt::Text => OutputFormat::Text,
        Fmt::Json => OutputFormat::Json,
    };
    print!("{}", render(fmt, cmd.name(), &subject, &opts, Some(&report)));
    ExitCode::from(exit_code(&report) as u8)
}
