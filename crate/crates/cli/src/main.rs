mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{Map, Value};

use commands::{Command, Failure};

#[derive(Debug, Parser)]
#[command(name = "hateful", version, about = "Generators, searches and verifiers for a handful of integer sequences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, value_name = "W")]
    threads: Option<usize>,
    /// Report wall-clock time; off by default so output bytes are reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[usage]: {}", one_line(first.trim_start_matches("error: ")));
            return ExitCode::from(2);
        }
    };
    if let Some(w) = cli.threads {
        if w == 0 {
            eprintln!("error[usage]: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error[runtime]: {}", one_line(&e.to_string()));
            return ExitCode::from(3);
        }
    }

    let started = Instant::now();
    let name = cli.command.name();
    let parameters = cli.command.parameters();
    let (rendered, failure) = match cli.command.run() {
        Ok(r) => (Some(r), None),
        Err(Failure::Mismatch(r, reason)) => (Some(r), Some((1, "mismatch", reason))),
        Err(Failure::Usage(reason)) => (None, Some((2, "usage", reason))),
        Err(Failure::Runtime(reason)) => (None, Some((3, "runtime", reason))),
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    if let Some(r) = rendered {
        let mut out = std::io::stdout().lock();
        let written = match cli.format {
            Format::Json => {
                let mut envelope = Map::new();
                envelope.insert("command".into(), Value::String(name.into()));
                envelope.insert("parameters".into(), parameters);
                envelope.insert("result".into(), r.result);
                if cli.timing {
                    envelope.insert("elapsed_ms".into(), output::float((elapsed_ms * 1e3).round() / 1e3));
                }
                writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(envelope)).expect("JSON values serialize"))
            }
            Format::Text => {
                let mut res = r.lines.iter().try_for_each(|l| writeln!(out, "{l}"));
                if cli.timing && res.is_ok() {
                    res = writeln!(out, "elapsed_ms {elapsed_ms:.3}");
                }
                res
            }
        };
        if written.is_err() {
            // stdout closed (for example piped into `head`)
            return ExitCode::SUCCESS;
        }
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some((code, kind, reason)) => {
            eprintln!("error[{kind}]: {}", one_line(&reason));
            ExitCode::from(code)
        }
    }
}
