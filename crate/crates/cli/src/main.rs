//! `somson`: train a map from a feature table, plot it, render a node as
//! sound, or serve the bundle to the browser explorer.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.

mod commands;
mod serve;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use somson::bundle::DEFAULT_CELL_SIZE;
use somson::sonify::DEFAULT_SAMPLE_RATE;

#[derive(Debug, Parser)]
#[command(
    name = "somson",
    version,
    about = "Self-organizing maps you can listen to"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train a map on a CSV feature table and write a bundle.
    Train {
        #[arg(long)]
        features: PathBuf,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(2..))]
        rows: u32,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(2..))]
        cols: u32,
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u32).range(1..))]
        rounds: u32,
        #[arg(long, env = "SOMSON_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the U-matrix or one component plane as a PNG.
    Plot {
        #[arg(long)]
        bundle: PathBuf,
        /// `umatrix` or `component:<feature index>`.
        #[arg(long, default_value = "umatrix")]
        view: View,
        /// Mark each item's best matching node with a dot in its label color.
        #[arg(long)]
        show_items: bool,
        #[arg(long, default_value_t = DEFAULT_CELL_SIZE, value_parser = clap::value_parser!(u32).range(1..=256))]
        cell_size: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sonify a node's pointer, or explicit parameters, into a WAV file.
    #[command(group(ArgGroup::new("source").required(true).args(["node", "params"])))]
    Render {
        #[arg(long, required_unless_present = "params")]
        bundle: Option<PathBuf>,
        /// `ROW,COL` of the node whose pointer is sonified.
        #[arg(long, requires = "bundle")]
        node: Option<Node>,
        /// Comma-separated parameters in [0, 1]: four, or seven for the extended mode.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Option<Vec<f64>>,
        #[arg(long, default_value_t = 2.0)]
        seconds: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_RATE)]
        rate: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Serve the explorer assets and the bundle over local HTTP.
    Serve {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        assets: PathBuf,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum View {
    UMatrix,
    Component(usize),
}

impl FromStr for View {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "umatrix" {
            return Ok(View::UMatrix);
        }
        s.strip_prefix("component:")
            .and_then(|f| f.parse().ok())
            .map(View::Component)
            .ok_or_else(|| format!("unknown view {s:?}; expected `umatrix` or `component:<index>`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    row: usize,
    col: usize,
}

impl FromStr for Node {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parsed = s
            .split_once(',')
            .and_then(|(r, c)| Some((r.trim().parse().ok()?, c.trim().parse().ok()?)));
        match parsed {
            Some((row, col)) => Ok(Node { row, col }),
            None => Err(format!("expected ROW,COL, got {s:?}")),
        }
    }
}

/// Failure of a subcommand, mapped onto the exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Io(m) => m,
        }
    }
}

impl From<somson::Error> for Failure {
    fn from(e: somson::Error) -> Self {
        if e.is_io() {
            Failure::Io(e.to_string())
        } else {
            Failure::Data(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Train {
            features,
            rows,
            cols,
            rounds,
            seed,
            out,
        } => commands::train(
            &features,
            rows as usize,
            cols as usize,
            rounds as usize,
            seed,
            &out,
        ),
        Command::Plot {
            bundle,
            view,
            show_items,
            cell_size,
            out,
        } => commands::plot(&bundle, view, show_items, cell_size, &out),
        Command::Render {
            bundle,
            node,
            params,
            seconds,
            rate,
            out,
        } => commands::render(
            bundle.as_deref(),
            node,
            params.as_deref(),
            seconds,
            rate,
            &out,
        ),
        Command::Serve {
            bundle,
            assets,
            port,
        } => serve::run(&bundle, &assets, port),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
