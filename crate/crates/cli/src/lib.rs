// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `npdtc` command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure or counterexample,
//! 2 parse/schema/I/O error, 3 input graph not subcubic, 4 fallback search
//! budget exceeded, 5 exact search budget exceeded.

pub mod commands;
mod error;
mod input;
pub mod sweep;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use input::{read_graph, GraphFormat};

use npdtc_core::search::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "npdtc",
    version,
    about = "Neighbor product distinguishing total colorings of corona products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color G ∘ H with at most Δ(G ∘ H) + 3 colors and verify the result.
    Color(ColorArgs),
    /// Check a coloring document against a graph.
    Verify(VerifyArgs),
    /// Compute the exact neighbor product distinguishing total chromatic number.
    Chi(ChiArgs),
    /// Run the construction (and optionally the exact oracle) over many pairs.
    Sweep(SweepArgs),
    /// Write a random subcubic graph.
    Gen(GenArgs),
    /// Render a coloring document as Graphviz DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Product,
    Set,
    Proper,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ColorArgs {
    /// Graph G.
    #[arg(long = "g")]
    pub g: PathBuf,
    /// Graph H.
    #[arg(long = "h")]
    pub h: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Coloring document (JSON) destination.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// DOT rendering destination.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Keep the raw edge coloring of H instead of relabeling it.
    #[arg(long)]
    pub no_normalize: bool,
    /// Node budget for each exact search (base coloring and fallback).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, clap::Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, value_enum, default_value = "product")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Also write the JSON report document here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ChiArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Witness coloring document destination.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SweepArgs {
    /// Largest number of vertices of G.
    #[arg(long, default_value_t = 3)]
    pub ng_max: usize,
    /// Largest number of vertices of H.
    #[arg(long, default_value_t = 3)]
    pub nh_max: usize,
    /// Number of random pairs; omit for exhaustive enumeration.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run the exact oracle when both factors have at most this many vertices.
    #[arg(long, default_value_t = 0)]
    pub oracle_max: usize,
    /// Node budget for each oracle computation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Only use connected graphs G.
    #[arg(long)]
    pub connected: bool,
    /// JSON-lines log, appended to.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

/// Runs one command, printing to stdout/stderr, and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Color(args) => commands::color(&args, &mut out).map(|_| 0),
        Command::Verify(args) => commands::verify(&args, &mut out).map(|ok| if ok { 0 } else { 1 }),
        Command::Chi(args) => commands::chi(&args, &mut out).map(|_| 0),
        Command::Sweep(args) => {
            sweep::run_sweep(&args, &mut out).map(|s| if s.failures.is_empty() { 0 } else { 1 })
        }
        Command::Gen(args) => commands::gen(&args, &mut out).map(|_| 0),
        Command::Export(args) => commands::export(&args, &mut out).map(|_| 0),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
