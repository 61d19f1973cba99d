mod commands;
mod element;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use brauer_core::Execution;

/// Brauer configuration algebras: quivers, bases, multiplication, and the
/// graph / matrix / configuration correspondences for radical cube zero.
#[derive(Parser, Debug)]
#[command(name = "bca", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Global {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Accept 2-gons whose vertices are both truncated (K[x]/(x^2)).
    #[arg(long, global = true)]
    pub allow_degenerate: bool,
    /// Run batch work on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

impl Global {
    pub fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

/// Input file; `-` reads standard input.
#[derive(Args, Debug, Clone)]
pub struct Input {
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check conditions C1-C3 and the orientation.
    Validate(Input),
    /// Remove truncated vertices from polygons with at least three members.
    Reduce(Input),
    /// Quiver of the (reduced) configuration.
    Quiver {
        #[command(flatten)]
        input: Input,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Defining relations of the algebra.
    Relations(Input),
    /// Canonical basis.
    Basis(Input),
    /// Dimension from the closed formula and the basis.
    Dim {
        #[command(flatten)]
        input: Input,
        /// Recompute by linear algebra on the path space.
        #[arg(long)]
        oracle: bool,
    },
    /// Product of two elements, e.g. `a1.a2`, `e(V1)`, `2*b1 + soc(V2)`.
    Mult {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Check the symmetrizing form on all basis pairs.
    SymmetricCheck(Input),
    /// Dimensions of the radical powers and the Loewy length.
    RadicalSeries(Input),
    /// Whether the algebra is graded by path length, per component.
    Grading(Input),
    /// Connected components with their dimensions.
    Components(Input),
    /// Structure of the indecomposable projectives.
    Projectives {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        polygon: Option<String>,
    },
    /// Graph JSON to symmetric matrix CSV.
    #[command(name = "graph2matrix")]
    GraphToMatrix(Input),
    /// Symmetric matrix CSV to graph JSON.
    #[command(name = "matrix2graph")]
    MatrixToGraph(Input),
    /// Graph JSON to its ordered configuration.
    #[command(name = "graph2config")]
    GraphToConfig(Input),
    /// Ordered radical-cube-zero configuration to graph JSON.
    #[command(name = "config2graph")]
    ConfigToGraph(Input),
    /// The canonical radical-cube-zero symmetric algebra of a graph.
    CanonicalAlgebra(Input),
    /// Check the isomorphism for every graph within the bounds.
    VerifyRad3 {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        /// Only list graphs that fail.
        #[arg(long)]
        failures_only: bool,
    },
    /// The built-in regression corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    /// Run every fixture and report each expected value.
    Run,
}

/// Error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
    /// Report printed to stdout before exiting.
    pub report: Option<Output>,
}

impl Failure {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
            report: None,
        }
    }

    pub fn domain(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 1,
            error: error.into(),
            report: None,
        }
    }
}

#[derive(Debug)]
pub enum Output {
    Json(serde_json::Value),
    Text(String),
}

fn emit(out: &Output, pretty: bool) {
    let text = match out {
        Output::Text(t) => t.clone(),
        Output::Json(v) if pretty => render::table(v),
        Output::Json(v) => format!("{v}\n"),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            emit(&out, cli.global.pretty);
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = &f.report {
                emit(out, cli.global.pretty);
            }
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
