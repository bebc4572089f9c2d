//! `tqft`: JSON front end for tqft-core.
//!
//! Success prints the payload; failure prints
//! `{"diagnostics": [...], "payload": null, "status": "error"}`.
//! Exit codes: 0 ok, 1 usage error, 2 computation error.

mod commands;
mod json;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "tqft", version, about = "Discrete topology, knot, anyon, lattice and perturbation calculations")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers and Euler characteristic of a simplicial complex.
    Betti {
        /// One maximal simplex per line, comma-separated vertex ids.
        #[arg(long)]
        complex: PathBuf,
    },
    /// Hodge decomposition of a cochain into exact, coexact and harmonic parts.
    Hodge {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Cochain values in the sorted simplex order, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<f64>,
        /// JSON array of per-degree weight arrays (default: all ones).
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Abelian Chern-Simons partition function from Laplacian determinants.
    #[command(name = "cs-z")]
    CsZ {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Include the nonzero spectra of the degree 0 and 1 Laplacians.
        #[arg(long)]
        spectra: bool,
    },
    /// Jones polynomial of a PD code or braid closure.
    Jones {
        /// PD code file, e.g. `X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)`.
        #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
        pd: Option<PathBuf>,
        /// Braid word, e.g. `1,1,-2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "strands")]
        braid: Option<Vec<i32>>,
        #[arg(long)]
        strands: Option<usize>,
        /// Evaluate at t = q = -exp(i pi / (k + 2)).
        #[arg(long)]
        level: Option<i64>,
        /// Report the bracket-closure polynomial (unknot = -t^(1/2) - t^(-1/2)).
        #[arg(long)]
        unnormalized: bool,
    },
    /// Fusion channels of two primaries.
    Fuse {
        #[arg(long)]
        cft: String,
        a: String,
        b: String,
    },
    /// Number of conformal blocks of n copies of a field fusing to a target.
    Blocks {
        #[arg(long)]
        cft: String,
        #[arg(long)]
        field: String,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        target: String,
        /// Include the full Bratteli diagram.
        #[arg(long)]
        diagram: bool,
    },
    /// SU(2)_k quantum dimension, braid eigenvalues and allowed spins.
    Su2k {
        #[arg(short)]
        k: i64,
    },
    /// Monodromy of the Ising four-point blocks around z = 1.
    Monodromy {
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 0.5)]
        radius: f64,
        #[arg(long, default_value_t = 1)]
        turns: u32,
    },
    /// Wilson loop on a periodic SU(2) lattice.
    Wilson {
        /// Lattice extents, e.g. `3x3`.
        #[arg(long, required_unless_present = "field")]
        dims: Option<String>,
        /// Seed for the random field (default: TQFT_SEED, else 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Load the field from JSON instead of sampling it.
        #[arg(long, conflicts_with_all = ["dims", "seed"])]
        field: Option<PathBuf>,
        /// `plaq`, a rectangle `LxM`, or `path:+0,+1,-0,-1`.
        #[arg(long = "loop", default_value = "plaq")]
        loop_shape: String,
        /// Starting site, comma separated (default: origin).
        #[arg(long, value_delimiter = ',')]
        at: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        mu: usize,
        #[arg(long, default_value_t = 1)]
        nu: usize,
        /// Apply a random gauge transformation with this seed first.
        #[arg(long)]
        gauge_seed: Option<u64>,
        /// Also report the Wilson action at this coupling.
        #[arg(long)]
        beta: Option<f64>,
        /// Write the (transformed) field as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dyson-series transition amplitudes for a constant perturbation.
    Dyson {
        #[arg(long, default_value_t = 2)]
        levels: usize,
        #[arg(long)]
        omega: f64,
        #[arg(long, allow_hyphen_values = true)]
        eps: f64,
        #[arg(long)]
        order: u8,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 257)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 1)]
        to: usize,
    },
    /// Free-particle propagator: closed form and time-sliced path integral.
    Propagator {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = 8)]
        slices: usize,
        /// Damping in t -> t(1 - i eta) on the real-time axis.
        #[arg(long, default_value_t = 0.2)]
        damping: f64,
        /// Imaginary time: the kernel is the heat kernel.
        #[arg(long)]
        euclidean: bool,
        #[arg(long, default_value_t = -8.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 8.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 1601)]
        points: usize,
    },
}

pub enum Failure {
    Usage(String),
    Compute(Vec<String>),
}

impl Failure {
    pub fn compute(msg: impl ToString) -> Failure {
        Failure::Compute(vec![msg.to_string()])
    }
}

fn fail(diagnostics: Vec<String>, pretty: bool, code: u8) -> ExitCode {
    let doc = json!({"status": "error", "payload": null, "diagnostics": diagnostics});
    println!("{}", json::render(&doc, pretty));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let pretty_flag = argv.iter().any(|a| a == "--pretty");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let text = e.render().to_string();
            let lines = text.lines().map(str::trim_end).filter(|l| !l.is_empty()).map(String::from).collect();
            return fail(lines, pretty_flag, 1);
        }
    };
    match commands::run(cli.command) {
        Ok(payload) => {
            println!("{}", json::render(&payload, cli.pretty));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => fail(vec![msg], cli.pretty, 1),
        Err(Failure::Compute(diag)) => fail(diag, cli.pretty, 2),
    }
}
