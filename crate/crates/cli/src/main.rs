//! `matmor`: JSON in, JSON out.
//!
//! Exit status is 0 on success, 1 on a domain error (the error is printed as a
//! JSON object on stdout) and 2 on a usage error.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "matmor",
    version,
    about = "Matroid morphisms, Tutte polynomials and Lorentzian certificates"
)]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = matmor::random::DEFAULT_SEED)]
    pub seed: u64,
    /// Add wall-clock timing to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of bases of each cardinality of a morphism.
    Bvector {
        morphism: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tutte-type polynomials.
    Tutte {
        #[command(subcommand)]
        kind: TutteKind,
    },
    /// Exact Lorentzian certificate for a homogeneous polynomial, or for the
    /// homogeneous Tutte polynomial of a flag with `--flag` and `--q`.
    Lorentzian {
        #[arg(required_unless_present = "flag", conflicts_with = "flag")]
        polynomial: Option<PathBuf>,
        #[arg(long)]
        flag: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', requires = "flag")]
        q: Vec<String>,
        /// Also run the floating-point log-concavity probe on the positive orthant.
        #[arg(long)]
        sample: bool,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Ultra-log-concavity of a sequence a_0 .. a_d (integers or p/q).
    Ulc {
        #[arg(required = true, allow_hyphen_values = true)]
        sequence: Vec<String>,
    },
    /// M♮-concavity and submodularity of a set function.
    Mnat { set_function: PathBuf },
    /// Lorentzian certificate of Z_{p,r} along a grid of p in (0, 1].
    ProbeLn {
        set_function: PathBuf,
        /// Comma-separated rationals; defaults to 1/8, 2/8, .., 1.
        #[arg(long, value_delimiter = ',')]
        grid: Vec<String>,
    },
    /// Lowest-order part of Z_{p,r}(w_0, p^{e_1} w_1, ..) at w_0 = 1.
    Limit {
        set_function: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        exponents: Vec<i64>,
        /// Also run the sampled log-concavity probe on the limit.
        #[arg(long)]
        sample: bool,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Sample in a box of this radius around (1, .., 1) instead of log-uniformly.
        #[arg(long)]
        near_ones: Option<f64>,
    },
    /// Faces and geometric dual of an embedded graph.
    Dualize { graph: PathBuf, rotation: PathBuf },
    /// Validity checks with witnesses.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Emits a bundled example document.
    Fixtures {
        #[arg(value_enum)]
        name: Fixture,
        /// Write every file of the fixture into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TutteKind {
    /// Z_{q,M}(w) = Σ_S q^{-rk S} Π w_i.
    Multivariate {
        matroid: PathBuf,
        #[arg(long)]
        q: String,
    },
    /// Trivariate Tutte polynomial of a quotient M → N.
    Lasvergnas { source: PathBuf, quotient: PathBuf },
    /// Homogeneous Tutte polynomial Z_{q,𝓜}(w_0, w).
    Flag {
        flag: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckKind {
    Morphism {
        morphism: PathBuf,
        #[arg(long, value_enum, default_value_t = Condition::Covering)]
        condition: Condition,
    },
    Quotient {
        source: PathBuf,
        quotient: PathBuf,
    },
    Flag {
        flag: PathBuf,
    },
    Delta {
        family: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Covering,
    Nested,
    Cocircuit,
    Flat,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    FanoProjection,
    GraphHom,
    K7Torus,
}

impl Fixture {
    fn name(self) -> &'static str {
        match self {
            Fixture::FanoProjection => "fano-projection",
            Fixture::GraphHom => "graph-hom",
            Fixture::K7Torus => "k7-torus",
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match commands::run(&cli, &argv[1..]) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", matmor::io::canonical_string(&render::error(&e)));
            ExitCode::from(1)
        }
    }
}
