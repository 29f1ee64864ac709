//! `horncodes`: command-line access to the library, with text or JSON output.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 a failed invariant check.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "horncodes", version, about = "Partitions, Horn sets, polynomial Smith forms and evaluation codes")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Field for field-dependent commands: `p`, `q`, `p^k` or `p^k/<modulus>`.
    #[arg(long, global = true, value_name = "SPEC")]
    pub field: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partitions: enumeration, conjugation, index-set partitions.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Number of (r+1)-subspaces of F_q^(n+1).
    Qbinom { n: u32, r: u32, q: u64 },
    /// Schur polynomial s_λ in m variables.
    Schur {
        #[arg(long)]
        lambda: String,
        #[arg(long, short = 'm')]
        vars: usize,
    },
    /// Littlewood-Richardson coefficient c^ν_{λμ}.
    Lr(Triple),
    /// Kronecker coefficient k_{λμν}.
    Kron(Triple),
    /// Character value χ^λ on the class with cycle type ρ.
    Character {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        rho: String,
    },
    /// Fixed-ν slice of the Kronecker or LR coefficients.
    KronMatrix {
        #[arg(long)]
        nu: String,
        #[arg(long, value_enum, default_value_t = SliceKind::Kronecker)]
        kind: SliceKind,
    },
    /// Product of the LR and Kronecker slices under both index conventions.
    Experiment {
        #[arg(long)]
        nu: String,
    },
    /// All triples with |λ| + |μ| = |ν| = n and c^ν_{λμ} > 0.
    LrSupport { n: usize },
    /// Horn index-triple sets.
    #[command(subcommand)]
    Horn(HornCmd),
    /// Finite-field element arithmetic.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Quotients of the Euclidean algorithm on f / g.
    Euclid {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Diagonal matrix of Euclid quotients for a rational function.
    Qmatrix {
        #[arg(long)]
        phi: String,
    },
    /// Smith normal form of a polynomial matrix (rows split by `|`, entries by `;`).
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Invariant-factor partitions of A, B and A·B.
    HornInstance {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Local degree of φ at a point of P^1.
    LocalDegree {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        at: String,
    },
    /// Points of the rational normal curve in PG(n, q).
    Nrc { n: usize },
    /// Degree-d Veronese image of a point of P^1.
    Veronese {
        #[arg(long)]
        point: String,
        #[arg(long, short = 'd')]
        degree: usize,
    },
    /// Arc test (and maximal collinear subset in the plane) for projective points.
    Arc {
        /// Points separated by whitespace, e.g. "(1:0:0) (0:1:0)".
        #[arg(long)]
        points: String,
    },
    /// Collineation invariance of the rational normal curve.
    Collineations { n: usize },
    /// Ω(J) over GF(p).
    Omega {
        /// Comma-separated subset of {0..n}.
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Ψ(J) = J ∪ (n - J).
    Psi {
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: usize,
    },
    /// Basis of the Riemann-Roch space L(D) on P^1.
    RrBasis {
        #[arg(long)]
        divisor: String,
    },
    /// Evaluation codes and code parameters.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Runs an acceptance suite.
    Verify {
        /// appendix, horn-lr, kronecker, snf, mds, arcs or all.
        suite: String,
    },
}

#[derive(Args, Debug)]
pub struct Triple {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub nu: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SliceKind {
    Kronecker,
    Lr,
}

#[derive(Subcommand, Debug)]
pub enum PartitionCmd {
    /// All partitions of n, lexicographically decreasing.
    List { n: usize },
    /// Conjugate partition.
    Conjugate { lambda: String },
    /// λ(I) for an index set I of size r in {1..n}.
    FromIndexSet {
        set: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum HornCmd {
    /// U^n_r.
    U { n: usize, r: usize },
    /// T^n_r.
    T { n: usize, r: usize },
    /// LR coefficients of every U-triple, split by membership in T.
    Check { n: usize, r: usize },
}

#[derive(Subcommand, Debug)]
pub enum FieldCmd {
    /// Field parameters and every element.
    Info,
    Add { a: String, b: String },
    Sub { a: String, b: String },
    Mul { a: String, b: String },
    Div { a: String, b: String },
    Inv { a: String },
    Pow { a: String, e: u64 },
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Evaluation code of L(D) at the given points (default: every finite point off the support).
    Eval {
        #[arg(long)]
        divisor: String,
        /// Comma-separated points of P^1.
        #[arg(long)]
        points: Option<String>,
        /// Also compute the minimum distance by exhaustion.
        #[arg(long)]
        distance: bool,
        #[arg(long, default_value_t = horncodes::codes::DEFAULT_EXHAUSTION_BOUND)]
        bound: u128,
    },
    /// Code of a·[0] + b·[1] + c·[∞] over GF(q^2).
    ThreePoint {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        d: u64,
        q: u64,
        #[arg(long)]
        distance: bool,
        #[arg(long, default_value_t = horncodes::codes::DEFAULT_EXHAUSTION_BOUND)]
        bound: u128,
    },
    /// Minimum distance of a code given by generator rows or a code file.
    Mindist {
        /// Generator rows separated by `|`, entries by spaces.
        #[arg(long, conflicts_with = "file")]
        generator: Option<String>,
        /// A file in the `n k d q` text format.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = horncodes::codes::DEFAULT_EXHAUSTION_BOUND)]
        bound: u128,
    },
    /// Length and dimensions of the Grassmann code C(r, n).
    Grassmann { n: u32, r: u32 },
    /// Orbit of a subspace under a matrix group.
    Orbit {
        /// Basis rows separated by `|`.
        #[arg(long)]
        subspace: String,
        /// Generator matrices separated by `/`, rows by `|`.
        #[arg(long)]
        generators: String,
    },
    /// Codeword (φ(P_1), ..., φ(P_n)).
    Rational {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        points: String,
    },
    /// Orbit of a point configuration under permutations of its positions.
    ConfigOrbit {
        /// Points of P^1 separated by commas.
        #[arg(long)]
        points: String,
        /// Permutations in one-line ("2,3,1") or cycle ("(1 2 3)") notation, separated by `/`.
        #[arg(long)]
        perms: String,
        /// Compare configurations as ordered tuples instead of multisets.
        #[arg(long)]
        ordered: bool,
    },
}

/// The JSON envelope of every command.
#[derive(Serialize, Debug)]
pub struct CommandResult {
    pub schema_version: u32,
    pub status: &'static str,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

/// What a successful command produced.
pub struct Outcome {
    pub payload: Value,
    pub text: String,
    /// Set when an invariant check inside the command failed.
    pub failure: Option<String>,
}

impl Outcome {
    pub fn new(payload: Value, text: impl Into<String>) -> Self {
        Self { payload, text: text.into(), failure: None }
    }
}

fn emit_json(result: &CommandResult) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, result);
    let _ = writeln!(out);
}

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) if json => {
            emit_json(&CommandResult {
                schema_version: SCHEMA_VERSION,
                status: "error",
                payload: Value::Object(Default::default()),
                diagnostics: vec![e.kind().to_string(), e.to_string().trim().to_string()],
            });
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            let code = if outcome.failure.is_some() { 3 } else { 0 };
            if cli.json {
                let (status, payload) = match outcome.failure {
                    Some(_) => ("error", Value::Object(Default::default())),
                    None => ("ok", outcome.payload),
                };
                let diagnostics = match &outcome.failure {
                    Some(f) => vec![f.clone()],
                    None => Vec::new(),
                };
                let diagnostics = if status == "error" {
                    diagnostics.into_iter().chain(outcome.text.lines().map(String::from)).collect()
                } else {
                    diagnostics
                };
                emit_json(&CommandResult { schema_version: SCHEMA_VERSION, status, payload, diagnostics });
            } else {
                print!("{}", outcome.text);
                if !outcome.text.ends_with('\n') {
                    println!();
                }
                if let Some(f) = outcome.failure {
                    eprintln!("error: {f}");
                }
            }
            ExitCode::from(code)
        }
        Err(commands::CliError(message)) => {
            if cli.json {
                emit_json(&CommandResult {
                    schema_version: SCHEMA_VERSION,
                    status: "error",
                    payload: Value::Object(Default::default()),
                    diagnostics: vec![message],
                });
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(2)
        }
    }
}
