//! `curalg`: exact computations with modules over current algebras.
//!
//! Every subcommand prints one JSON report. Exit status 0 means the
//! computation ran and every check it performs held, 1 means a check
//! failed (the report then carries `error` and `witness`), 2 means the
//! input could not be used.

mod commands;
mod load;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curalg::freelie::{set_limits, Limits};
use curalg::Error;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "curalg", version, about = "Exact computations with modules over current algebras")]
pub struct Cli {
    /// Cap on d^r monomials in any tensor degree.
    #[arg(long, global = true, env = "CURALG_MAX_MONOMIALS")]
    max_monomials: Option<usize>,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra and report perfectness.
    CheckAlgebra {
        #[arg(long)]
        algebra: String,
    },
    /// Lyndon basis sizes of the free Lie algebra on d letters.
    Freelie {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_r: usize,
        /// Also list the Lyndon words.
        #[arg(long)]
        words: bool,
    },
    /// Rank and kernel of τ_r.
    Kertau {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: usize,
        /// Also list a kernel basis in Lyndon coordinates.
        #[arg(long)]
        basis: bool,
    },
    /// Dimension of the truncated current algebra up to degree k.
    Truncdim {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        k: usize,
    },
    /// Check (C1)-(C3) for a module file.
    Verify {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Build one of the explicit module families.
    Build(BuildArgs),
    /// Apply x t^r to a vector.
    Act {
        #[arg(long)]
        module: String,
        /// Basis name or comma-separated coordinates.
        #[arg(long)]
        x: String,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Module homomorphisms from m1 to m2.
    Hom {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Search for an isomorphism from m1 to m2.
    Iso {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Test x ⊗ p(t) = 0 for p with the given roots, or search for one of
    /// the given degree.
    Annihilate {
        #[arg(long)]
        module: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "degree")]
        roots: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Highest-weight vectors and their weights.
    Highest {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Ext¹ between two modules.
    Ext {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long = "R", default_value_t = 6)]
        big_r: usize,
        #[arg(long = "S", default_value_t = 3)]
        window: usize,
    },
    /// Ext¹ through hom spaces from adjoint evaluation modules.
    ExtIrr {
        #[arg(long)]
        v: String,
        #[arg(long)]
        v2: String,
        /// Comma-separated evaluation points.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long = "R", default_value_t = 6)]
        big_r: usize,
        /// Also compute Ext¹ directly and fail if the two disagree.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Evaluation,
    TensorIdeal,
    SymIdeal,
    SymDual,
    Kr,
    Kostant,
    KostantDual,
    EvenOdd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value = "sl2")]
    algebra: String,
    /// nat, ad, triv or v<n> (sl2 only).
    #[arg(long, default_value = "nat")]
    rep: String,
    /// Evaluation point.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    a: String,
    /// Truncation degree.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// KR level.
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// zero, augmentation, ker-tau, degree:<k> or file:<path>.
    #[arg(long, default_value = "zero")]
    ideal: String,
    /// For even-odd: build from the contraction module instead.
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value = "even")]
    parity: ParityArg,
    #[arg(long, conflicts_with = "at_most")]
    at_least: Option<usize>,
    #[arg(long)]
    at_most: Option<usize>,
}

/// Outcome of a subcommand: a report, and whether its checks held.
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

impl Outcome {
    pub fn ok(report: Value) -> Self {
        Self { report, ok: true }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::DimensionMismatch(_)
        | Error::AmbientMismatch(..)
        | Error::SizeLimit { .. }
        | Error::DegreeLimit { .. }
        | Error::BadRank { .. } => 2,
        _ => 1,
    }
}

pub fn error_report(e: &Error) -> Value {
    json!({"error": e.code(), "message": e.to_string(), "witness": e.witness()})
}

fn emit(report: &Value, output: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    match output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.max_monomials {
        set_limits(Limits { max_monomials: cap, ..Limits::current() });
    }
    let (report, code) = match commands::run(&cli.command) {
        Ok(out) => {
            let code = if out.ok { 0 } else { 1 };
            (out.report, code)
        }
        Err(e) => (error_report(&e), exit_code(&e)),
    };
    if let Err(e) = emit(&report, cli.output.as_ref()) {
        eprintln!("curalg: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
