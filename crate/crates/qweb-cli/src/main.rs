use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qweb::cli::{self, CliError, Output};

/// Exact computations with dotted webs of type Q.
///
/// Diagram expressions compose with `;` (`f ; g` runs g first, then f),
/// tensor with `*`, and add with `+`/`-`. Pass `-` to read from stdin.
#[derive(Parser)]
#[command(name = "qweb", version)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce an expression to the elementary basis (JSON)
    Normalize { expr: String },
    /// Evaluate under the representation functor (JSON matrix)
    Eval {
        expr: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// `V`, `trivial`, or symmetric powers such as `1,2`
        #[arg(long, default_value = "V")]
        module: String,
    },
    /// Basis counts per degree
    Dim {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        maxdeg: i64,
        #[arg(long)]
        finite: bool,
    },
    /// List basis elements
    Basis {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        maxdeg: i64,
        #[arg(long)]
        finite: bool,
    },
    /// Check a relation suite under the functor
    CheckRelations {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        bound: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Affine Sergeev superalgebra
    Sergeev {
        #[command(subcommand)]
        op: SergeevOp,
    },
    /// Polynomial layer checks
    PolyCheck {
        #[arg(long, default_value_t = 5)]
        a: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        s: usize,
        #[arg(long, default_value_t = 4)]
        ind_a: usize,
        #[arg(long, default_value_t = 2)]
        ind_k: usize,
        #[arg(long, default_value_t = 4)]
        ind_d: u64,
    },
}

#[derive(Subcommand)]
enum SergeevOp {
    /// PBW normal form of a word such as "x1 s1"
    Straighten {
        word: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Product of two words
    Multiply {
        u: String,
        v: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Compare straightening with reduction of the diagram
    Roundtrip {
        word: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

fn text_arg(s: String) -> Result<String, CliError> {
    if s != "-" {
        return Ok(s);
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Usage(format!("stdin: {}", e)))?;
    Ok(buf)
}

fn run(cmd: Cmd) -> Result<Output, CliError> {
    match cmd {
        Cmd::Normalize { expr } => cli::normalize(&text_arg(expr)?),
        Cmd::Eval { expr, n, module } => cli::eval(&text_arg(expr)?, n, &cli::parse_module(&module)?),
        Cmd::Dim { source, target, maxdeg, finite } => cli::dim(&cli::parse_object(&source)?, &cli::parse_object(&target)?, maxdeg, finite),
        Cmd::Basis { source, target, maxdeg, finite } => {
            cli::basis(&cli::parse_object(&source)?, &cli::parse_object(&target)?, maxdeg, finite)
        }
        Cmd::CheckRelations { suite, bound, n } => cli::check_relations(&suite, bound, n),
        Cmd::Sergeev { op } => match op {
            SergeevOp::Straighten { word, n } => cli::sergeev_straighten(&word, n),
            SergeevOp::Multiply { u, v, n } => cli::sergeev_multiply(&u, &v, n),
            SergeevOp::Roundtrip { word, n } => cli::sergeev_roundtrip(&word, n),
        },
        Cmd::PolyCheck { a, k, s, ind_a, ind_k, ind_d } => cli::poly_check(a, k, s, ind_a, ind_k, ind_d),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.cmd) {
        Ok(out) => {
            println!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&e.to_json()).expect("serializable"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
