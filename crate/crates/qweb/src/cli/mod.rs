//! Library side of the command-line front end. Each command returns its
//! output text; the binary only parses flags and sets the exit status.

pub mod dsl;

use serde_json::json;
use thiserror::Error;

use crate::normalform::{cfd_basis, cfd_basis_degree, cfd_basis_finite, NormalError, Reducer};
use crate::polyring::checks::poly_report;
use crate::qrep::{Oracle, QrepError};
use crate::sergeev::{decode, multiply_words, parse_word, phi_word, straighten, SergeevError};
use crate::webterm::{relation_suite, WebError};

pub use dsl::{parse, parse_morphism, parse_scalar, DslError, Expr};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Normal(#[from] NormalError),
    #[error(transparent)]
    Oracle(#[from] QrepError),
    #[error(transparent)]
    Sergeev(#[from] SergeevError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// 2 for usage problems, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Dsl(DslError::Syntax(_)) => "syntax",
            CliError::Dsl(_) => "elaboration",
            CliError::Normal(_) => "normalform",
            CliError::Oracle(_) => "oracle",
            CliError::Sergeev(_) => "sergeev",
            CliError::Web(_) => "web",
            CliError::Other(_) => "error",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        if let CliError::Dsl(DslError::Syntax(e)) = self {
            v["error"]["line"] = json!(e.line);
            v["error"]["column"] = json!(e.col);
        }
        v
    }
}

/// Command output and whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, ok: true }
    }
}

/// `"2,1"` → `[2, 1]`; the empty string is the empty object.
pub fn parse_object(s: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| match p.trim().parse::<u32>() {
            Ok(0) | Err(_) => Err(CliError::Usage(format!("bad object part {:?}", p))),
            Ok(v) => Ok(v),
        })
        .collect()
}

/// `V` (natural), `trivial`, or a list of symmetric powers like `1,2`.
pub fn parse_module(s: &str) -> Result<Vec<u32>, CliError> {
    match s.trim() {
        "V" | "v" | "natural" => Ok(vec![1]),
        "trivial" | "k" | "" => Ok(Vec::new()),
        other => parse_object(other),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn normalize(expr: &str) -> Result<Output, CliError> {
    let f = parse_morphism(expr)?;
    let n = Reducer::new().reduce(&f)?;
    Ok(Output::ok(pretty(&n.to_json())))
}

pub fn eval(expr: &str, n: usize, module: &[u32]) -> Result<Output, CliError> {
    let f = parse_morphism(expr)?;
    let o = Oracle::new(n, module)?;
    let m = o.eval(&f)?;
    Ok(Output::ok(pretty(&m.to_json())))
}

/// Per-degree counts `0..=maxdeg`, or the finite count.
pub fn dim(source: &[u32], target: &[u32], maxdeg: i64, finite: bool) -> Result<Output, CliError> {
    if finite {
        return Ok(Output::ok(cfd_basis_finite(target, source).len().to_string()));
    }
    let counts: Vec<String> = (0..=maxdeg).map(|d| cfd_basis_degree(target, source, d as u64).len().to_string()).collect();
    Ok(Output::ok(counts.join(" ")))
}

pub fn basis(source: &[u32], target: &[u32], maxdeg: i64, finite: bool) -> Result<Output, CliError> {
    let list = if finite { cfd_basis_finite(target, source) } else { cfd_basis(target, source, maxdeg) };
    let lines: Vec<String> =
        list.iter().map(|e| format!("deg {} {}: {}", e.degree(), if e.is_odd() { "odd " } else { "even" }, e)).collect();
    Ok(Output::ok(lines.join("\n")))
}

/// Checks a suite under the functor at rank `n` (natural module).
pub fn check_relations(suite: &str, bound: u32, n: usize) -> Result<Output, CliError> {
    let o = Oracle::natural(n)?;
    let mut lines = Vec::new();
    let mut ok = true;
    for r in relation_suite(suite, bound)? {
        let pass = o.equal(&r.lhs, &r.rhs)?;
        ok &= pass;
        lines.push(format!("{} {}", if pass { "PASS" } else { "FAIL" }, r.name));
    }
    lines.push(format!("{}: {}", suite, if ok { "all pass" } else { "FAILURES" }));
    Ok(Output { text: lines.join("\n"), ok })
}

pub fn sergeev_straighten(word: &str, n: usize) -> Result<Output, CliError> {
    Ok(Output::ok(straighten(n, &parse_word(word, n)?)?.to_string()))
}

pub fn sergeev_multiply(u: &str, v: &str, n: usize) -> Result<Output, CliError> {
    Ok(Output::ok(multiply_words(n, &parse_word(u, n)?, &parse_word(v, n)?)?.to_string()))
}

/// Straightens a word directly and through its diagram; reports both.
pub fn sergeev_roundtrip(word: &str, n: usize) -> Result<Output, CliError> {
    let w = parse_word(word, n)?;
    let direct = straighten(n, &w)?;
    let via = decode(&Reducer::new().reduce(&phi_word(&w, n)?)?)?;
    let ok = direct == via;
    Ok(Output { text: format!("straighten: {}\ndiagram:    {}\n{}", direct, via, if ok { "agree" } else { "DIFFER" }), ok })
}

pub fn poly_check(a: usize, k: usize, s: usize, ind_a: usize, ind_k: usize, ind_d: u64) -> Result<Output, CliError> {
    let r = poly_report(a, k, s, ind_a, ind_k, ind_d).map_err(|e| CliError::Other(e.to_string()))?;
    let ok = r.all_ok();
    Ok(Output { text: pretty(&json!({ "ok": ok, "report": r })), ok })
}
