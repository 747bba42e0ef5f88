//! Diagram language.
//!
//! ```text
//! expr  := comp (('+' | '-') comp)*          leading '-' allowed
//! comp  := tens (';' tens)*                  f ; g  is  f∘g  (g first)
//! tens  := juxt ('*' juxt)*                  tensor, left factor on the left
//! juxt  := prim+                             scalars multiply what follows
//! prim  := INT ['/' INT] | 'i' | call | '(' expr ')'
//! call  := id(λ) | merge(a,b) | split(a,b) | cross(a,b) | wdot(a) | bdot(a)
//!        | omega(a,r) | omegac(a,r) | packet(a;ν;η)
//! ```

use std::fmt;

use thiserror::Error;

use crate::combinat::{Partition, StrictPartition};
use crate::polyring::rational::Q;
use crate::polyring::Scalar;
use crate::webterm::{omega, omega_circ, packet, Gen, Morphism, WebError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {msg}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let pos = Pos { line, col };
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if ch.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), pos));
        } else if ch.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "()+-*;,/".contains(ch) {
            i += 1;
            out.push((Tok::Sym(ch), pos));
        } else {
            return Err(SyntaxError { line, col, msg: format!("unexpected character {:?}", ch) });
        }
        col += i - start;
    }
    Ok(out)
}

/// Parse tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar, Pos),
    Call(String, Vec<Vec<u32>>, Pos),
    Add(Box<Expr>, Box<Expr>, Pos),
    Sub(Box<Expr>, Box<Expr>, Pos),
    Neg(Box<Expr>, Pos),
    Compose(Box<Expr>, Box<Expr>, Pos),
    Tensor(Box<Expr>, Box<Expr>, Pos),
    Scale(Box<Expr>, Box<Expr>, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Num(_, p)
            | Expr::Call(_, _, p)
            | Expr::Add(_, _, p)
            | Expr::Sub(_, _, p)
            | Expr::Neg(_, p)
            | Expr::Compose(_, _, p)
            | Expr::Tensor(_, _, p)
            | Expr::Scale(_, _, p) => *p,
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        let p = self.pos();
        Err(SyntaxError { line: p.line, col: p.col, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let p = self.pos();
        let mut lhs = if self.eat('-') { Expr::Neg(Box::new(self.comp()?), p) } else { self.comp()? };
        loop {
            let p = self.pos();
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.comp()?), p);
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.comp()?), p);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn comp(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.tens()?;
        loop {
            let p = self.pos();
            if self.eat(';') {
                lhs = Expr::Compose(Box::new(lhs), Box::new(self.tens()?), p);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tens(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.juxt()?;
        loop {
            let p = self.pos();
            if self.eat('*') {
                lhs = Expr::Tensor(Box::new(lhs), Box::new(self.juxt()?), p);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_prim(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn juxt(&mut self) -> Result<Expr, SyntaxError> {
        let first = self.prim()?;
        if self.starts_prim() {
            let p = first.pos();
            let rest = self.juxt()?;
            return Ok(Expr::Scale(Box::new(first), Box::new(rest), p));
        }
        Ok(first)
    }

    fn int(&mut self) -> Result<u32, SyntaxError> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                let v = s.parse::<u32>().or_else(|_| self.err(format!("integer {} too large", s)))?;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    /// Comma-separated, possibly empty, list of integers.
    fn list(&mut self) -> Result<Vec<u32>, SyntaxError> {
        let mut v = Vec::new();
        if !matches!(self.peek(), Some(Tok::Int(_))) {
            return Ok(v);
        }
        v.push(self.int()?);
        while self.eat(',') {
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn prim(&mut self) -> Result<Expr, SyntaxError> {
        let p = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.at += 1;
                let num: Q = s.parse().or_else(|_| self.err("bad number"))?;
                if self.eat('/') {
                    let den = match self.peek().cloned() {
                        Some(Tok::Int(d)) if d.bytes().any(|b| b != b'0') => d,
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected a denominator"),
                    };
                    self.at += 1;
                    let den: Q = den.parse().or_else(|_| self.err("bad number"))?;
                    let q = &num * &den.recip().expect("nonzero");
                    return Ok(Expr::Num(Scalar::new(q, Q::from_int(0)), p));
                }
                Ok(Expr::Num(Scalar::new(num, Q::from_int(0)), p))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "i" && self.peek() != Some(&Tok::Sym('(')) {
                    return Ok(Expr::Num(Scalar::i(), p));
                }
                self.expect('(')?;
                let mut groups = vec![self.list()?];
                while self.eat(';') {
                    groups.push(self.list()?);
                }
                self.expect(')')?;
                Ok(Expr::Call(name, groups, p))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected {}", tok_text(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Int(s) | Tok::Ident(s) => format!("{:?}", s),
        Tok::Sym(c) => format!("'{}'", c),
    }
}

/// Parses the diagram language.
pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let toks = lex(text)?;
    let end = match text.lines().last() {
        Some(l) => Pos { line: text.lines().count(), col: l.chars().count() + 1 },
        None => Pos { line: 1, col: 1 },
    };
    let mut p = Parser { toks, at: 0, end };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err(format!("unexpected {}", tok_text(&p.toks[p.at].0)));
    }
    Ok(e)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
    #[error("{line}:{col}: {msg}")]
    Elaborate { line: usize, col: usize, msg: String },
}

/// Value of a subexpression.
#[derive(Clone, Debug)]
pub enum Value {
    Num(Scalar),
    Mor(Morphism),
}

fn fail<T>(p: Pos, msg: impl fmt::Display) -> Result<T, DslError> {
    Err(DslError::Elaborate { line: p.line, col: p.col, msg: msg.to_string() })
}

fn web<T>(p: Pos, r: Result<T, WebError>) -> Result<T, DslError> {
    r.or_else(|e| fail(p, e))
}

fn call(name: &str, g: &[Vec<u32>], p: Pos) -> Result<Morphism, DslError> {
    let shape: Vec<usize> = g.iter().map(Vec::len).collect();
    let want = |s: &[usize]| -> Result<(), DslError> {
        if shape == s {
            Ok(())
        } else {
            fail(p, format!("wrong arguments for {}", name))
        }
    };
    let gen = |gn: Gen| web(p, Morphism::make(gn));
    match name {
        "id" => {
            if g.len() != 1 {
                return fail(p, "id takes one list");
            }
            if g[0].contains(&0) {
                return fail(p, "zero thickness in id");
            }
            Ok(Morphism::id(&g[0]))
        }
        "merge" | "split" | "cross" => {
            want(&[2])?;
            let (a, b) = (g[0][0], g[0][1]);
            gen(match name {
                "merge" => Gen::Merge(a, b),
                "split" => Gen::Split(a, b),
                _ => Gen::Cross(a, b),
            })
        }
        "wdot" | "bdot" => {
            want(&[1])?;
            gen(if name == "wdot" { Gen::WDot(g[0][0]) } else { Gen::BDot(g[0][0]) })
        }
        "omega" | "omegac" => {
            want(&[2])?;
            let (a, r) = (g[0][0], g[0][1]);
            if a == 0 {
                return fail(p, "zero thickness");
            }
            Ok(if name == "omega" { omega(a, r) } else { omega_circ(a, r) })
        }
        "packet" => {
            if shape.len() != 3 || shape[0] != 1 {
                return fail(p, "packet takes (a; ν; η)");
            }
            let nu = StrictPartition::new(g[1].clone()).or_else(|e| fail(p, e))?;
            let eta = Partition::new(g[2].clone()).or_else(|e| fail(p, e))?;
            web(p, packet(g[0][0], &nu, &eta))
        }
        _ => fail(p, format!("unknown generator {:?}", name)),
    }
}

fn eval(e: &Expr) -> Result<Value, DslError> {
    use Value::*;
    Ok(match e {
        Expr::Num(s, _) => Num(s.clone()),
        Expr::Call(n, g, p) => Mor(call(n, g, *p)?),
        Expr::Neg(x, _) => match eval(x)? {
            Num(s) => Num(-s),
            Mor(m) => Mor(m.scale(&Scalar::int(-1))),
        },
        Expr::Add(a, b, p) | Expr::Sub(a, b, p) => {
            let sub = matches!(e, Expr::Sub(..));
            match (eval(a)?, eval(b)?) {
                (Num(x), Num(y)) => Num(if sub { &x - &y } else { &x + &y }),
                (Mor(x), Mor(y)) => {
                    let y = if sub { y.scale(&Scalar::int(-1)) } else { y };
                    Mor(web(*p, x.try_add(&y))?)
                }
                _ => return fail(*p, "cannot add a scalar to a morphism"),
            }
        }
        Expr::Compose(a, b, p) => match (eval(a)?, eval(b)?) {
            (Mor(x), Mor(y)) => Mor(web(*p, x.compose(&y))?),
            _ => return fail(*p, "';' needs morphisms on both sides"),
        },
        Expr::Tensor(a, b, p) => match (eval(a)?, eval(b)?) {
            (Mor(x), Mor(y)) => Mor(x.tensor(&y)),
            _ => return fail(*p, "'*' needs morphisms on both sides"),
        },
        Expr::Scale(a, b, p) => match (eval(a)?, eval(b)?) {
            (Num(x), Num(y)) => Num(&x * &y),
            (Num(x), Mor(y)) => Mor(y.scale(&x)),
            _ => return fail(*p, "only scalars may be juxtaposed before a term"),
        },
    })
}

/// Parses and elaborates to a morphism.
pub fn parse_morphism(text: &str) -> Result<Morphism, DslError> {
    let e = parse(text)?;
    match eval(&e)? {
        Value::Mor(m) => Ok(m),
        Value::Num(_) => fail(e.pos(), "expression is a scalar, not a morphism"),
    }
}

/// Parses a scalar such as `3/2`, `-1`, `1/2 + 3 i`.
pub fn parse_scalar(text: &str) -> Result<Scalar, DslError> {
    let e = parse(text)?;
    match eval(&e)? {
        Value::Num(s) => Ok(s),
        Value::Mor(_) => fail(e.pos(), "expected a scalar"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webterm::build::{c, id as idb, merge, split, t, wdot};

    #[test]
    fn examples() {
        let f = parse_morphism("merge(1,1) ; split(1,1)").unwrap();
        assert_eq!(f, c(&[merge(1, 1), split(1, 1)]));
        assert_eq!(f.src(), &[2]);
        let g = parse_morphism("wdot(2) * id(3)").unwrap();
        assert_eq!(g, t(&[wdot(2), idb(3)]));
        assert!(matches!(parse_morphism("merge(1,2) ; merge(1,1)"), Err(DslError::Elaborate { .. })));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/2 + 3/4 i").unwrap(), Scalar::new(Q::new(1, 2), Q::new(3, 4)));
        let f = parse_morphism("(1/2) wdot(1) - 2 bdot(1)").unwrap();
        assert_eq!(f.len(), 2);
        assert!(parse_morphism("2").is_err());
    }

    #[test]
    fn display_roundtrip() {
        let f = parse_morphism("3 merge(1,1);split(1,1) + (1/2 - i) wdot(2);wdot(2)").unwrap();
        assert_eq!(parse_morphism(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn positions() {
        let e = parse("merge(1,1) ;; split(1,1)").unwrap_err();
        assert_eq!((e.line, e.col), (1, 13));
        let e = parse("merge(1,1)\n + $").unwrap_err();
        assert_eq!((e.line, e.col), (2, 4));
        assert!(parse("merge(1,").is_err());
        assert!(parse("3/0 id(1)").is_err());
    }
}
