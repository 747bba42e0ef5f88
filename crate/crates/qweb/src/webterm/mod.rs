//! Dotted web diagrams: objects, generators, sliced terms and linear
//! combinations of them, with super-sign bookkeeping.

mod dots;
mod relations;

pub use dots::{omega, omega_circ, packet, thin_merge, thin_split};
pub use relations::{push_omega, relation_suite, Relation, SUITES};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::linalg::add_entry;
use crate::polyring::Scalar;

pub type Obj = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WebError {
    #[error("generator {0} has a zero thickness")]
    ZeroThickness(String),
    #[error("boundary mismatch: expected {expected:?}, got {got:?}")]
    BoundaryMismatch { expected: Obj, got: Obj },
    #[error("slice {0} does not fit the object {1:?}")]
    BadSlice(String, Obj),
    #[error("object {0:?} has a zero part")]
    NotStrict(Obj),
    #[error("unknown relation suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid dot packet: {0}")]
    BadPacket(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    Merge(u32, u32),
    Split(u32, u32),
    Cross(u32, u32),
    WDot(u32),
    BDot(u32),
}

impl Gen {
    pub fn src(&self) -> Obj {
        match *self {
            Gen::Merge(a, b) | Gen::Cross(a, b) => vec![a, b],
            Gen::Split(a, b) => vec![a + b],
            Gen::WDot(a) | Gen::BDot(a) => vec![a],
        }
    }

    pub fn tgt(&self) -> Obj {
        match *self {
            Gen::Merge(a, b) => vec![a + b],
            Gen::Split(a, b) => vec![a, b],
            Gen::Cross(a, b) => vec![b, a],
            Gen::WDot(a) | Gen::BDot(a) => vec![a],
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Gen::WDot(_))
    }

    pub fn degree(&self) -> u32 {
        match *self {
            Gen::BDot(a) => a,
            _ => 0,
        }
    }

    /// Image under the vertical reflection.
    pub fn flip(&self) -> Gen {
        match *self {
            Gen::Merge(a, b) => Gen::Split(a, b),
            Gen::Split(a, b) => Gen::Merge(a, b),
            Gen::Cross(a, b) => Gen::Cross(b, a),
            g => g,
        }
    }

    fn params(&self) -> Vec<u32> {
        match *self {
            Gen::Merge(a, b) | Gen::Split(a, b) | Gen::Cross(a, b) => vec![a, b],
            Gen::WDot(a) | Gen::BDot(a) => vec![a],
        }
    }

    pub fn validate(&self) -> Result<(), WebError> {
        if self.params().contains(&0) {
            return Err(WebError::ZeroThickness(self.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Merge(a, b) => write!(f, "merge({},{})", a, b),
            Gen::Split(a, b) => write!(f, "split({},{})", a, b),
            Gen::Cross(a, b) => write!(f, "cross({},{})", a, b),
            Gen::WDot(a) => write!(f, "wdot({})", a),
            Gen::BDot(a) => write!(f, "bdot({})", a),
        }
    }
}

/// One generator placed at strand position `pos` of the current object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slice {
    pub pos: usize,
    pub gen: Gen,
}

/// Slices listed bottom to top.
pub type Term = Vec<Slice>;

/// Applies one slice to an object.
pub fn apply_slice(obj: &[u32], s: &Slice) -> Result<Obj, WebError> {
    let src = s.gen.src();
    if s.pos + src.len() > obj.len() || obj[s.pos..s.pos + src.len()] != src[..] {
        return Err(WebError::BadSlice(format!("{}@{}", s.gen, s.pos), obj.to_vec()));
    }
    let mut out = obj[..s.pos].to_vec();
    out.extend(s.gen.tgt());
    out.extend_from_slice(&obj[s.pos + src.len()..]);
    Ok(out)
}

pub fn term_target(src: &[u32], t: &[Slice]) -> Result<Obj, WebError> {
    let mut cur = src.to_vec();
    for s in t {
        cur = apply_slice(&cur, s)?;
    }
    Ok(cur)
}

pub fn term_degree(t: &[Slice]) -> u32 {
    t.iter().map(|s| s.gen.degree()).sum()
}

pub fn term_parity(t: &[Slice]) -> bool {
    t.iter().filter(|s| s.gen.is_odd()).count() % 2 == 1
}

/// Canonical slicing of a term: among the generators whose inputs are all
/// present, always place the leftmost one next. Returns the reordered term
/// and whether the reordering of odd generators is an odd permutation.
pub fn canonicalize(src: &[u32], t: &[Slice]) -> (Term, bool) {
    struct Node {
        ins: Vec<usize>,
        outs: Vec<usize>,
        gen: Gen,
    }
    let mut next_id = src.len();
    let mut cur: Vec<usize> = (0..src.len()).collect();
    let mut nodes = Vec::with_capacity(t.len());
    for s in t {
        let nin = s.gen.src().len();
        let nout = s.gen.tgt().len();
        let ins: Vec<usize> = cur[s.pos..s.pos + nin].to_vec();
        let outs: Vec<usize> = (next_id..next_id + nout).collect();
        next_id += nout;
        cur.splice(s.pos..s.pos + nin, outs.iter().copied());
        nodes.push(Node { ins, outs, gen: s.gen });
    }
    let mut live: Vec<usize> = (0..src.len()).collect();
    let mut present = vec![false; next_id];
    for p in present.iter_mut().take(src.len()) {
        *p = true;
    }
    let mut done = vec![false; nodes.len()];
    let mut order = Vec::with_capacity(nodes.len());
    let mut out = Vec::with_capacity(nodes.len());
    for _ in 0..nodes.len() {
        let mut best: Option<(usize, usize)> = None;
        for (k, n) in nodes.iter().enumerate() {
            if done[k] || !n.ins.iter().all(|&i| present[i]) {
                continue;
            }
            let p = live.iter().position(|&x| x == n.ins[0]).expect("live strand");
            if best.is_none_or(|(bp, _)| p < bp) {
                best = Some((p, k));
            }
        }
        let (p, k) = best.expect("acyclic strand graph");
        let n = &nodes[k];
        live.splice(p..p + n.ins.len(), n.outs.iter().copied());
        for &o in &n.outs {
            present[o] = true;
        }
        done[k] = true;
        order.push(k);
        out.push(Slice { pos: p, gen: n.gen });
    }
    let odd: Vec<usize> = order.iter().copied().filter(|&k| nodes[k].gen.is_odd()).collect();
    let mut inv = 0usize;
    for i in 0..odd.len() {
        for j in (i + 1)..odd.len() {
            if odd[i] > odd[j] {
                inv += 1;
            }
        }
    }
    (out, inv % 2 == 1)
}

/// Shifts every slice of a term right by `k` strands.
fn shift(t: &[Slice], k: usize) -> Term {
    t.iter().map(|s| Slice { pos: s.pos + k, gen: s.gen }).collect()
}

/// Finite linear combination of diagrams with common boundary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    src: Obj,
    tgt: Obj,
    terms: BTreeMap<Term, Scalar>,
}

fn check_strict(o: &[u32]) -> Result<(), WebError> {
    if o.contains(&0) {
        return Err(WebError::NotStrict(o.to_vec()));
    }
    Ok(())
}

impl Morphism {
    pub fn zero(src: &[u32], tgt: &[u32]) -> Morphism {
        Morphism { src: src.to_vec(), tgt: tgt.to_vec(), terms: BTreeMap::new() }
    }

    pub fn id(obj: &[u32]) -> Morphism {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Scalar::one());
        Morphism { src: obj.to_vec(), tgt: obj.to_vec(), terms }
    }

    /// A single generator with coefficient 1.
    pub fn make(g: Gen) -> Result<Morphism, WebError> {
        g.validate()?;
        let mut terms = BTreeMap::new();
        terms.insert(vec![Slice { pos: 0, gen: g }], Scalar::one());
        Ok(Morphism { src: g.src(), tgt: g.tgt(), terms })
    }

    /// A single term on the given source, canonicalized.
    pub fn from_term(src: &[u32], t: &[Slice], c: Scalar) -> Result<Morphism, WebError> {
        check_strict(src)?;
        for s in t {
            s.gen.validate()?;
        }
        let tgt = term_target(src, t)?;
        let mut m = Morphism::zero(src, &tgt);
        m.push_term(t, c);
        Ok(m)
    }

    fn push_term(&mut self, t: &[Slice], c: Scalar) {
        let (ct, odd) = canonicalize(&self.src, t);
        add_entry(&mut self.terms, ct, if odd { -c } else { c });
    }

    pub fn src(&self) -> &[u32] {
        &self.src
    }

    pub fn tgt(&self) -> &[u32] {
        &self.tgt
    }

    pub fn terms(&self) -> &BTreeMap<Term, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self ∘ g`: `g` first, then `self`.
    pub fn compose(&self, g: &Morphism) -> Result<Morphism, WebError> {
        if self.src != g.tgt {
            return Err(WebError::BoundaryMismatch { expected: self.src.clone(), got: g.tgt.clone() });
        }
        let mut out = Morphism::zero(&g.src, &self.tgt);
        for (tg, cg) in &g.terms {
            for (tf, cf) in &self.terms {
                let mut t = tg.clone();
                t.extend_from_slice(tf);
                out.push_term(&t, cg * cf);
            }
        }
        Ok(out)
    }

    /// Composite of a list read top to bottom: `fs[0] ∘ fs[1] ∘ …`.
    pub fn chain(fs: &[Morphism]) -> Result<Morphism, WebError> {
        let mut it = fs.iter().rev();
        let mut acc = it.next().cloned().unwrap_or_else(|| Morphism::id(&[]));
        for f in it {
            acc = f.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `self ⊗ g`, realized as `(self ⊗ 1) ∘ (1 ⊗ g)`.
    pub fn tensor(&self, g: &Morphism) -> Morphism {
        let mut src = self.src.clone();
        src.extend_from_slice(&g.src);
        let mut tgt = self.tgt.clone();
        tgt.extend_from_slice(&g.tgt);
        let mut out = Morphism::zero(&src, &tgt);
        let k = self.src.len();
        for (tg, cg) in &g.terms {
            for (tf, cf) in &self.terms {
                let mut t = shift(tg, k);
                t.extend_from_slice(tf);
                out.push_term(&t, cg * cf);
            }
        }
        out
    }

    pub fn tensor_all(fs: &[Morphism]) -> Morphism {
        fs.iter().fold(Morphism::id(&[]), |acc, f| acc.tensor(f))
    }

    pub fn try_add(&self, g: &Morphism) -> Result<Morphism, WebError> {
        if self.src != g.src || self.tgt != g.tgt {
            let (expected, got) = if self.src != g.src { (self.src.clone(), g.src.clone()) } else { (self.tgt.clone(), g.tgt.clone()) };
            return Err(WebError::BoundaryMismatch { expected, got });
        }
        let mut out = self.clone();
        for (t, c) in &g.terms {
            add_entry(&mut out.terms, t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let mut out = Morphism::zero(&self.src, &self.tgt);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect();
        out
    }

    /// The ÷ involution: reflection in a horizontal axis.
    pub fn flip_div(&self) -> Morphism {
        let mut out = Morphism::zero(&self.tgt, &self.src);
        for (t, c) in &self.terms {
            let r: Term = t.iter().rev().map(|s| Slice { pos: s.pos, gen: s.gen.flip() }).collect();
            out.push_term(&r, c.clone());
        }
        out
    }

    /// Largest black-dot degree among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|t| term_degree(t)).max()
    }

    /// The common parity if the morphism is homogeneous and nonzero.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|t| term_parity(t));
        let first = it.next()?;
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn parity_part(&self, odd: bool) -> Morphism {
        self.filter(|t| term_parity(t) == odd)
    }

    pub fn degree_part(&self, d: u32) -> Morphism {
        self.filter(|t| term_degree(t) == d)
    }

    fn filter(&self, keep: impl Fn(&Term) -> bool) -> Morphism {
        let mut out = Morphism::zero(&self.src, &self.tgt);
        out.terms = self.terms.iter().filter(|(t, _)| keep(t)).map(|(t, c)| (t.clone(), c.clone())).collect();
        out
    }

    /// Number of generator slices in the longest term.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

/// Helpers that accept zero thicknesses: a zero-thickness leg is the
/// monoidal unit, so merges and splits with a zero leg are identities.
pub mod build {
    use super::*;

    pub fn id(a: u32) -> Morphism {
        if a == 0 {
            Morphism::id(&[])
        } else {
            Morphism::id(&[a])
        }
    }

    pub fn ids(obj: &[u32]) -> Morphism {
        let o: Vec<u32> = obj.iter().copied().filter(|&x| x > 0).collect();
        Morphism::id(&o)
    }

    pub fn merge(a: u32, b: u32) -> Morphism {
        match (a, b) {
            (0, _) => id(b),
            (_, 0) => id(a),
            _ => Morphism::make(Gen::Merge(a, b)).expect("positive"),
        }
    }

    pub fn split(a: u32, b: u32) -> Morphism {
        match (a, b) {
            (0, _) => id(b),
            (_, 0) => id(a),
            _ => Morphism::make(Gen::Split(a, b)).expect("positive"),
        }
    }

    pub fn cross(a: u32, b: u32) -> Morphism {
        match (a, b) {
            (0, _) => id(b),
            (_, 0) => id(a),
            _ => Morphism::make(Gen::Cross(a, b)).expect("positive"),
        }
    }

    /// A white dot on a zero-thickness strand is zero.
    pub fn wdot(a: u32) -> Morphism {
        if a == 0 {
            Morphism::zero(&[], &[])
        } else {
            Morphism::make(Gen::WDot(a)).expect("positive")
        }
    }

    pub fn bdot(a: u32) -> Morphism {
        if a == 0 {
            Morphism::id(&[])
        } else {
            Morphism::make(Gen::BDot(a)).expect("positive")
        }
    }

    pub fn t(fs: &[Morphism]) -> Morphism {
        Morphism::tensor_all(fs)
    }

    /// Top-to-bottom composite; panics on a boundary mismatch, which is a
    /// construction bug in the caller.
    pub fn c(fs: &[Morphism]) -> Morphism {
        Morphism::chain(fs).expect("boundaries match")
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

// Arithmetic operators panic on boundary mismatch; use `try_add` for
// checked sums.
impl<'a> Add<&'a Morphism> for &'a Morphism {
    type Output = Morphism;
    fn add(self, o: &Morphism) -> Morphism {
        self.try_add(o).expect("boundaries match")
    }
}

impl<'a> Sub<&'a Morphism> for &'a Morphism {
    type Output = Morphism;
    fn sub(self, o: &Morphism) -> Morphism {
        self.try_add(&o.scale(&Scalar::int(-1))).expect("boundaries match")
    }
}

impl Add for Morphism {
    type Output = Morphism;
    fn add(self, o: Morphism) -> Morphism {
        &self + &o
    }
}

impl Sub for Morphism {
    type Output = Morphism;
    fn sub(self, o: Morphism) -> Morphism {
        &self - &o
    }
}

impl Neg for Morphism {
    type Output = Morphism;
    fn neg(self) -> Morphism {
        self.scale(&Scalar::int(-1))
    }
}

impl Mul<Morphism> for Scalar {
    type Output = Morphism;
    fn mul(self, m: Morphism) -> Morphism {
        m.scale(&self)
    }
}

impl Mul<Morphism> for i64 {
    type Output = Morphism;
    fn mul(self, m: Morphism) -> Morphism {
        m.scale(&Scalar::int(self))
    }
}

/// Text of one term in the diagram language, top slice first.
pub fn term_text(src: &[u32], t: &[Slice]) -> String {
    if t.is_empty() {
        return format!("id({})", join(src));
    }
    let mut objs = vec![src.to_vec()];
    for s in t {
        let next = apply_slice(objs.last().unwrap(), s).expect("valid term");
        objs.push(next);
    }
    let mut parts = Vec::new();
    for (k, s) in t.iter().enumerate().rev() {
        let o = &objs[k];
        let n = s.gen.src().len();
        let mut pieces = Vec::new();
        if s.pos > 0 {
            pieces.push(format!("id({})", join(&o[..s.pos])));
        }
        pieces.push(s.gen.to_string());
        if s.pos + n < o.len() {
            pieces.push(format!("id({})", join(&o[s.pos + n..])));
        }
        parts.push(pieces.join(" * "));
    }
    parts.join(" ; ")
}

fn join(o: &[u32]) -> String {
    o.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) ({})", c, term_text(&self.src, t))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}: {}", self.src, self.tgt, self)
    }
}
