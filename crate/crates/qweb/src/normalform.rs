//! Reduction to the elementary chicken-foot basis, basis enumeration and
//! leading-term classification on a single strand.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{enumerate_matrices, factorial, partitions, strict_partitions, Partition, StrictPartition};
use crate::polyring::linalg::{add_entry, Echelon, SparseVec};
use crate::polyring::rational::Q;
use crate::polyring::Scalar;
use crate::sergeev::{reduced_word, Letter, Pbw, SergeevElement};
use crate::webterm::build::{c, cross, id, merge, split, t};
use crate::webterm::{omega_circ, packet, push_omega, Gen, Morphism, WebError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalError {
    #[error("invalid decoration: {0}")]
    Decoration(String),
    #[error("spanning violated: {0}")]
    SpanningViolated(String),
    #[error("boundary weights differ: {0:?} vs {1:?}")]
    WeightMismatch(Vec<u32>, Vec<u32>),
    #[error("not an endomorphism of a single strand")]
    NotSingleStrand,
    #[error("bad document: {0}")]
    Json(String),
    #[error(transparent)]
    Web(#[from] WebError),
}

/// Dot packet on the leg at entry `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LegDecor {
    pub row: usize,
    pub col: usize,
    pub nu: StrictPartition,
    pub eta: Partition,
}

/// Basis element: a matrix with row sums `target` and column sums `source`,
/// plus one packet per nonzero entry (row-major).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementaryCFD {
    pub target: Vec<u32>,
    pub source: Vec<u32>,
    pub matrix: Vec<Vec<u32>>,
    pub decor: Vec<LegDecor>,
}

fn entries(m: &[Vec<u32>]) -> Vec<(usize, usize, u32)> {
    let mut v = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if a > 0 {
                v.push((i, j, a));
            }
        }
    }
    v
}

impl ElementaryCFD {
    /// Undecorated matrix.
    pub fn plain(target: &[u32], source: &[u32], matrix: Vec<Vec<u32>>) -> Result<ElementaryCFD, NormalError> {
        let decor = entries(&matrix)
            .into_iter()
            .map(|(row, col, _)| LegDecor { row, col, nu: StrictPartition::empty(), eta: Partition::empty() })
            .collect();
        let e = ElementaryCFD { target: target.to_vec(), source: source.to_vec(), matrix, decor };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<(), NormalError> {
        let bad = |s: String| Err(NormalError::Decoration(s));
        if self.target.contains(&0) || self.source.contains(&0) {
            return bad("zero part in a boundary".into());
        }
        if self.matrix.len() != self.target.len() {
            return bad("row count differs from target length".into());
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != self.source.len() {
                return bad(format!("row {} has the wrong length", i));
            }
            if row.iter().map(|&x| x as u64).sum::<u64>() != self.target[i] as u64 {
                return bad(format!("row {} does not sum to {}", i, self.target[i]));
            }
        }
        for (j, &s) in self.source.iter().enumerate() {
            if self.matrix.iter().map(|r| r[j] as u64).sum::<u64>() != s as u64 {
                return bad(format!("column {} does not sum to {}", j, s));
            }
        }
        let ent = entries(&self.matrix);
        if ent.len() != self.decor.len() {
            return bad("one packet per nonzero entry is required".into());
        }
        for (&(i, j, a), d) in ent.iter().zip(&self.decor) {
            if (d.row, d.col) != (i, j) {
                return bad(format!("packet order: expected ({},{}), got ({},{})", i, j, d.row, d.col));
            }
            if d.nu.parts().iter().chain(d.eta.parts()).any(|&p| p > a) {
                return bad(format!("packet at ({},{}) exceeds thickness {}", i, j, a));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> u64 {
        self.decor.iter().map(|d| d.nu.bar_weight() + d.eta.weight()).sum()
    }

    pub fn is_odd(&self) -> bool {
        self.decor.iter().map(|d| d.nu.len()).sum::<usize>() % 2 == 1
    }

    /// At most one white dot per leg and no black dots.
    pub fn is_finite(&self) -> bool {
        self.decor.iter().all(|d| d.eta.is_empty() && (d.nu.is_empty() || d.nu.parts() == [1]))
    }

    /// Diagram: splits per column, packets at the leg bottoms (left leg
    /// lowest), reduced crossings, merges per row.
    pub fn embed(&self) -> Result<Morphism, NormalError> {
        self.validate()?;
        let ent = entries(&self.matrix);
        // legs in column-major order
        let mut legs: Vec<(usize, usize, u32)> = ent.clone();
        legs.sort_by_key(|&(i, j, _)| (j, i));
        let leg_obj: Vec<u32> = legs.iter().map(|l| l.2).collect();

        let bottom = Morphism::tensor_all(
            &(0..self.source.len())
                .map(|j| split_chain(&legs.iter().filter(|l| l.1 == j).map(|l| l.2).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        );
        let mut layers: Vec<Morphism> = Vec::new();
        for (k, leg) in legs.iter().enumerate() {
            let d = self.decor.iter().find(|d| (d.row, d.col) == (leg.0, leg.1)).expect("validated");
            let g = packet(leg.2, &d.nu, &d.eta)?;
            let mut parts: Vec<Morphism> = leg_obj[..k].iter().map(|&a| id(a)).collect();
            parts.push(g);
            parts.extend(leg_obj[k + 1..].iter().map(|&a| id(a)));
            layers.push(Morphism::tensor_all(&parts));
        }
        let mut f = bottom;
        for l in layers {
            f = l.compose(&f)?;
        }
        // bubble sort into row-major order
        let mut cur = legs.clone();
        let mut swapped = true;
        while swapped {
            swapped = false;
            for p in 0..cur.len().saturating_sub(1) {
                if (cur[p].0, cur[p].1) > (cur[p + 1].0, cur[p + 1].1) {
                    let obj: Vec<u32> = cur.iter().map(|l| l.2).collect();
                    let mut parts: Vec<Morphism> = obj[..p].iter().map(|&a| id(a)).collect();
                    parts.push(cross(obj[p], obj[p + 1]));
                    parts.extend(obj[p + 2..].iter().map(|&a| id(a)));
                    f = Morphism::tensor_all(&parts).compose(&f)?;
                    cur.swap(p, p + 1);
                    swapped = true;
                }
            }
        }
        let top = Morphism::tensor_all(
            &(0..self.target.len())
                .map(|i| merge_chain(&ent.iter().filter(|l| l.0 == i).map(|l| l.2).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        );
        Ok(top.compose(&f)?)
    }
}

fn split_chain(legs: &[u32]) -> Morphism {
    match legs.len() {
        0 => Morphism::id(&[]),
        1 => id(legs[0]),
        _ => {
            let rest: u32 = legs[1..].iter().sum();
            c(&[t(&[id(legs[0]), split_chain(&legs[1..])]), split(legs[0], rest)])
        }
    }
}

fn merge_chain(legs: &[u32]) -> Morphism {
    match legs.len() {
        0 => Morphism::id(&[]),
        1 => id(legs[0]),
        _ => {
            let rest: u32 = legs[1..].iter().sum();
            c(&[merge(legs[0], rest), t(&[id(legs[0]), merge_chain(&legs[1..])])])
        }
    }
}

impl fmt::Display for ElementaryCFD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.matrix.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join(";"))?;
        for d in &self.decor {
            if !d.nu.is_empty() || !d.eta.is_empty() {
                let eta: Vec<String> = d.eta.parts().iter().map(|x| x.to_string()).collect();
                write!(f, " ({},{}):{}|({})", d.row, d.col, d.nu, eta.join(","))?;
            }
        }
        Ok(())
    }
}

/// Packets `(ν, η)` on a leg of thickness `a` with `|ν̄| + |η| = d`.
pub fn leg_packets(a: u32, d: u64) -> Vec<(StrictPartition, Partition)> {
    let mut out = Vec::new();
    for nu in strict_partitions(a) {
        let nb = nu.bar_weight();
        if nb > d {
            continue;
        }
        for eta in partitions((d - nb) as u32, a) {
            out.push((nu.clone(), eta));
        }
    }
    out
}

/// Basis of `Hom(source, target)` in degree exactly `d`.
pub fn cfd_basis_degree(target: &[u32], source: &[u32], d: u64) -> Vec<ElementaryCFD> {
    if target.contains(&0) || source.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for m in enumerate_matrices(target, source) {
        let ent = entries(&m);
        // distribute degree d over the legs
        fn go(
            k: usize,
            left: u64,
            ent: &[(usize, usize, u32)],
            cur: &mut Vec<LegDecor>,
            base: &ElementaryCFD,
            out: &mut Vec<ElementaryCFD>,
        ) {
            if k == ent.len() {
                if left == 0 {
                    let mut e = base.clone();
                    e.decor = cur.clone();
                    out.push(e);
                }
                return;
            }
            let (i, j, a) = ent[k];
            for dk in 0..=left {
                for (nu, eta) in leg_packets(a, dk) {
                    cur.push(LegDecor { row: i, col: j, nu, eta });
                    go(k + 1, left - dk, ent, cur, base, out);
                    cur.pop();
                }
            }
        }
        let base = ElementaryCFD { target: target.to_vec(), source: source.to_vec(), matrix: m.clone(), decor: vec![] };
        go(0, d, &ent, &mut Vec::new(), &base, &mut out);
    }
    out
}

/// Basis of `Hom(source, target)` up to degree `maxdeg` (empty when negative).
pub fn cfd_basis(target: &[u32], source: &[u32], maxdeg: i64) -> Vec<ElementaryCFD> {
    (0..=maxdeg).flat_map(|d| cfd_basis_degree(target, source, d as u64)).collect()
}

/// Basis of the subcategory without black dots: at most one white dot per leg.
pub fn cfd_basis_finite(target: &[u32], source: &[u32]) -> Vec<ElementaryCFD> {
    if target.contains(&0) || source.contains(&0) {
        return Vec::new();
    }
    let one = StrictPartition::new(vec![1]).expect("strict");
    let mut out = Vec::new();
    for m in enumerate_matrices(target, source) {
        let ent = entries(&m);
        for mask in 0u64..(1u64 << ent.len()) {
            let decor = ent
                .iter()
                .enumerate()
                .map(|(k, &(row, col, _))| LegDecor {
                    row,
                    col,
                    nu: if mask >> k & 1 == 1 { one.clone() } else { StrictPartition::empty() },
                    eta: Partition::empty(),
                })
                .collect();
            out.push(ElementaryCFD { target: target.to_vec(), source: source.to_vec(), matrix: m.clone(), decor });
        }
    }
    out
}

/// Linear combination of basis elements with fixed boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalMorphism {
    pub target: Vec<u32>,
    pub source: Vec<u32>,
    pub terms: BTreeMap<ElementaryCFD, Scalar>,
}

impl NormalMorphism {
    pub fn zero(target: &[u32], source: &[u32]) -> NormalMorphism {
        NormalMorphism { target: target.to_vec(), source: source.to_vec(), terms: BTreeMap::new() }
    }

    pub fn basis_element(e: ElementaryCFD) -> NormalMorphism {
        let mut n = NormalMorphism::zero(&e.target, &e.source);
        n.terms.insert(e, Scalar::one());
        n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn embed(&self) -> Result<Morphism, NormalError> {
        let mut f = Morphism::zero(&self.source, &self.target);
        for (e, k) in &self.terms {
            f = f.try_add(&e.embed()?.scale(k))?;
        }
        Ok(f)
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(ElementaryCFD::degree).max()
    }

    /// Component of degree exactly `d`.
    pub fn degree_part(&self, d: u64) -> NormalMorphism {
        let mut n = NormalMorphism::zero(&self.target, &self.source);
        n.terms = self.terms.iter().filter(|(e, _)| e.degree() == d).map(|(e, k)| (e.clone(), k.clone())).collect();
        n
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = Doc {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| DocTerm {
                    matrix: e.matrix.clone(),
                    decorations: e
                        .decor
                        .iter()
                        .map(|d| DocDecor { row: d.row, col: d.col, nu: d.nu.parts().to_vec(), eta: d.eta.parts().to_vec() })
                        .collect(),
                    coefficient: DocCoef { re: k.re.to_string(), im: k.im.to_string() },
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<NormalMorphism, NormalError> {
        let doc: Doc = serde_json::from_str(text).map_err(|e| NormalError::Json(e.to_string()))?;
        let mut n = NormalMorphism::zero(&doc.target, &doc.source);
        for term in doc.terms {
            let decor = term
                .decorations
                .into_iter()
                .map(|d| {
                    Ok(LegDecor {
                        row: d.row,
                        col: d.col,
                        nu: StrictPartition::new(d.nu).map_err(|e| NormalError::Decoration(e.to_string()))?,
                        eta: Partition::new(d.eta).map_err(|e| NormalError::Decoration(e.to_string()))?,
                    })
                })
                .collect::<Result<Vec<_>, NormalError>>()?;
            let e = ElementaryCFD { target: doc.target.clone(), source: doc.source.clone(), matrix: term.matrix, decor };
            e.validate()?;
            let parse = |s: &str| s.parse::<Q>().map_err(|_| NormalError::Json(format!("bad rational {:?}", s)));
            let k = Scalar::new(parse(&term.coefficient.re)?, parse(&term.coefficient.im)?);
            add_entry(&mut n.terms, e, k);
        }
        Ok(n)
    }
}

impl fmt::Display for NormalMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, k)| format!("({}) {}", k, e)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    source: Vec<u32>,
    target: Vec<u32>,
    terms: Vec<DocTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocTerm {
    matrix: Vec<Vec<u32>>,
    decorations: Vec<DocDecor>,
    coefficient: DocCoef,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocDecor {
    row: usize,
    col: usize,
    nu: Vec<u32>,
    eta: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocCoef {
    re: String,
    im: String,
}

// ---------------------------------------------------------------------------
// thin explosion

/// `e · Σ w` over the permutations `w` of strands `off..off+a`, using
/// `S_k = S_{k-1} · {1, s_{k-1}, s_{k-1}s_{k-2}, …, s_{k-1}⋯s_1}`.
fn mul_sym(e: SergeevElement, off: usize, a: usize) -> SergeevElement {
    (1..a).fold(e, |acc, j| mul_coset(acc, off, j))
}

// q · (1 + s_j (1 + s_{j-1} (⋯ (1 + s_1))))
fn mul_coset(q: SergeevElement, off: usize, j: usize) -> SergeevElement {
    if j == 0 {
        return q;
    }
    let next = mul_coset(q.mul_letter(Letter::S(off + j)), off, j - 1);
    let mut out = q;
    out.add_scaled(&next, &Scalar::one());
    out
}

/// Running product `e · k` with the thin ranges `[lo, hi)` under whose
/// symmetric group `e` is right-invariant (`e · w = e`).
struct Acc {
    e: SergeevElement,
    k: Scalar,
    inv: Vec<(usize, usize)>,
}

impl Acc {
    fn new(m: usize) -> Acc {
        Acc { e: SergeevElement::one(m), k: Scalar::one(), inv: Vec::new() }
    }

    fn forget(&mut self, lo: usize, hi: usize) {
        self.inv.retain(|&(a, b)| b <= lo || hi <= a);
    }

    fn sym(&mut self, lo: usize, hi: usize) {
        if hi - lo < 2 {
            return;
        }
        if self.inv.iter().any(|&(a, b)| a <= lo && hi <= b) {
            self.k = &self.k * &fact_q((hi - lo) as u32);
            return;
        }
        self.e = mul_sym(std::mem::replace(&mut self.e, SergeevElement::zero(0)), lo, hi - lo);
        self.forget(lo, hi);
        self.inv.push((lo, hi));
    }

    /// Right multiplication by the thin image of one generator whose source
    /// starts at thin strand `off`.
    fn core(&mut self, off: usize, g: &Gen) {
        match *g {
            Gen::Merge(a, b) | Gen::Split(a, b) => self.sym(off, off + (a + b) as usize),
            Gen::Cross(a, b) => {
                let (a, b) = (a as usize, b as usize);
                let mut w: Vec<u8> = (0..self.e.n as u8).collect();
                for k in 0..a {
                    w[off + k] = (off + b + k) as u8;
                }
                for k in 0..b {
                    w[off + a + k] = (off + k) as u8;
                }
                let letters: Vec<Letter> = reduced_word(&w).into_iter().map(|i| Letter::S(i + 1)).collect();
                self.e = self.e.mul_word(&letters);
                self.forget(off, off + a + b);
                self.sym(off, off + a);
                self.sym(off + a, off + a + b);
            }
            Gen::WDot(a) => {
                // Σ c_k commutes with the block's symmetric group
                self.sym(off, off + a as usize);
                let mut out = SergeevElement::zero(self.e.n);
                for k in 0..a as usize {
                    out.add_scaled(&self.e.mul_letter(Letter::C(off + k + 1)), &Scalar::one());
                }
                self.e = out;
                self.keep_only_block(off, off + a as usize);
            }
            Gen::BDot(a) => {
                // so does x_1⋯x_a
                self.sym(off, off + a as usize);
                let xs: Vec<Letter> = (0..a as usize).map(|k| Letter::X(off + k + 1)).collect();
                self.e = self.e.mul_word(&xs);
                self.keep_only_block(off, off + a as usize);
            }
        }
    }

    fn keep_only_block(&mut self, lo: usize, hi: usize) {
        self.forget(lo, hi);
        if hi - lo >= 2 {
            self.inv.push((lo, hi));
        }
    }
}

fn offsets(obj: &[u32]) -> Vec<usize> {
    obj.iter()
        .scan(0usize, |acc, &o| {
            let here = *acc;
            *acc += o as usize;
            Some(here)
        })
        .collect()
}

fn fact_q(a: u32) -> Scalar {
    Scalar::int(factorial(a))
}

/// `split_full ∘ f ∘ merge_full` as an element of `A_m`, `m` the total
/// thickness.
///
/// Per term this is `Π_k X_k / Π_{inner objects} Π o_i!` with `X_k` the
/// sandwich of slice `k`. Symmetrizers on strands a slice leaves alone are
/// absorbed by the neighbouring slices, so only the generator cores and the
/// outer symmetrizers of untouched boundary strands are multiplied out.
pub fn thin_explode(f: &Morphism) -> Result<SergeevElement, NormalError> {
    let ws: u32 = f.src().iter().sum();
    let wt: u32 = f.tgt().iter().sum();
    if ws != wt {
        return Err(NormalError::WeightMismatch(f.src().to_vec(), f.tgt().to_vec()));
    }
    let m = ws as usize;
    let mut out = SergeevElement::zero(m);
    for (term, k) in f.terms() {
        if term.is_empty() {
            let offs = offsets(f.src());
            let e = f.src().iter().zip(&offs).fold(SergeevElement::one(m), |e, (&o, &off)| mul_sym(e, off, o as usize));
            out.add_scaled(&e, k);
            continue;
        }
        let mut objs = vec![f.src().to_vec()];
        for s in term {
            let next = crate::webterm::apply_slice(objs.last().expect("nonempty"), s)?;
            objs.push(next);
        }
        let mut num = Scalar::one();
        let mut den = Scalar::one();
        for o in &objs[1..objs.len() - 1] {
            den = &den * &obj_norm(o);
        }
        let top = term.last().expect("nonempty");
        let tgt = objs.last().expect("nonempty");
        let mut acc = Acc::new(m);
        for (j, (&o, off)) in tgt.iter().zip(offsets(tgt)).enumerate() {
            if j < top.pos || j >= top.pos + top.gen.tgt().len() {
                acc.sym(off, off + o as usize);
                den = &den * &fact_q(o);
            }
        }
        for (idx, s) in term.iter().enumerate().rev() {
            let obj = &objs[idx];
            let span = s.pos..s.pos + s.gen.src().len();
            for (j, &o) in obj.iter().enumerate() {
                if !span.contains(&j) {
                    num = &num * &fact_q(o);
                }
            }
            acc.core(offsets(obj)[s.pos], &s.gen);
        }
        let bottom = &term[0];
        for (j, (&o, off)) in f.src().iter().zip(offsets(f.src())).enumerate() {
            if j < bottom.pos || j >= bottom.pos + bottom.gen.src().len() {
                acc.sym(off, off + o as usize);
                den = &den * &fact_q(o);
            }
        }
        let e = acc.e;
        num = &num * &acc.k;
        let scale = &(k * &num) * &den.inv().expect("nonzero");
        out.add_scaled(&e, &scale);
    }
    Ok(out)
}

fn obj_norm(obj: &[u32]) -> Scalar {
    let mut n = 1i64;
    for &o in obj {
        n *= factorial(o);
    }
    Scalar::int(n)
}

// ---------------------------------------------------------------------------
// reduction

struct Solver {
    basis: Vec<ElementaryCFD>,
    ech: Echelon<Pbw>,
}

/// Reduces morphisms to basis coordinates, caching exploded bases per
/// boundary pair and degree bound.
#[derive(Default)]
pub struct Reducer {
    cache: HashMap<(Vec<u32>, Vec<u32>, u64, Vec<bool>), Solver>,
}

impl Reducer {
    pub fn new() -> Reducer {
        Reducer::default()
    }

    fn solver(&mut self, target: &[u32], source: &[u32], d: u64, parities: Vec<bool>) -> Result<&Solver, NormalError> {
        let key = (target.to_vec(), source.to_vec(), d, parities.clone());
        if !self.cache.contains_key(&key) {
            let basis: Vec<ElementaryCFD> =
                cfd_basis(target, source, d as i64).into_iter().filter(|b| parities.contains(&b.is_odd())).collect();
            let mut ech = Echelon::new();
            for b in &basis {
                let v = thin_explode(&b.embed()?)?;
                if !ech.insert(v.terms) {
                    return Err(NormalError::SpanningViolated(format!("basis element {} is not independent", b)));
                }
            }
            self.cache.insert(key.clone(), Solver { basis, ech });
        }
        Ok(&self.cache[&key])
    }

    pub fn reduce(&mut self, f: &Morphism) -> Result<NormalMorphism, NormalError> {
        let (target, source) = (f.tgt().to_vec(), f.src().to_vec());
        let ws: u32 = source.iter().sum();
        let wt: u32 = target.iter().sum();
        if ws != wt {
            if f.is_zero() {
                return Ok(NormalMorphism::zero(&target, &source));
            }
            return Err(NormalError::WeightMismatch(source, target));
        }
        let x = thin_explode(f)?;
        if x.is_zero() {
            return Ok(NormalMorphism::zero(&target, &source));
        }
        let d = f.degree().unwrap_or(0) as u64;
        let mut parities: Vec<bool> = x.terms.keys().map(Pbw::is_odd).collect();
        parities.sort();
        parities.dedup();
        let solver = self.solver(&target, &source, d, parities)?;
        let coords: SparseVec<usize> = solver
            .ech
            .solve(x.terms)
            .ok_or_else(|| NormalError::SpanningViolated(format!("{} -> {}", fmt_obj(&source), fmt_obj(&target))))?;
        let mut out = NormalMorphism::zero(&target, &source);
        for (i, k) in coords {
            add_entry(&mut out.terms, solver.basis[i].clone(), k);
        }
        Ok(out)
    }
}

fn fmt_obj(o: &[u32]) -> String {
    format!("{:?}", o)
}

/// One-shot reduction.
pub fn reduce(f: &Morphism) -> Result<NormalMorphism, NormalError> {
    Reducer::new().reduce(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PushSide {
    Merge,
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DotKind {
    Omega,
    OmegaCirc,
}

/// Exact expansion of `ω_{a+b,r}` (or `ω°`) pushed through a merge or split
/// onto the legs.
pub fn push_dot_exact(side: PushSide, a: u32, b: u32, r: u32, kind: DotKind) -> Result<Morphism, NormalError> {
    if a == 0 || b == 0 {
        return Err(NormalError::Web(WebError::ZeroThickness(format!("push through ({},{})", a, b))));
    }
    match kind {
        DotKind::Omega => {
            let (down, up) = push_omega(a, b, r);
            Ok(if side == PushSide::Merge { down } else { up })
        }
        DotKind::OmegaCirc => {
            let f = match side {
                PushSide::Merge => c(&[omega_circ(a + b, r), merge(a, b)]),
                PushSide::Split => c(&[split(a, b), omega_circ(a + b, r)]),
            };
            reduce(&f)?.embed()
        }
    }
}

/// Which leading-term spans the top-degree part of an endomorphism of a
/// single strand lies in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingClass {
    pub top_degree: Option<u64>,
    /// packets with no white dots
    pub in_d: bool,
    pub in_e: bool,
    /// white dots only in pairs `ω°_s ω°_t`, or none
    pub in_z: bool,
    /// no white dots and exact degree `top_degree`
    pub in_e0: bool,
}

pub fn leading_class(red: &mut Reducer, f: &Morphism) -> Result<LeadingClass, NormalError> {
    if f.src().len() != 1 || f.tgt() != f.src() {
        return Err(NormalError::NotSingleStrand);
    }
    let n = red.reduce(f)?;
    let Some(top) = n.max_degree() else {
        return Ok(LeadingClass { top_degree: None, in_d: true, in_e: true, in_z: true, in_e0: true });
    };
    let lead = n.degree_part(top);
    let packets: Vec<&LegDecor> = lead.terms.keys().map(|e| &e.decor[0]).collect();
    let in_d = packets.iter().all(|d| d.nu.is_empty());
    let in_z = packets.iter().all(|d| d.nu.is_empty() || (d.nu.len() == 2 && d.eta.is_empty()));
    Ok(LeadingClass { top_degree: Some(top), in_d, in_e: true, in_z, in_e0: in_d })
}

#[cfg(test)]
mod naive {
    use super::*;
    use crate::webterm::Slice;

    fn perm_element(m: usize, w: Vec<u8>) -> SergeevElement {
        SergeevElement::monomial(Pbw { w, c: 0, x: vec![0; m] }, Scalar::one())
    }

    fn permutations(a: usize) -> Vec<Vec<u8>> {
        if a == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(a - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, (a - 1) as u8);
                out.push(q);
            }
        }
        out
    }

    /// `split_full(a) ∘ merge_full(a)` on strands `off..off+a` of `A_m`: the sum
    /// of all permutations of those strands.
    fn sym(m: usize, off: usize, a: usize) -> SergeevElement {
        let mut out = SergeevElement::zero(m);
        for p in permutations(a) {
            let mut w: Vec<u8> = (0..m as u8).collect();
            for (k, &v) in p.iter().enumerate() {
                w[off + k] = (off as u8) + v;
            }
            out.add_scaled(&perm_element(m, w), &Scalar::one());
        }
        out
    }

    fn mul(a: &SergeevElement, b: &SergeevElement) -> SergeevElement {
        a.multiply(b).expect("same rank")
    }

    /// Sandwich `split_full(tgt) ∘ slice ∘ merge_full(src)` as an element of `A_m`.
    fn explode_slice(obj: &[u32], s: &Slice, m: usize) -> SergeevElement {
        let mut offs = Vec::with_capacity(obj.len());
        let mut acc = 0usize;
        for &o in obj {
            offs.push(acc);
            acc += o as usize;
        }
        let gsrc = s.gen.src().len();
        let mut out = SergeevElement::one(m);
        for (k, &o) in obj.iter().enumerate() {
            if k < s.pos || k >= s.pos + gsrc {
                out = mul(&out, &sym(m, offs[k], o as usize));
            }
        }
        let off = offs[s.pos];
        let core = match s.gen {
            Gen::Merge(a, b) | Gen::Split(a, b) => sym(m, off, (a + b) as usize),
            Gen::Cross(a, b) => {
                let (a, b) = (a as usize, b as usize);
                let mut w: Vec<u8> = (0..m as u8).collect();
                for k in 0..a {
                    w[off + k] = (off + b + k) as u8;
                }
                for k in 0..b {
                    w[off + a + k] = (off + k) as u8;
                }
                let blocks = mul(&sym(m, off, a), &sym(m, off + a, b));
                mul(&perm_element(m, w), &blocks)
            }
            Gen::WDot(a) => {
                let mut cs = SergeevElement::zero(m);
                for k in 0..a as usize {
                    cs.add_scaled(&SergeevElement::one(m).mul_letter(Letter::C(off + k + 1)), &Scalar::one());
                }
                mul(&sym(m, off, a as usize), &cs)
            }
            Gen::BDot(a) => {
                let xs: Vec<Letter> = (0..a as usize).map(|k| Letter::X(off + k + 1)).collect();
                sym(m, off, a as usize).mul_word(&xs)
            }
        };
        mul(&out, &core)
    }

    /// Slice-by-slice product with every symmetrizer multiplied out.
    pub(super) fn thin_explode_naive(f: &Morphism) -> Result<SergeevElement, NormalError> {
        let ws: u32 = f.src().iter().sum();
        let wt: u32 = f.tgt().iter().sum();
        if ws != wt {
            return Err(NormalError::WeightMismatch(f.src().to_vec(), f.tgt().to_vec()));
        }
        let m = ws as usize;
        let mut out = SergeevElement::zero(m);
        for (term, k) in f.terms() {
            if term.is_empty() {
                let mut e = SergeevElement::one(m);
                let mut off = 0usize;
                for &o in f.src() {
                    e = mul(&e, &sym(m, off, o as usize));
                    off += o as usize;
                }
                out.add_scaled(&e, k);
                continue;
            }
            // objects below each slice
            let mut objs = vec![f.src().to_vec()];
            for s in term {
                let next = crate::webterm::apply_slice(objs.last().expect("nonempty"), s)?;
                objs.push(next);
            }
            let mut scale = k.clone();
            for o in &objs[1..objs.len() - 1] {
                scale = &scale * &obj_norm(o).inv().expect("nonzero");
            }
            let mut e = SergeevElement::one(m);
            for (idx, s) in term.iter().enumerate().rev() {
                e = mul(&e, &explode_slice(&objs[idx], s, m));
            }
            out.add_scaled(&e, &scale);
        }
        Ok(out)
    }
}
