//! Exact evaluation of diagrams as linear maps between tensor products of
//! supersymmetric powers of `V = k^{n|n}`, with an auxiliary module on the
//! left that the black dots see through the `Ω` operator.

mod action;

pub use action::{act_on_sympower, c_map, sym_basis, sym_dim, GlComb, Idx, Mono, QnElement, MAXN};

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;
use smallvec::SmallVec;
use thiserror::Error;

use crate::polyring::linalg::{add_entry, Echelon, SparseVec};
use crate::polyring::Scalar;
use crate::webterm::{Gen, Morphism, Slice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QrepError {
    #[error("oracle too large: dimension {dim} exceeds cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("rank {n} out of range 1..={max}")]
    BadRank { n: usize, max: usize },
    #[error("morphisms do not share boundaries")]
    BoundaryMismatch,
}

/// Basis vector of `M ⊗ S^{λ1}(V) ⊗ …`: one monomial per factor.
pub type Key = SmallVec<[Mono; 6]>;
pub type Vector = SparseVec<Key>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub n: usize,
    /// Thicknesses of the auxiliary factors `S^m(V)` on the left; empty
    /// means the trivial module.
    pub mspec: Vec<u32>,
    pub cap: usize,
}

impl Oracle {
    pub fn new(n: usize, mspec: &[u32]) -> Result<Oracle, QrepError> {
        if n == 0 || n > MAXN {
            return Err(QrepError::BadRank { n, max: MAXN });
        }
        Ok(Oracle { n, mspec: mspec.to_vec(), cap: 20000 })
    }

    /// `M = V`.
    pub fn natural(n: usize) -> Result<Oracle, QrepError> {
        Oracle::new(n, &[1])
    }

    pub fn with_cap(mut self, cap: usize) -> Oracle {
        self.cap = cap;
        self
    }

    fn factors(&self, obj: &[u32]) -> Vec<u32> {
        let mut f = self.mspec.clone();
        f.extend_from_slice(obj);
        f
    }

    pub fn dim(&self, obj: &[u32]) -> usize {
        self.factors(obj).iter().map(|&a| sym_dim(a, self.n)).product()
    }

    fn check(&self, obj: &[u32]) -> Result<usize, QrepError> {
        let d = self.dim(obj);
        if d > self.cap {
            return Err(QrepError::TooLarge { dim: d, cap: self.cap });
        }
        Ok(d)
    }

    /// Basis of `M ⊗ S^obj(V)` in lexicographic order.
    pub fn basis(&self, obj: &[u32]) -> Vec<Key> {
        let mut out: Vec<Key> = vec![Key::new()];
        for a in self.factors(obj) {
            let b = sym_basis(a, self.n);
            out = out
                .into_iter()
                .flat_map(|k| {
                    b.iter().map(move |m| {
                        let mut k2 = k.clone();
                        k2.push(*m);
                        k2
                    })
                })
                .collect();
        }
        out
    }

    /// One generator placed at object strand `pos`, applied to a basis vector.
    pub fn apply_gen(&self, g: &Gen, pos: usize, key: &Key) -> Vec<(Key, Scalar)> {
        let p = self.mspec.len() + pos;
        let mut out = Vec::new();
        match *g {
            Gen::Merge(..) => {
                if let Some((odd, m)) = key[p].mul(&key[p + 1]) {
                    let mut k = Key::from_slice(&key[..p]);
                    k.push(m);
                    k.extend_from_slice(&key[p + 2..]);
                    out.push((k, Scalar::sign(odd)));
                }
            }
            Gen::Split(a, _) => {
                for (c, l, r) in key[p].split(a) {
                    let mut k = Key::from_slice(&key[..p]);
                    k.push(l);
                    k.push(r);
                    k.extend_from_slice(&key[p + 1..]);
                    out.push((k, Scalar::int(c)));
                }
            }
            Gen::Cross(..) => {
                let mut k = key.clone();
                k.swap(p, p + 1);
                out.push((k, Scalar::sign(key[p].is_odd() && key[p + 1].is_odd())));
            }
            Gen::WDot(_) => {
                let before = key[..p].iter().filter(|m| m.is_odd()).count() % 2 == 1;
                for (c, m) in act_on_sympower(&c_map(self.n), &key[p]) {
                    let mut k = key.clone();
                    k[p] = m;
                    out.push((k, if before { -c } else { c }));
                }
            }
            Gen::BDot(1) => {
                let mut acc: Vector = BTreeMap::new();
                self.omega_into(key, p, &mut acc);
                out.extend(acc);
            }
            Gen::BDot(a) => {
                // thick dot = (1/a!)·(thin split, a thin dots, thin merge)
                let mut v = BTreeMap::new();
                v.insert(key.clone(), Scalar::int(crate::combinat::factorial(a)).inv().expect("nonzero"));
                out.extend(self.apply_term(&balloon_slices(a, pos), v));
            }
        }
        out
    }

    /// `Ω` on `M ⊗ S^a(V)` with `M` the factors left of factor `p`.
    pub fn omega_op(&self, key: &Key, p: usize) -> Vector {
        let mut acc = BTreeMap::new();
        self.omega_into(key, p, &mut acc);
        acc
    }

    fn omega_into(&self, key: &Key, p: usize, acc: &mut Vector) {
        let l_odd = key[..p].iter().filter(|m| m.is_odd()).count() % 2 == 1;
        for odd in [false, true] {
            for i in 0..self.n {
                for j in 0..self.n {
                    let e = QnElement::E { odd, i, j }.gl();
                    let f = QnElement::F { odd, i: j, j: i }.gl();
                    let fv = act_on_sympower(&f, &key[p]);
                    if fv.is_empty() {
                        continue;
                    }
                    for (cl, lk) in act_derivation(&e, odd, &key[..p]) {
                        for (cf, m) in &fv {
                            let mut k = lk.clone();
                            k.push(*m);
                            k.extend_from_slice(&key[p + 1..]);
                            let mut c = &cl * cf;
                            if !odd || l_odd {
                                c = -c;
                            }
                            add_entry(acc, k, c);
                        }
                    }
                }
            }
        }
    }

    fn apply_term(&self, t: &[Slice], v: Vector) -> Vector {
        let mut cur = v;
        for s in t {
            let mut next: Vector = BTreeMap::new();
            for (k, c) in &cur {
                for (k2, c2) in self.apply_gen(&s.gen, s.pos, k) {
                    add_entry(&mut next, k2, c * &c2);
                }
            }
            cur = next;
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Image of one basis vector.
    pub fn apply(&self, f: &Morphism, key: &Key) -> Vector {
        self.images(f, std::slice::from_ref(key)).pop().expect("one column")
    }

    /// Images of the given basis vectors, computed one slice at a time so
    /// each intermediate basis vector is pushed through a generator once.
    pub fn images(&self, f: &Morphism, src: &[Key]) -> Vec<Vector> {
        let mut out: Vec<Vector> = vec![BTreeMap::new(); src.len()];
        for (t, c) in f.terms() {
            let (flat, scale) = flatten(t);
            let c = c * &scale;
            let mut cols: Vec<FxHashMap<Key, Scalar>> = src
                .iter()
                .map(|k| {
                    let mut v = FxHashMap::default();
                    v.insert(k.clone(), Scalar::int(1));
                    v
                })
                .collect();
            for s in &flat {
                let keys: FxHashSet<&Key> = cols.iter().flat_map(|v| v.keys()).collect();
                let keys: Vec<&Key> = keys.into_iter().collect();
                let imgs: FxHashMap<&Key, Vec<(Key, Scalar)>> = keys.par_iter().map(|k| (*k, self.apply_gen(&s.gen, s.pos, k))).collect();
                cols = cols
                    .par_iter()
                    .map(|v| {
                        let mut next: FxHashMap<Key, Scalar> = FxHashMap::default();
                        for (k, x) in v {
                            for (k2, y) in &imgs[k] {
                                let p = x * y;
                                match next.get_mut(k2) {
                                    Some(e) => *e += &p,
                                    None => {
                                        next.insert(k2.clone(), p);
                                    }
                                }
                            }
                        }
                        next.retain(|_, c| !c.is_zero());
                        next
                    })
                    .collect();
            }
            for (o, v) in out.iter_mut().zip(cols) {
                for (k, x) in v {
                    add_entry(o, k, &x * &c);
                }
            }
        }
        out
    }

    pub fn eval(&self, f: &Morphism) -> Result<LinearMap, QrepError> {
        self.check(f.src())?;
        self.check(f.tgt())?;
        let src = self.basis(f.src());
        let cols = self.images(f, &src);
        Ok(LinearMap { src, tgt: self.basis(f.tgt()), cols })
    }

    pub fn is_zero(&self, f: &Morphism) -> Result<bool, QrepError> {
        self.check(f.src())?;
        self.check(f.tgt())?;
        if f.is_zero() {
            return Ok(true);
        }
        let src = self.basis(f.src());
        Ok(self.images(f, &src).iter().all(|v| v.is_empty()))
    }

    pub fn equal(&self, f: &Morphism, g: &Morphism) -> Result<bool, QrepError> {
        let d = f.try_add(&g.scale(&Scalar::int(-1))).map_err(|_| QrepError::BoundaryMismatch)?;
        self.is_zero(&d)
    }

    /// Exact rank of the span of the evaluated morphisms. Columns are
    /// added in growing batches; full rank on a subset already decides.
    pub fn rank_of(&self, fs: &[Morphism]) -> Result<usize, QrepError> {
        let Some(f0) = fs.first() else { return Ok(0) };
        if fs.iter().any(|f| f.src() != f0.src() || f.tgt() != f0.tgt()) {
            return Err(QrepError::BoundaryMismatch);
        }
        self.check(f0.src())?;
        self.check(f0.tgt())?;
        let src = self.basis(f0.src());
        let mut vecs: Vec<SparseVec<(usize, Key)>> = vec![BTreeMap::new(); fs.len()];
        let mut done = 0usize;
        let mut batch = 16usize;
        let mut r = 0;
        while done < src.len() {
            let hi = (done + batch).min(src.len());
            for (v, f) in vecs.iter_mut().zip(fs) {
                for (off, img) in self.images(f, &src[done..hi]).into_iter().enumerate() {
                    for (k, c) in img {
                        v.insert((done + off, k), c);
                    }
                }
            }
            done = hi;
            batch *= 2;
            let mut e = Echelon::new();
            for v in &vecs {
                e.insert(v.clone());
            }
            r = e.rank();
            if r == fs.len() {
                break;
            }
        }
        Ok(r)
    }
}

/// Replaces each thick black dot by its thin balloon; returns the overall
/// `Π 1/a!` factor.
fn flatten(t: &[Slice]) -> (Vec<Slice>, Scalar) {
    let mut out = Vec::with_capacity(t.len());
    let mut den = 1i64;
    for s in t {
        match s.gen {
            Gen::BDot(a) if a >= 2 => {
                den *= crate::combinat::factorial(a);
                out.extend(balloon_slices(a, s.pos));
            }
            _ => out.push(*s),
        }
    }
    (out, Scalar::int(den).inv().expect("nonzero"))
}

fn balloon_slices(a: u32, pos: usize) -> Vec<Slice> {
    let mut t = Vec::new();
    for k in 0..(a - 1) as usize {
        t.push(Slice { pos: pos + k, gen: Gen::Split(1, a - 1 - k as u32) });
    }
    for k in 0..a as usize {
        t.push(Slice { pos: pos + k, gen: Gen::BDot(1) });
    }
    for k in (0..(a - 1) as usize).rev() {
        t.push(Slice { pos: pos + k, gen: Gen::Merge(1, a - 1 - k as u32) });
    }
    t
}

/// Derivation action on a tensor of factors, with Koszul signs.
pub fn act_derivation(x: &GlComb, odd: bool, key: &[Mono]) -> Vec<(Scalar, Key)> {
    let mut out = Vec::new();
    let mut passed_odd = false;
    for (t, m) in key.iter().enumerate() {
        for (c, m2) in act_on_sympower(x, m) {
            let mut k = Key::from_slice(key);
            k[t] = m2;
            out.push((if odd && passed_odd { -c } else { c }, k));
        }
        passed_odd ^= m.is_odd();
    }
    out
}

/// Evaluated morphism: one sparse column per source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub src: Vec<Key>,
    pub tgt: Vec<Key>,
    pub cols: Vec<Vector>,
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    /// `[row, col, "re", "im"]`
    entries: Vec<(usize, usize, String, String)>,
}

impl LinearMap {
    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.tgt.len(), self.src.len())
    }

    /// `Some(parity)` when every nonzero entry moves parity the same way.
    pub fn parity(&self) -> Option<bool> {
        let mut p = None;
        for (s, col) in self.src.iter().zip(&self.cols) {
            let ps = s.iter().filter(|m| m.is_odd()).count() % 2 == 1;
            for k in col.keys() {
                let pt = k.iter().filter(|m| m.is_odd()).count() % 2 == 1;
                let q = ps != pt;
                if *p.get_or_insert(q) != q {
                    return None;
                }
            }
        }
        p
    }

    /// Exact entries as JSON, fractions as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let idx: BTreeMap<&Key, usize> = self.tgt.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut entries = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (k, c) in col {
                if !c.is_zero() {
                    entries.push((idx[k], j, c.re.to_string(), c.im.to_string()));
                }
            }
        }
        entries.sort();
        serde_json::to_value(MatrixJson { rows: self.tgt.len(), cols: self.src.len(), entries }).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webterm::build::*;
    use smallvec::smallvec;

    fn v(i: usize) -> Mono {
        Mono::letter(Idx::Even(i))
    }
    fn vb(i: usize) -> Mono {
        Mono::letter(Idx::Odd(i))
    }

    #[test]
    fn split_examples() {
        let o = Oracle::new(2, &[]).unwrap();
        let v12 = v(0).mul(&v(1)).unwrap().1;
        let img = o.apply(&split(1, 1), &smallvec![v12]);
        assert_eq!(img.len(), 2);
        assert!(img.values().all(|c| *c == Scalar::int(1)));
        let b12 = vb(0).mul(&vb(1)).unwrap().1;
        let img = o.apply(&split(1, 1), &smallvec![b12]);
        assert_eq!(img.get(&smallvec![vb(0), vb(1)]), Some(&Scalar::int(1)));
        assert_eq!(img.get(&smallvec![vb(1), vb(0)]), Some(&Scalar::int(-1)));
    }

    #[test]
    fn white_dot_on_v1() {
        let o = Oracle::new(1, &[]).unwrap();
        let img = o.apply(&wdot(1), &smallvec![v(0)]);
        assert_eq!(img.get(&smallvec![vb(0)]), Some(&Scalar::i()));
    }

    #[test]
    fn omega_example() {
        let o = Oracle::natural(1).unwrap();
        let img = o.apply(&bdot(1), &smallvec![v(0), v(0)]);
        assert_eq!(img.len(), 2);
        assert_eq!(img.get(&smallvec![v(0), v(0)]), Some(&Scalar::int(-1)));
        assert_eq!(img.get(&smallvec![vb(0), vb(0)]), Some(&Scalar::int(1)));
        let triv = Oracle::new(1, &[]).unwrap();
        assert!(triv.is_zero(&bdot(1)).unwrap());
    }

    #[test]
    fn cap_guard() {
        let o = Oracle::natural(4).unwrap().with_cap(100);
        assert!(matches!(o.eval(&id(2)), Err(QrepError::TooLarge { .. })));
    }

    #[test]
    fn rank_basics() {
        let o = Oracle::natural(2).unwrap();
        assert_eq!(o.rank_of(&[]).unwrap(), 0);
        assert_eq!(o.rank_of(&[bdot(1), bdot(1)]).unwrap(), 1);
        assert_eq!(o.rank_of(&[id(1), bdot(1)]).unwrap(), 2);
    }
}
