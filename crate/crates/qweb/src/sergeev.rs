//! The affine Sergeev superalgebra `A_n` on generators `s_i`, `x_i`, `c_i`,
//! with PBW straightening into the basis `ω c^a x^b`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::normalform::{ElementaryCFD, NormalMorphism};
use crate::polyring::linalg::add_entry;
use crate::polyring::Scalar;
use crate::webterm::{Gen, Morphism, Slice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SergeevError {
    #[error("letter {letter} out of range for n={n}")]
    IndexRange { letter: String, n: usize },
    #[error("bad token {token:?} at column {col}")]
    BadToken { token: String, col: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("n={0} is not supported (1..=16)")]
    BadRank(usize),
    #[error("morphism is not an endomorphism of a thin object: {0:?} -> {1:?}")]
    NotThin(Vec<u32>, Vec<u32>),
}

/// Generator letter, 1-based as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    S(usize),
    X(usize),
    C(usize),
}

impl Letter {
    fn check(&self, n: usize) -> Result<(), SergeevError> {
        let ok = match *self {
            Letter::S(i) => i >= 1 && i < n,
            Letter::X(i) | Letter::C(i) => i >= 1 && i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(SergeevError::IndexRange { letter: self.to_string(), n })
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::S(i) => write!(f, "s{}", i),
            Letter::X(i) => write!(f, "x{}", i),
            Letter::C(i) => write!(f, "c{}", i),
        }
    }
}

/// Parses a word such as `x1 s1 c2` or `x2^3*s1`.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<Letter>, SergeevError> {
    let mut out = Vec::new();
    let mut col = 0usize;
    for raw in text.split(|ch: char| ch.is_whitespace() || ch == '*' || ch == '·') {
        let here = col + 1;
        col += raw.chars().count() + 1;
        if raw.is_empty() {
            continue;
        }
        let bad = || SergeevError::BadToken { token: raw.to_string(), col: here };
        let mut chars = raw.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest: String = chars.collect();
        let (idx, pow) = match rest.split_once('^') {
            Some((a, b)) => (a, b.parse::<usize>().map_err(|_| bad())?),
            None => (rest.as_str(), 1),
        };
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let i: usize = idx.parse().map_err(|_| bad())?;
        let l = match kind {
            's' => Letter::S(i),
            'x' => Letter::X(i),
            'c' => Letter::C(i),
            _ => return Err(bad()),
        };
        l.check(n)?;
        for _ in 0..pow {
            out.push(l);
        }
    }
    Ok(out)
}

/// PBW monomial `ω c^a x^b`: `w` in one-line notation (0-based), `c` a bit
/// mask, `x` the exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pbw {
    pub w: Vec<u8>,
    pub c: u16,
    pub x: Vec<u32>,
}

impl Pbw {
    pub fn one(n: usize) -> Pbw {
        Pbw { w: (0..n as u8).collect(), c: 0, x: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn is_odd(&self) -> bool {
        self.c.count_ones() % 2 == 1
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn c_vec(&self) -> Vec<u8> {
        (0..self.n()).map(|i| ((self.c >> i) & 1) as u8).collect()
    }

    /// The monomial as a word: a reduced word for `ω`, then `c`'s, then `x`'s.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = reduced_word(&self.w).into_iter().map(|i| Letter::S(i + 1)).collect();
        for i in 0..self.n() {
            if self.c & (1 << i) != 0 {
                out.push(Letter::C(i + 1));
            }
        }
        for (i, &e) in self.x.iter().enumerate() {
            for _ in 0..e {
                out.push(Letter::X(i + 1));
            }
        }
        out
    }

    fn word_text(&self) -> String {
        let mut parts: Vec<String> = reduced_word(&self.w).into_iter().map(|i| format!("s{}", i + 1)).collect();
        for i in 0..self.n() {
            if self.c & (1 << i) != 0 {
                parts.push(format!("c{}", i + 1));
            }
        }
        for (i, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.w.iter().map(|v| (v + 1).to_string()).collect();
        let c: Vec<String> = self.c_vec().iter().map(|v| v.to_string()).collect();
        let x: Vec<String> = self.x.iter().map(|v| v.to_string()).collect();
        write!(f, "w=[{}] c=({}) x=({})", w.join(","), c.join(","), x.join(","))
    }
}

/// Reduced word `[i1, …, ik]` (0-based) with `w = s_{i1} ⋯ s_{ik}`.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// `c^a · c^b` as (sign, mask).
fn c_mul(a: u16, b: u16) -> (bool, u16) {
    let mut cur = a;
    let mut odd = false;
    for j in 0..16 {
        if b & (1 << j) != 0 {
            if (cur >> (j + 1)).count_ones() % 2 == 1 {
                odd = !odd;
            }
            cur ^= 1 << j;
        }
    }
    (odd, cur)
}

/// `x^b · s_i = Σ coef · [s_i] c^m x^y`.
fn x_times_s(x: &[u32], i: usize) -> Vec<(i64, bool, u16, Vec<u32>)> {
    let Some(k) = (0..x.len()).rev().find(|&k| x[k] > 0) else {
        return vec![(1, true, 0, x.to_vec())];
    };
    let mut rest = x.to_vec();
    rest[k] -= 1;
    let kk = if k == i {
        i + 1
    } else if k == i + 1 {
        i
    } else {
        k
    };
    let mut out: Vec<(i64, bool, u16, Vec<u32>)> = x_times_s(&rest, i)
        .into_iter()
        .map(|(c, s, m, mut y)| {
            y[kk] += 1;
            (c, s, m, y)
        })
        .collect();
    if k == i || k == i + 1 {
        // x_i s_i = s_i x_{i+1} + 1 − c_i c_{i+1}
        // x_{i+1} s_i = s_i x_i − 1 − c_i c_{i+1}
        let one = if k == i { 1 } else { -1 };
        let flip = (rest[i] + rest[i + 1]) % 2 == 1;
        out.push((one, false, 0, rest.clone()));
        out.push((if flip { 1 } else { -1 }, false, (1 << i) | (1 << (i + 1)), rest));
    }
    out
}

/// Element of `A_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SergeevElement {
    pub n: usize,
    pub terms: BTreeMap<Pbw, Scalar>,
}

impl SergeevElement {
    pub fn zero(n: usize) -> SergeevElement {
        SergeevElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> SergeevElement {
        SergeevElement::monomial(Pbw::one(n), Scalar::one())
    }

    pub fn monomial(m: Pbw, c: Scalar) -> SergeevElement {
        let mut e = SergeevElement::zero(m.n());
        add_entry(&mut e.terms, m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &SergeevElement, c: &Scalar) {
        for (m, x) in &o.terms {
            add_entry(&mut self.terms, m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> SergeevElement {
        let mut out = SergeevElement::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// `self · letter`.
    pub fn mul_letter(&self, l: Letter) -> SergeevElement {
        let mut out = SergeevElement::zero(self.n);
        for (m, c) in &self.terms {
            for (m2, k) in mono_letter(m, l) {
                add_entry(&mut out.terms, m2, c * &Scalar::int(k));
            }
        }
        out
    }

    pub fn mul_word(&self, w: &[Letter]) -> SergeevElement {
        w.iter().fold(self.clone(), |acc, &l| acc.mul_letter(l))
    }

    pub fn multiply(&self, o: &SergeevElement) -> Result<SergeevElement, SergeevError> {
        if self.n != o.n {
            return Err(SergeevError::RankMismatch(self.n, o.n));
        }
        let mut out = SergeevElement::zero(self.n);
        for (m, c) in &o.terms {
            out.add_scaled(&self.mul_word(&m.letters()), c);
        }
        Ok(out)
    }

    /// Largest x-degree present.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Pbw::x_degree).max()
    }

    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(Pbw::is_odd);
        let p = it.next()?;
        if it.all(|q| q == p) {
            Some(p)
        } else {
            None
        }
    }
}

fn mono_letter(m: &Pbw, l: Letter) -> Vec<(Pbw, i64)> {
    match l {
        Letter::X(j) => {
            let mut r = m.clone();
            r.x[j - 1] += 1;
            vec![(r, 1)]
        }
        Letter::C(j) => {
            let j = j - 1;
            let mut odd = m.x[j] % 2 == 1;
            let (o2, c) = c_mul(m.c, 1 << j);
            odd ^= o2;
            let mut r = m.clone();
            r.c = c;
            vec![(r, if odd { -1 } else { 1 })]
        }
        Letter::S(i) => {
            let i = i - 1;
            let mut out = Vec::new();
            for (k, has_s, cm, y) in x_times_s(&m.x, i) {
                let mut sign = k;
                let mut cc = m.c;
                let mut w = m.w.clone();
                if has_s {
                    // c^a s_i = s_i c^{s_i(a)}
                    let bi = (cc >> i) & 1;
                    let bj = (cc >> (i + 1)) & 1;
                    if bi == 1 && bj == 1 {
                        sign = -sign;
                    }
                    cc &= !((1 << i) | (1 << (i + 1)));
                    cc |= (bi << (i + 1)) | (bj << i);
                    w.swap(i, i + 1);
                }
                let (odd, c2) = c_mul(cc, cm);
                if odd {
                    sign = -sign;
                }
                out.push((Pbw { w, c: c2, x: y }, sign));
            }
            out
        }
    }
}

/// PBW normal form of a word.
pub fn straighten(n: usize, w: &[Letter]) -> Result<SergeevElement, SergeevError> {
    if n == 0 || n > 16 {
        return Err(SergeevError::BadRank(n));
    }
    for l in w {
        l.check(n)?;
    }
    Ok(SergeevElement::one(n).mul_word(w))
}

/// `straighten(u) · straighten(v)`.
pub fn multiply_words(n: usize, u: &[Letter], v: &[Letter]) -> Result<SergeevElement, SergeevError> {
    straighten(n, u)?.multiply(&straighten(n, v)?)
}

fn coef_text(c: &Scalar) -> (bool, String) {
    if c.is_real() {
        let neg = c.re.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        (neg, mag.to_string())
    } else {
        (false, format!("({})", c))
    }
}

impl SergeevElement {
    fn display_order(&self) -> Vec<(&Pbw, &Scalar)> {
        let mut v: Vec<(&Pbw, &Scalar)> = self.terms.iter().collect();
        let id: Vec<u8> = (0..self.n as u8).collect();
        v.sort_by(|a, b| {
            let ka = (a.0.w == id, std::cmp::Reverse(a.0.x_degree()), a.0.c.count_ones(), a.0);
            let kb = (b.0.w == id, std::cmp::Reverse(b.0.x_degree()), b.0.c.count_ones(), b.0);
            ka.cmp(&kb)
        });
        v
    }
}

impl fmt::Display for SergeevElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_order().into_iter().enumerate() {
            let (neg, mag) = coef_text(c);
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let word = m.word_text();
            if mag == "1" {
                write!(f, "{}", word)?;
            } else if word == "1" {
                write!(f, "{}", mag)?;
            } else {
                write!(f, "{} {}", mag, word)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SergeevElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn at(n: usize, pos: usize, g: Gen) -> Morphism {
    Morphism::from_term(&vec![1; n], &[Slice { pos, gen: g }], Scalar::one()).expect("thin slice")
}

/// Thin diagram of a letter: `x_j` a black dot, `c_j` a white dot, `s_i` a crossing.
pub fn phi(l: Letter, n: usize) -> Result<Morphism, SergeevError> {
    l.check(n)?;
    Ok(match l {
        Letter::X(j) => at(n, j - 1, Gen::BDot(1)),
        Letter::C(j) => at(n, j - 1, Gen::WDot(1)),
        Letter::S(i) => at(n, i - 1, Gen::Cross(1, 1)),
    })
}

/// `phi(l1)∘phi(l2)∘…`.
pub fn phi_word(w: &[Letter], n: usize) -> Result<Morphism, SergeevError> {
    let mut acc = Morphism::id(&vec![1; n]);
    for &l in w.iter().rev() {
        acc = phi(l, n)?.compose(&acc).expect("thin boundaries");
    }
    Ok(acc)
}

/// Diagram of a whole element, monomial by monomial.
pub fn phi_element(e: &SergeevElement) -> Result<Morphism, SergeevError> {
    let obj = vec![1; e.n];
    let mut out = Morphism::zero(&obj, &obj);
    for (m, c) in &e.terms {
        out = out.try_add(&phi_word(&m.letters(), e.n)?.scale(c)).expect("thin boundaries");
    }
    Ok(out)
}

/// Sign relating a thin basis diagram to its PBW monomial. The diagram
/// stacks leg packets with the leftmost lowest, so `k` white dots appear in
/// descending order and sort with `(−1)^{k(k−1)/2}`.
pub fn packet_sign(white_dots: usize) -> bool {
    (white_dots * white_dots.saturating_sub(1) / 2) % 2 == 1
}

/// Thin basis element as a PBW monomial and sign.
pub fn decode_cfd(e: &ElementaryCFD) -> Result<(Pbw, bool), SergeevError> {
    let n = e.source.len();
    if e.source.iter().chain(&e.target).any(|&a| a != 1) || e.target.len() != n {
        return Err(SergeevError::NotThin(e.target.clone(), e.source.clone()));
    }
    let mut m = Pbw::one(n);
    for d in &e.decor {
        m.w[d.col] = d.row as u8;
        if !d.nu.is_empty() {
            m.c |= 1 << d.col;
        }
        m.x[d.col] = d.eta.len() as u32;
    }
    let k = m.c.count_ones() as usize;
    Ok((m, packet_sign(k)))
}

/// Inverse of the thin embedding on `End(1^n)`.
pub fn decode(nm: &NormalMorphism) -> Result<SergeevElement, SergeevError> {
    let n = nm.source.len();
    if nm.source.iter().chain(&nm.target).any(|&a| a != 1) || nm.target.len() != n {
        return Err(SergeevError::NotThin(nm.target.clone(), nm.source.clone()));
    }
    let mut out = SergeevElement::zero(n);
    for (e, k) in &nm.terms {
        let (m, odd) = decode_cfd(e)?;
        add_entry(&mut out.terms, m, if odd { -k.clone() } else { k.clone() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: usize, s: &str) -> SergeevElement {
        straighten(n, &parse_word(s, n).unwrap()).unwrap()
    }

    #[test]
    fn sx_relation() {
        assert_eq!(st(2, "x1 s1").to_string(), "s1 x2 + 1 - c1 c2");
        assert_eq!(st(2, "s1 x1").to_string(), "s1 x1");
    }

    #[test]
    fn clifford() {
        assert_eq!(st(2, "c1 c1").to_string(), "1");
        assert_eq!(st(2, "x1 c1").to_string(), "-c1 x1");
        assert_eq!(st(2, "c2 c1").to_string(), "-c1 c2");
        assert_eq!(st(2, "s1 s1").to_string(), "1");
        assert_eq!(st(2, "s1 c1"), st(2, "c2 s1"));
    }

    #[test]
    fn commuting_x() {
        let a = st(3, "x1 x2");
        let b = st(3, "x2");
        assert_eq!(a.multiply(&b).unwrap().to_string(), "x1 x2^2");
    }

    #[test]
    fn reduced_words() {
        assert_eq!(reduced_word(&[1, 0]), vec![0]);
        assert_eq!(reduced_word(&[2, 1, 0]).len(), 3);
        let w = [2u8, 0, 1];
        let e = straighten(3, &reduced_word(&w).iter().map(|&i| Letter::S(i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(e.terms.keys().next().unwrap().w, w.to_vec());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_word("s2", 2).is_err());
        assert!(parse_word("y1", 2).is_err());
        assert!(matches!(parse_word("x1 q", 2), Err(SergeevError::BadToken { col: 4, .. })));
        assert_eq!(parse_word("x2^2*c1", 2).unwrap(), vec![Letter::X(2), Letter::X(2), Letter::C(1)]);
    }

    #[test]
    fn pbw_text() {
        let m = Pbw { w: vec![1, 0], c: 1, x: vec![0, 3] };
        assert_eq!(m.to_string(), "w=[2,1] c=(1,0) x=(0,3)");
    }

    #[test]
    fn decode_matches_diagram_word() {
        use crate::normalform::{cfd_basis, thin_explode};
        for b in cfd_basis(&[1, 1, 1], &[1, 1, 1], 2) {
            let (m, odd) = decode_cfd(&b).unwrap();
            let want = SergeevElement::monomial(m, Scalar::sign(odd));
            assert_eq!(thin_explode(&b.embed().unwrap()).unwrap(), want, "{}", b);
        }
    }

    #[test]
    fn roundtrip_example() {
        use crate::normalform::reduce;
        let w = parse_word("x1 s1", 2).unwrap();
        let nm = reduce(&phi_word(&w, 2).unwrap()).unwrap();
        assert_eq!(decode(&nm).unwrap(), straighten(2, &w).unwrap());
        let nm = reduce(&phi_word(&parse_word("s1 s1", 2).unwrap(), 2).unwrap()).unwrap();
        assert_eq!(decode(&nm).unwrap(), SergeevElement::one(2));
    }
}
