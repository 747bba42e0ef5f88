//! The natural module `V = k^{n|n}`, its supersymmetric powers and the
//! derivation action of `gl(n|n)` on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyring::Scalar;

pub const MAXN: usize = 8;

/// Basis index of `V`: `v_i` (even) or `v_ī` (odd), 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Idx {
    Even(usize),
    Odd(usize),
}

impl Idx {
    pub fn is_odd(self) -> bool {
        matches!(self, Idx::Odd(_))
    }

    pub fn bar(self) -> Idx {
        match self {
            Idx::Even(i) => Idx::Odd(i),
            Idx::Odd(i) => Idx::Even(i),
        }
    }
}

/// Monomial of `S(V)`: exponents of the even basis vectors and the set of
/// odd ones, normal ordered as evens ascending then odds ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono {
    pub ev: [u8; MAXN],
    pub od: u8,
}

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    pub fn letter(x: Idx) -> Mono {
        let mut m = Mono::default();
        match x {
            Idx::Even(i) => m.ev[i] = 1,
            Idx::Odd(i) => m.od = 1 << i,
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.ev.iter().map(|&e| e as u32).sum::<u32>() + self.od.count_ones()
    }

    pub fn is_odd(&self) -> bool {
        self.od.count_ones() % 2 == 1
    }

    /// `e_{x,y}` applied as a derivation: `(coefficient, result)`.
    pub fn act_gl(&self, x: Idx, y: Idx) -> Option<(i64, Mono)> {
        let x_letter = Mono::letter(x);
        match y {
            Idx::Even(j) => {
                if self.ev[j] == 0 {
                    return None;
                }
                // even letters sit before every odd one
                let mut rest = *self;
                rest.ev[j] -= 1;
                let (odd, r) = x_letter.mul(&rest)?;
                let k = self.ev[j] as i64;
                Some((if odd { -k } else { k }, r))
            }
            Idx::Odd(j) => {
                if self.od & (1 << j) == 0 {
                    return None;
                }
                let below = self.od & (((1u16 << j) - 1) as u8);
                let mut pre = *self;
                pre.od = below;
                let suf = Mono { ev: [0; MAXN], od: self.od & !below & !(1 << j) };
                let mut sign = x.is_odd() != y.is_odd() && below.count_ones() % 2 == 1;
                let (o1, r) = pre.mul(&x_letter)?;
                let (o2, r) = r.mul(&suf)?;
                sign ^= o1 ^ o2;
                Some((if sign { -1 } else { 1 }, r))
            }
        }
    }

    /// Product in `S(V)`; zero if an odd letter repeats. The flag is the
    /// sign of reordering the odd letters.
    pub fn mul(&self, o: &Mono) -> Option<(bool, Mono)> {
        if self.od & o.od != 0 {
            return None;
        }
        let mut m = *self;
        for i in 0..MAXN {
            m.ev[i] += o.ev[i];
        }
        m.od |= o.od;
        let inv: u32 = (0..MAXN).filter(|&j| o.od & (1 << j) != 0).map(|j| (self.od as u16 >> (j + 1)).count_ones()).sum();
        Some((inv % 2 == 1, m))
    }

    /// Coproduct component landing in `S^a ⊗ S^{deg−a}`.
    pub fn split(&self, a: u32) -> Vec<(i64, Mono, Mono)> {
        let mut out = Vec::new();
        if a > self.degree() {
            return out;
        }
        let odds: Vec<usize> = (0..MAXN).filter(|&j| self.od & (1 << j) != 0).collect();
        for mask in 0u32..(1 << odds.len()) {
            let k = mask.count_ones();
            if k > a {
                continue;
            }
            let s: u8 = odds.iter().enumerate().filter(|(t, _)| mask & (1 << t) != 0).map(|(_, &j)| 1u8 << j).sum();
            let rest = self.od & !s;
            // odd letters staying right pass the later ones moving left
            let inv: u32 = (0..MAXN).filter(|&x| rest & (1 << x) != 0).map(|x| (s as u16 >> (x + 1)).count_ones()).sum();
            let sign = if inv % 2 == 1 { -1 } else { 1 };
            let mut left = [0u8; MAXN];
            self.split_evens(0, a - k, sign, &mut left, s, rest, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn split_evens(&self, i: usize, need: u32, coef: i64, left: &mut [u8; MAXN], s: u8, rest: u8, out: &mut Vec<(i64, Mono, Mono)>) {
        if i == MAXN {
            if need == 0 {
                let mut r = Mono { ev: self.ev, od: rest };
                for t in 0..MAXN {
                    r.ev[t] -= left[t];
                }
                out.push((coef, Mono { ev: *left, od: s }, r));
            }
            return;
        }
        for j in 0..=(self.ev[i] as u32).min(need) {
            left[i] = j as u8;
            let c = coef * crate::combinat::binomial(self.ev[i] as i64, j as i64);
            self.split_evens(i + 1, need - j, c, left, s, rest, out);
        }
        left[i] = 0;
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.ev.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("v{}", i + 1)),
                _ => parts.push(format!("v{}^{}", i + 1, e)),
            }
        }
        for i in 0..MAXN {
            if self.od & (1 << i) != 0 {
                parts.push(format!("v{}b", i + 1));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// All monomials of `S^a(V)` for `V = k^{n|n}`, in a fixed order.
pub fn sym_basis(a: u32, n: usize) -> Vec<Mono> {
    let mut out = Vec::new();
    for od in 0u16..(1 << n) {
        let k = od.count_ones();
        if k > a {
            continue;
        }
        let mut ev = [0u8; MAXN];
        fn rec(i: usize, n: usize, left: u32, ev: &mut [u8; MAXN], od: u8, out: &mut Vec<Mono>) {
            if i + 1 == n {
                ev[i] = left as u8;
                out.push(Mono { ev: *ev, od });
                ev[i] = 0;
                return;
            }
            for e in 0..=left {
                ev[i] = e as u8;
                rec(i + 1, n, left - e, ev, od, out);
            }
            ev[i] = 0;
        }
        if n == 0 {
            if a == 0 {
                out.push(Mono::default());
            }
            continue;
        }
        rec(0, n, a - k, &mut ev, od as u8, &mut out);
    }
    out.sort();
    out
}

pub fn sym_dim(a: u32, n: usize) -> usize {
    (0..=n.min(a as usize))
        .map(|j| {
            let r = (a as usize - j) as i64;
            (crate::combinat::binomial(n as i64, j as i64) * crate::combinat::binomial(n as i64 + r - 1, r)) as usize
        })
        .sum()
}

/// Elements `e^ε_{ij}` and `f^ε_{ij}` of `q_n`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QnElement {
    E { odd: bool, i: usize, j: usize },
    F { odd: bool, i: usize, j: usize },
}

pub type GlComb = Vec<(Scalar, Idx, Idx)>;

impl QnElement {
    pub fn is_odd(&self) -> bool {
        match *self {
            QnElement::E { odd, .. } | QnElement::F { odd, .. } => odd,
        }
    }

    /// Expansion in the matrix units `e_{x,y}` of `gl(n|n)`.
    pub fn gl(&self) -> GlComb {
        let one = Scalar::int(1);
        let m1 = Scalar::int(-1);
        match *self {
            QnElement::E { odd: false, i, j } => vec![(one.clone(), Idx::Even(i), Idx::Even(j)), (one, Idx::Odd(i), Idx::Odd(j))],
            QnElement::E { odd: true, i, j } => vec![(one.clone(), Idx::Odd(i), Idx::Even(j)), (one, Idx::Even(i), Idx::Odd(j))],
            QnElement::F { odd: false, i, j } => vec![(one, Idx::Even(i), Idx::Even(j)), (m1, Idx::Odd(i), Idx::Odd(j))],
            QnElement::F { odd: true, i, j } => vec![(one, Idx::Odd(i), Idx::Even(j)), (m1, Idx::Even(i), Idx::Odd(j))],
        }
    }
}

/// The odd map `c(v_i) = √−1·v_ī`, `c(v_ī) = −√−1·v_i`.
pub fn c_map(n: usize) -> GlComb {
    let mut out = Vec::new();
    for i in 0..n {
        out.push((Scalar::i(), Idx::Odd(i), Idx::Even(i)));
        out.push((-Scalar::i(), Idx::Even(i), Idx::Odd(i)));
    }
    out
}

/// Derivation action of a homogeneous element of `gl(n|n)` on one monomial.
pub fn act_on_sympower(x: &GlComb, m: &Mono) -> Vec<(Scalar, Mono)> {
    let mut out: Vec<(Scalar, Mono)> = Vec::new();
    for (c, a, b) in x {
        if let Some((k, r)) = m.act_gl(*a, *b) {
            let v = c * &Scalar::int(k);
            match out.iter_mut().find(|(_, mm)| *mm == r) {
                Some(e) => e.0 += &v,
                None => out.push((v, r)),
            }
        }
    }
    out.retain(|(c, _)| !num_traits::Zero::is_zero(c));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ev: &[u8], od: u8) -> Mono {
        let mut m = Mono::default();
        m.ev[..ev.len()].copy_from_slice(ev);
        m.od = od;
        m
    }

    #[test]
    fn basis_dims() {
        for n in 1..=4 {
            for a in 0..=4 {
                assert_eq!(sym_basis(a, n).len(), sym_dim(a, n), "n={} a={}", n, a);
            }
        }
        assert_eq!(sym_dim(2, 4), 32);
        assert_eq!(sym_dim(4, 4), 192);
    }

    #[test]
    fn e00_on_v1v2() {
        let m = mono(&[1, 1], 0);
        let e = QnElement::E { odd: false, i: 0, j: 0 }.gl();
        assert_eq!(act_on_sympower(&e, &m), vec![(Scalar::int(1), m)]);
    }

    #[test]
    fn f_odd_on_v1() {
        let m = mono(&[1], 0);
        let f = QnElement::F { odd: true, i: 0, j: 0 }.gl();
        assert_eq!(act_on_sympower(&f, &m), vec![(Scalar::int(1), mono(&[], 1))]);
        assert!(act_on_sympower(&f, &Mono::one()).is_empty());
    }

    #[test]
    fn split_signs() {
        let m = mono(&[], 0b11);
        let mut got = m.split(1);
        got.sort_by_key(|x| x.1);
        assert_eq!(got, vec![(1, mono(&[], 1), mono(&[], 2)), (-1, mono(&[], 2), mono(&[], 1))]);
        let m = mono(&[1, 1], 0);
        assert_eq!(m.split(1).len(), 2);
        assert!(m.split(1).iter().all(|x| x.0 == 1));
    }

    /// Odd letters as an explicit word, for checking `act_gl` signs by brute force.
    fn word_act(word: &[Idx], x: Idx, y: Idx) -> Vec<(i64, Vec<Idx>)> {
        let mut out = Vec::new();
        let mut passed = 0usize;
        for (t, &w) in word.iter().enumerate() {
            if w == y {
                let sgn = if x.is_odd() != y.is_odd() && passed % 2 == 1 { -1 } else { 1 };
                let mut nw = word.to_vec();
                nw[t] = x;
                out.push((sgn, nw));
            }
            if w.is_odd() {
                passed += 1;
            }
        }
        out
    }

    fn normalize(word: &[Idx]) -> Option<(i64, Mono)> {
        let mut m = Mono::one();
        let mut s = 1;
        for &w in word {
            let (odd, r) = m.mul(&Mono::letter(w))?;
            if odd {
                s = -s;
            }
            m = r;
        }
        Some((s, m))
    }

    #[test]
    fn act_matches_word_model() {
        let n = 3;
        let all: Vec<Idx> = (0..n).flat_map(|i| [Idx::Even(i), Idx::Odd(i)]).collect();
        for a in 0..=3 {
            for m in sym_basis(a, n) {
                // canonical word of m
                let mut word = Vec::new();
                for i in 0..n {
                    for _ in 0..m.ev[i] {
                        word.push(Idx::Even(i));
                    }
                }
                for i in 0..n {
                    if m.od & (1 << i) != 0 {
                        word.push(Idx::Odd(i));
                    }
                }
                for &x in &all {
                    for &y in &all {
                        let mut exp: std::collections::BTreeMap<Mono, i64> = Default::default();
                        for (s, w) in word_act(&word, x, y) {
                            if let Some((s2, r)) = normalize(&w) {
                                *exp.entry(r).or_default() += s * s2;
                            }
                        }
                        exp.retain(|_, v| *v != 0);
                        let got: std::collections::BTreeMap<Mono, i64> = m.act_gl(x, y).into_iter().map(|(c, r)| (r, c)).collect();
                        assert_eq!(got, exp, "{} by e({:?},{:?})", m, x, y);
                    }
                }
            }
        }
    }
}
