//! Relation library, instantiated over all thicknesses up to a bound.

use super::build::*;
use super::dots::{omega, omega_circ, thin_merge, thin_split};
use super::{Gen, Morphism, Slice, WebError};
use crate::combinat::{binomial, factorial};
use crate::polyring::Scalar;

pub const SUITES: [&str; 6] = ["web-basic", "qweb-white", "qweb-affine", "derived-exact", "char0-qweb", "char0-affine"];

#[derive(Clone, Debug)]
pub struct Relation {
    pub suite: &'static str,
    pub name: String,
    pub lhs: Morphism,
    pub rhs: Morphism,
}

impl Relation {
    pub fn difference(&self) -> Morphism {
        &self.lhs - &self.rhs
    }

    pub fn flipped(&self) -> Relation {
        Relation { suite: self.suite, name: format!("{}÷", self.name), lhs: self.lhs.flip_div(), rhs: self.rhs.flip_div() }
    }
}

/// Every instance of the named suite whose thickness parameters sum to at
/// most `bound`.
pub fn relation_suite(name: &str, bound: u32) -> Result<Vec<Relation>, WebError> {
    let suite = SUITES.iter().copied().find(|s| *s == name).ok_or_else(|| WebError::UnknownSuite(name.to_string()))?;
    let mut out = Rels { suite, v: Vec::new() };
    match suite {
        "web-basic" => web_basic(&mut out, bound),
        "qweb-white" => qweb_white(&mut out, bound),
        "qweb-affine" => qweb_affine(&mut out, bound),
        "derived-exact" => derived_exact(&mut out, bound),
        "char0-qweb" => char0_qweb(&mut out, bound),
        _ => char0_affine(&mut out, bound),
    }
    Ok(out.v)
}

struct Rels {
    suite: &'static str,
    v: Vec<Relation>,
}

impl Rels {
    fn push(&mut self, name: String, lhs: Morphism, rhs: Morphism) {
        self.v.push(Relation { suite: self.suite, name, lhs, rhs });
    }
}

fn pairs(n: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for a in 1..n {
        for b in 1..=(n - a) {
            v.push((a, b));
        }
    }
    v
}

fn triples(n: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for (a, b) in pairs(n.saturating_sub(1)) {
        for c in 1..=(n - a - b) {
            v.push((a, b, c));
        }
    }
    v
}

fn q(n: i64) -> Scalar {
    Scalar::int(n)
}

fn web_basic(r: &mut Rels, n: u32) {
    for (a, b, c3) in triples(n) {
        let tag = format!("(a={},b={},c={})", a, b, c3);
        r.push(
            format!("merge-assoc{}", tag),
            c(&[merge(a + b, c3), t(&[merge(a, b), id(c3)])]),
            c(&[merge(a, b + c3), t(&[id(a), merge(b, c3)])]),
        );
        r.push(
            format!("split-assoc{}", tag),
            c(&[t(&[split(a, b), id(c3)]), split(a + b, c3)]),
            c(&[t(&[id(a), split(b, c3)]), split(a, b + c3)]),
        );
        r.push(
            format!("slider-merge-left{}", tag),
            c(&[cross(a + b, c3), t(&[merge(a, b), id(c3)])]),
            c(&[t(&[id(c3), merge(a, b)]), t(&[cross(a, c3), id(b)]), t(&[id(a), cross(b, c3)])]),
        );
        r.push(
            format!("slider-merge-right{}", tag),
            c(&[cross(c3, a + b), t(&[id(c3), merge(a, b)])]),
            c(&[t(&[merge(a, b), id(c3)]), t(&[id(a), cross(c3, b)]), t(&[cross(c3, a), id(b)])]),
        );
        r.push(
            format!("slider-split-left{}", tag),
            c(&[t(&[id(c3), split(a, b)]), cross(a + b, c3)]),
            c(&[t(&[cross(a, c3), id(b)]), t(&[id(a), cross(b, c3)]), t(&[split(a, b), id(c3)])]),
        );
        r.push(
            format!("slider-split-right{}", tag),
            c(&[t(&[split(a, b), id(c3)]), cross(c3, a + b)]),
            c(&[t(&[id(a), cross(c3, b)]), t(&[cross(c3, a), id(b)]), t(&[id(c3), split(a, b)])]),
        );
        r.push(
            format!("braid{}", tag),
            c(&[t(&[cross(b, c3), id(a)]), t(&[id(b), cross(a, c3)]), t(&[cross(a, b), id(c3)])]),
            c(&[t(&[id(c3), cross(a, b)]), t(&[cross(a, c3), id(b)]), t(&[id(a), cross(b, c3)])]),
        );
    }
    for (a, b) in pairs(n) {
        let tag = format!("(a={},b={})", a, b);
        r.push(format!("binomial{}", tag), c(&[merge(a, b), split(a, b)]), id(a + b).scale(&q(binomial((a + b) as i64, a as i64))));
        r.push(format!("swallow-merge{}", tag), c(&[merge(b, a), cross(a, b)]), merge(a, b));
        r.push(format!("swallow-split{}", tag), c(&[cross(a, b), split(a, b)]), split(b, a));
        r.push(format!("symmetric{}", tag), c(&[cross(b, a), cross(a, b)]), ids(&[a, b]));
    }
    // Split(b,d)∘Merge(a,c) on a+c = b+d
    for (a, c2) in pairs(n) {
        for b in 1..(a + c2) {
            let d = a + c2 - b;
            let mut rhs = Morphism::zero(&[a, c2], &[b, d]);
            for s in 0..=a.min(b) {
                let tt = s as i64 + d as i64 - a as i64;
                if tt < 0 || tt > c2.min(d) as i64 {
                    continue;
                }
                let tt = tt as u32;
                rhs = &rhs
                    + &c(&[
                        t(&[merge(s, c2 - tt), merge(a - s, tt)]),
                        t(&[id(s), cross(a - s, c2 - tt), id(tt)]),
                        t(&[split(s, a - s), split(c2 - tt, tt)]),
                    ]);
            }
            r.push(format!("square(a={},c={},b={},d={})", a, c2, b, d), c(&[split(b, d), merge(a, c2)]), rhs);
        }
    }
}

fn qweb_white(r: &mut Rels, n: u32) {
    for a in 1..=n {
        r.push(format!("wdot-square(a={})", a), c(&[wdot(a), wdot(a)]), id(a).scale(&q(a as i64)));
        if a >= 2 {
            r.push(format!("onewdot-left(a={})", a), c(&[merge(1, a - 1), t(&[wdot(1), id(a - 1)]), split(1, a - 1)]), wdot(a));
            r.push(format!("onewdot-right(a={})", a), c(&[merge(a - 1, 1), t(&[id(a - 1), wdot(1)]), split(a - 1, 1)]), wdot(a));
        }
    }
    for (a, b) in pairs(n) {
        let tag = format!("(a={},b={})", a, b);
        r.push(format!("wdot-cross-left{}", tag), c(&[t(&[wdot(b), id(a)]), cross(a, b)]), c(&[cross(a, b), t(&[id(a), wdot(b)])]));
        r.push(format!("wdot-cross-right{}", tag), c(&[cross(a, b), t(&[wdot(a), id(b)])]), c(&[t(&[id(b), wdot(a)]), cross(a, b)]));
        r.push(
            format!("wdot-split{}", tag),
            c(&[split(a, b), wdot(a + b)]),
            c(&[t(&[wdot(a), id(b)]), split(a, b)]) + c(&[t(&[id(a), wdot(b)]), split(a, b)]),
        );
        r.push(
            format!("wdot-merge{}", tag),
            c(&[wdot(a + b), merge(a, b)]),
            c(&[merge(a, b), t(&[wdot(a), id(b)])]) + c(&[merge(a, b), t(&[id(a), wdot(b)])]),
        );
    }
}

/// Right-hand side of the black dot passing down through a crossing.
fn dot_cross_rhs(a: u32, b: u32) -> Morphism {
    let mut rhs = Morphism::zero(&[a, b], &[b, a]);
    for tt in 0..=a.min(b) {
        let merges = t(&[merge(tt, b - tt), merge(a - tt, tt)]);
        let cr = t(&[id(tt), cross(a - tt, b - tt), id(tt)]);
        let dot = t(&[id(tt), id(a - tt), bdot(b - tt), id(tt)]);
        let splits = t(&[split(tt, a - tt), split(b - tt, tt)]);
        let d = c(&[merges.clone(), cr.clone(), dot.clone(), splits.clone()]);
        rhs = &rhs + &d.scale(&q(factorial(tt)));
        if tt >= 1 {
            let ww = t(&[wdot(tt), id(a - tt), id(b - tt), wdot(tt)]);
            let dww = c(&[merges, cr, dot, ww, splits]);
            rhs = &rhs - &dww.scale(&q(factorial(tt - 1)));
        }
    }
    rhs
}

fn qweb_affine(r: &mut Rels, n: u32) {
    for a in 1..=n {
        r.push(format!("wdot-bdot(a={})", a), c(&[wdot(a), bdot(a)]), -c(&[bdot(a), wdot(a)]));
        let thin: Vec<Morphism> = (0..a).map(|_| bdot(1)).collect();
        r.push(format!("balloon(a={})", a), c(&[thin_merge(a), t(&thin), thin_split(a)]), bdot(a).scale(&q(factorial(a))));
    }
    for (a, b) in pairs(n) {
        let tag = format!("(a={},b={})", a, b);
        let first = Relation {
            suite: r.suite,
            name: format!("dot-cross-first{}", tag),
            lhs: c(&[t(&[bdot(b), id(a)]), cross(a, b)]),
            rhs: dot_cross_rhs(a, b),
        };
        let mut second = first.flipped();
        second.name = format!("dot-cross-second{}", tag);
        r.v.push(first);
        r.v.push(second);
        r.push(format!("bdot-split{}", tag), c(&[split(a, b), bdot(a + b)]), c(&[t(&[bdot(a), bdot(b)]), split(a, b)]));
        r.push(format!("bdot-merge{}", tag), c(&[bdot(a + b), merge(a, b)]), c(&[merge(a, b), t(&[bdot(a), bdot(b)])]));
    }
}

fn derived_exact(r: &mut Rels, n: u32) {
    for k in 1..=n {
        for a in 0..=k {
            let tag = format!("(k={},a={})", k, a);
            let (w, x) = (wdot(k), bdot(k));
            let (om, oc) = (omega(k, a), omega_circ(k, a));
            if a < k {
                r.push(format!("ball-w-circ{}", tag), c(&[w.clone(), oc.clone()]), c(&[oc.clone(), w.clone()]));
                r.push(format!("ball-x-circ{}", tag), c(&[x.clone(), oc.clone()]), -c(&[oc.clone(), x.clone()]));
            }
            r.push(format!("ball-w-omega-minus{}", tag), c(&[w.clone(), om.clone()]), -c(&[om.clone(), w.clone()]) + oc.scale(&q(2)));
            let wx = c(&[merge(a, k - a), t(&[c(&[wdot(a), bdot(a)]), id(k - a)]), split(a, k - a)]);
            r.push(format!("ball-w-omega-plus{}", tag), c(&[w.clone(), om.clone()]), c(&[om, w]) + wx.scale(&q(2)));
        }
    }
    r.push(
        "fourwdot".into(),
        c(&[t(&[wdot(1), wdot(1)]), split(1, 1), merge(1, 1), t(&[wdot(1), wdot(1)])]),
        c(&[split(1, 1), merge(1, 1)]) - ids(&[1, 1]).scale(&q(2)),
    );
    for (a, b) in pairs(n) {
        r.push(
            format!("twowhite(a={},b={})", a, b),
            c(&[merge(a, b), t(&[wdot(a), wdot(b)]), split(a, b)]),
            Morphism::zero(&[a + b], &[a + b]),
        );
        for rr in 0..=(a + b) {
            let tag = format!("(a={},b={},r={})", a, b, rr);
            let (down, up) = push_omega(a, b, rr);
            r.push(format!("push-merge{}", tag), c(&[omega(a + b, rr), merge(a, b)]), down);
            r.push(format!("push-split{}", tag), c(&[split(a, b), omega(a + b, rr)]), up);
        }
        for rr in 0..=a {
            r.push(
                format!("omega-white-balloon(a={},b={},r={})", a, b, rr),
                c(&[merge(a, b), t(&[omega(a, rr), wdot(b)]), split(a, b)]),
                omega_circ(a + b, rr).scale(&q(binomial((a + b - rr) as i64 - 1, b as i64 - 1))),
            );
        }
    }
}

/// Exact expansions of `ω_{a+b,r}∘Merge(a,b)` and `Split(a,b)∘ω_{a+b,r}`
/// with all dots moved onto the legs.
pub fn push_omega(a: u32, b: u32, rr: u32) -> (Morphism, Morphism) {
    let mut down = Morphism::zero(&[a, b], &[a + b]);
    let mut up = Morphism::zero(&[a + b], &[a, b]);
    if rr > a + b {
        return (down, up);
    }
    for cc in 0..=a.min(rr) {
        for dd in 0..=b.min(rr - cc) {
            let tt = (rr - cc - dd) as i64;
            let (ac, bd) = ((a - cc) as i64, (b - dd) as i64);
            let rc = factorial(tt as u32) * binomial(ac, tt) * binomial(bd, tt);
            if rc != 0 {
                let even = t(&[omega(a, cc), omega(b, dd)]);
                down = &down + &c(&[merge(a, b), even.clone()]).scale(&q(rc));
                up = &up + &c(&[even, split(a, b)]).scale(&q(rc));
            }
            if tt >= 1 {
                let rp = factorial(tt as u32 - 1) * binomial(ac - 1, tt - 1) * binomial(bd - 1, tt - 1);
                if rp != 0 {
                    let odd = t(&[omega_circ(a, cc), omega_circ(b, dd)]);
                    down = &down - &c(&[merge(a, b), odd.clone()]).scale(&q(rp));
                    up = &up + &c(&[odd, split(a, b)]).scale(&q(rp));
                }
            }
        }
    }
    (down, up)
}

/// Rung moving one unit of thickness from the left strand to the right.
pub fn rung_e(a: u32, b: u32, white: bool) -> Morphism {
    let mid = if white { t(&[id(a - 1), wdot(1), id(b)]) } else { ids(&[a - 1, 1, b]) };
    c(&[t(&[id(a - 1), merge(1, b)]), mid, t(&[split(a - 1, 1), id(b)])])
}

/// Rung moving one unit of thickness from the right strand to the left.
pub fn rung_f(a: u32, b: u32, white: bool) -> Morphism {
    let mid = if white { t(&[id(a), wdot(1), id(b - 1)]) } else { ids(&[a, 1, b - 1]) };
    c(&[t(&[merge(a, 1), id(b - 1)]), mid, t(&[id(a), split(1, b - 1)])])
}

/// Permutation of `a` thin strands past `b` thin strands.
fn thin_block(a: u32, b: u32) -> Morphism {
    let src = vec![1; (a + b) as usize];
    let mut slices = Vec::new();
    for i in (0..a as usize).rev() {
        for j in 0..b as usize {
            slices.push(Slice { pos: i + j, gen: Gen::Cross(1, 1) });
        }
    }
    Morphism::from_term(&src, &slices, Scalar::int(1)).expect("thin block")
}

fn char0_qweb(r: &mut Rels, n: u32) {
    for (a, b) in pairs(n) {
        let tag = format!("(a={},b={})", a, b);
        // [E, F] on (a,b)
        let fe = |we: bool, wf: bool| c(&[rung_f(a - 1, b + 1, wf), rung_e(a, b, we)]);
        let ef = |we: bool, wf: bool| c(&[rung_e(a + 1, b - 1, we), rung_f(a, b, wf)]);
        r.push(format!("rung-swap{}", tag), fe(false, false) - ef(false, false), ids(&[a, b]).scale(&q(a as i64 - b as i64)));
        let ww = t(&[wdot(a), id(b)]) - t(&[id(a), wdot(b)]);
        r.push(format!("rung-swap-wf{}", tag), fe(false, true) - ef(false, true), ww.clone());
        r.push(format!("rung-swap-we{}", tag), fe(true, false) - ef(true, false), ww);
        let blk = c(&[t(&[thin_merge(b), thin_merge(a)]), thin_block(a, b), t(&[thin_split(a), thin_split(b)])]);
        let den = Scalar::int(factorial(a) * factorial(b)).inv().expect("nonzero");
        r.push(format!("thick-crossing{}", tag), cross(a, b), blk.scale(&den));
        let mut by_rungs = Morphism::zero(&[a, b], &[b, a]);
        for tt in 0..=a.min(b) {
            let term = c(&[
                t(&[id(b), merge(a - tt, tt)]),
                t(&[split(b, a - tt), id(tt)]),
                t(&[merge(a, b - tt), id(tt)]),
                t(&[id(a), split(b - tt, tt)]),
            ]);
            by_rungs = &by_rungs + &term.scale(&q(if tt % 2 == 0 { 1 } else { -1 }));
        }
        r.push(format!("crossing-by-rungs{}", tag), cross(a, b), by_rungs);
    }
    for (a, b, c3) in triples(n) {
        let tag = format!("(a={},b={},c={})", a, b, c3);
        let f12 = |x: u32, y: u32, z: u32, w: bool| t(&[rung_f(x, y, w), id(z)]);
        let f23 = |x: u32, y: u32, z: u32, w: bool| t(&[id(x), rung_f(y, z, w)]);
        // (a,b,c) → (a,b+1,c−1) → (a+1,b,c−1)
        let l1 = |w1: bool, w2: bool| c(&[f12(a, b + 1, c3 - 1, w1), f23(a, b, c3, w2)]);
        // (a,b,c) → (a+1,b−1,c) → (a+1,b,c−1)
        let l2 = |w1: bool, w2: bool| c(&[f23(a + 1, b - 1, c3, w2), f12(a, b, c3, w1)]);
        r.push(format!("wdot-rung-even{}", tag), l1(false, false) - l2(false, false), l1(true, true) + l2(true, true));
        r.push(format!("wdot-rung-odd{}", tag), l1(false, true) - l2(false, true), l1(true, false) - l2(true, false));
    }
    r.push(
        "mergesplit-thin".into(),
        c(&[split(1, 1), merge(1, 1)]) - c(&[t(&[wdot(1), wdot(1)]), split(1, 1), merge(1, 1), t(&[wdot(1), wdot(1)])]),
        ids(&[1, 1]).scale(&q(2)),
    );
    r.push("thin-crossing".into(), cross(1, 1), c(&[split(1, 1), merge(1, 1)]) - ids(&[1, 1]));
    r.push(
        "thin-wdot-split".into(),
        c(&[split(1, 1), wdot(2)]),
        c(&[t(&[wdot(1), id(1)]), split(1, 1)]) + c(&[t(&[id(1), wdot(1)]), split(1, 1)]),
    );
}

fn char0_affine(r: &mut Rels, n: u32) {
    let (x, s, w) = (bdot(1), cross(1, 1), wdot(1));
    let one = ids(&[1, 1]);
    let ww = t(&[w.clone(), w.clone()]);
    r.push(
        "thin-dot-cross-first".into(),
        c(&[t(&[x.clone(), id(1)]), s.clone()]),
        c(&[s.clone(), t(&[id(1), x.clone()])]) + one.clone() - ww.clone(),
    );
    r.push("thin-dot-cross-second".into(), c(&[s.clone(), t(&[x.clone(), id(1)])]), c(&[t(&[id(1), x.clone()]), s]) + one + ww);
    r.push("thin-wdot-bdot".into(), c(&[w.clone(), x.clone()]), -c(&[x, w]));
    for a in 1..=n {
        let thin: Vec<Morphism> = (0..a).map(|_| bdot(1)).collect();
        let inv = Scalar::int(factorial(a)).inv().expect("nonzero");
        r.push(format!("thick-dot(a={})", a), bdot(a), c(&[thin_merge(a), t(&thin), thin_split(a)]).scale(&inv));
    }
    for (a, b) in pairs(n) {
        r.push(
            format!("twowhite(a={},b={})", a, b),
            c(&[merge(a, b), t(&[wdot(a), wdot(b)]), split(a, b)]),
            Morphism::zero(&[a + b], &[a + b]),
        );
    }
}
