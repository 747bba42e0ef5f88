#![allow(dead_code)]

use qweb::polyring::Scalar;
use qweb::sergeev::Letter;
use qweb::webterm::{apply_slice, Gen, Morphism, Slice};
use rand::Rng;

/// Random composition of `m` into positive parts.
pub fn random_object(rng: &mut impl Rng, m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut left = m;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        out.push(p);
        left -= p;
    }
    out
}

/// Random stack of `len` generator slices over `src`, with black-dot degree
/// at most `max_deg`.
pub fn random_word(rng: &mut impl Rng, src: &[u32], len: usize, max_deg: u32) -> Vec<Slice> {
    let mut obj = src.to_vec();
    let mut deg = 0;
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < len && tries < 20 * len + 20 {
        tries += 1;
        if obj.is_empty() {
            break;
        }
        let pos = rng.gen_range(0..obj.len());
        let a = obj[pos];
        let gen = match rng.gen_range(0..5) {
            0 if pos + 1 < obj.len() => Gen::Merge(a, obj[pos + 1]),
            1 if a >= 2 => {
                let r = rng.gen_range(1..a);
                Gen::Split(r, a - r)
            }
            2 if pos + 1 < obj.len() => Gen::Cross(a, obj[pos + 1]),
            3 => Gen::WDot(a),
            4 if deg + a <= max_deg => Gen::BDot(a),
            _ => continue,
        };
        deg += gen.degree();
        let s = Slice { pos, gen };
        obj = apply_slice(&obj, &s).expect("valid slice");
        out.push(s);
    }
    out
}

pub fn random_coef(rng: &mut impl Rng) -> Scalar {
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Scalar::int(n)
}

/// Single-term morphism from a random word.
pub fn random_morphism(rng: &mut impl Rng, m: u32, len: usize, max_deg: u32) -> Morphism {
    let src = random_object(rng, m);
    random_from(rng, &src, len, max_deg)
}

pub fn random_from(rng: &mut impl Rng, src: &[u32], len: usize, max_deg: u32) -> Morphism {
    let w = random_word(rng, src, len, max_deg);
    Morphism::from_term(src, &w, random_coef(rng)).expect("valid word")
}

/// Sum of two words with shared boundaries: the second is the first
/// followed by an extra endomorphism of the target.
pub fn random_sum(rng: &mut impl Rng, m: u32, len: usize, max_deg: u32) -> Morphism {
    let f = random_morphism(rng, m, len, max_deg.div_ceil(2));
    let g = random_from(rng, f.tgt(), 0, 0);
    let dots: Vec<Slice> = (0..f.tgt().len()).filter(|_| rng.gen_bool(0.3)).map(|p| Slice { pos: p, gen: Gen::WDot(f.tgt()[p]) }).collect();
    let e = Morphism::from_term(f.tgt(), &dots, Scalar::int(1)).expect("dots");
    let h = g.compose(&e).unwrap().compose(&f).unwrap();
    f.try_add(&h).unwrap()
}

pub fn random_letters(rng: &mut impl Rng, n: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 if n > 1 => Letter::S(rng.gen_range(1..n)),
            1 => Letter::C(rng.gen_range(1..=n)),
            _ => Letter::X(rng.gen_range(1..=n)),
        })
        .collect()
}
