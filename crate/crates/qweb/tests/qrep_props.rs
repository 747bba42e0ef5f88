use std::collections::BTreeMap;

use qweb::polyring::linalg::add_entry;
use qweb::polyring::Scalar;
use qweb::qrep::{act_derivation, Key, Oracle, QnElement, Vector};
use qweb::webterm::build::cross;
use qweb::webterm::omega;

fn act(x: &QnElement, v: &Vector) -> Vector {
    let g = x.gl();
    let mut out = BTreeMap::new();
    for (k, c) in v {
        for (c2, k2) in act_derivation(&g, x.is_odd(), k) {
            add_entry(&mut out, k2, c * &c2);
        }
    }
    out
}

fn omega_vec(o: &Oracle, v: &Vector, p: usize) -> Vector {
    let mut out = BTreeMap::new();
    for (k, c) in v {
        for (k2, c2) in o.omega_op(k, p) {
            add_entry(&mut out, k2, c * &c2);
        }
    }
    out
}

// q_n is spanned by the E elements; the F elements only enter Ω itself.
fn generators(n: usize) -> Vec<QnElement> {
    let mut v = Vec::new();
    for odd in [false, true] {
        for i in 0..n {
            for j in 0..n {
                v.push(QnElement::E { odd, i, j });
            }
        }
    }
    v
}

#[test]
fn omega_is_natural() {
    for n in 1..=3 {
        let o = Oracle::natural(n).unwrap();
        for a in 1..=3 {
            for k in o.basis(&[a]) {
                let mut v = BTreeMap::new();
                v.insert(k.clone(), Scalar::int(1));
                for x in generators(n) {
                    let lhs = omega_vec(&o, &act(&x, &v), 1);
                    let rhs = act(&x, &omega_vec(&o, &v, 1));
                    assert_eq!(lhs, rhs, "n={} a={} {:?}", n, a, x);
                }
            }
        }
    }
}

#[test]
fn omega_is_thick_dot_image() {
    for n in 1..=2 {
        let o = Oracle::natural(n).unwrap();
        for a in 1..=3 {
            let m = o.eval(&omega(a, 1)).unwrap();
            for (k, col) in m.src.iter().zip(&m.cols) {
                assert_eq!(col, &o.omega_op(k, 1), "n={} a={}", n, a);
            }
        }
    }
}

#[test]
fn crossing_is_signed_swap() {
    let o = Oracle::natural(2).unwrap();
    for a in 1..=3 {
        for b in 1..=3 {
            for k in o.basis(&[a, b]) {
                let got = o.apply(&cross(a, b), &k);
                let mut want = BTreeMap::new();
                let swapped: Key = [k[0], k[2], k[1]].into_iter().collect();
                let odd = k[1].is_odd() && k[2].is_odd();
                want.insert(swapped, Scalar::sign(odd));
                assert_eq!(got, want, "a={} b={}", a, b);
            }
        }
    }
}
