use qweb::qrep::Oracle;
use qweb::webterm::{relation_suite, SUITES};

fn failures(n: usize, bound: u32) -> Vec<String> {
    let o = Oracle::natural(n).unwrap();
    let mut bad = Vec::new();
    for s in SUITES {
        for r in relation_suite(s, bound).unwrap() {
            if !o.equal(&r.lhs, &r.rhs).unwrap() {
                bad.push(format!("{}: {}", s, r.name));
            }
        }
    }
    bad
}

#[test]
fn suites_hold_small() {
    let bad = failures(2, 3);
    assert!(bad.is_empty(), "{:#?}", bad);
}
