use qweb::normalform::{cfd_basis, thin_explode, NormalMorphism, Reducer};
use qweb::qrep::Oracle;
use qweb::sergeev::phi_element;
use qweb::webterm::build::{bdot, c, cross, merge, split, t, wdot};
use qweb::webterm::{relation_suite, thin_merge, thin_split, Morphism};

fn full_split(obj: &[u32]) -> Morphism {
    Morphism::tensor_all(&obj.iter().map(|&a| thin_split(a)).collect::<Vec<_>>())
}

fn full_merge(obj: &[u32]) -> Morphism {
    Morphism::tensor_all(&obj.iter().map(|&a| thin_merge(a)).collect::<Vec<_>>())
}

#[test]
fn explosion_matches_sandwich() {
    let o = Oracle::new(3, &[]).unwrap();
    let samples = vec![
        merge(1, 2),
        split(2, 1),
        cross(2, 1),
        wdot(2),
        bdot(2),
        c(&[merge(1, 1), t(&[bdot(1), wdot(1)]), split(1, 1)]),
        c(&[cross(1, 2), t(&[wdot(1), bdot(2)])]),
    ];
    for f in samples {
        let x = thin_explode(&f).unwrap();
        let sandwich = c(&[full_split(f.tgt()), f.clone(), full_merge(f.src())]);
        assert!(o.equal(&phi_element(&x).unwrap(), &sandwich).unwrap(), "{}", f);
    }
}

#[test]
fn basis_roundtrip_small() {
    let mut red = Reducer::new();
    for (l, m) in [(vec![2], vec![2]), (vec![1, 1], vec![2]), (vec![2, 1], vec![1, 2])] {
        for b in cfd_basis(&l, &m, 2) {
            let n = red.reduce(&b.embed().unwrap()).unwrap();
            assert_eq!(n, NormalMorphism::basis_element(b.clone()), "{}", b);
        }
    }
}

#[test]
fn reduce_relations_small() {
    let o = Oracle::new(3, &[]).unwrap();
    let mut red = Reducer::new();
    for s in ["web-basic", "qweb-white", "qweb-affine"] {
        for r in relation_suite(s, 3).unwrap() {
            let d = red.reduce(&r.difference()).unwrap();
            assert!(d.is_zero(), "{}: {}", r.name, d);
            let n = red.reduce(&r.lhs).unwrap();
            assert!(o.equal(&n.embed().unwrap(), &r.lhs).unwrap(), "{}", r.name);
        }
    }
}
