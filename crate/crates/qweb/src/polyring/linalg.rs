//! Exact sparse elimination over Gaussian rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `v += c·w`, dropping entries that cancel.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Scalar, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let t = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y += &t;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), t);
            }
        }
    }
}

pub fn add_entry<K: Ord>(v: &mut SparseVec<K>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&k) {
        Some(y) => {
            *y += &c;
            if y.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            v.insert(k, c);
        }
    }
}

/// Incremental echelon form that remembers how each stored row is built from
/// the inserted vectors, so membership queries return coordinates.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>, SparseVec<usize>)>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows. Returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut comb = SparseVec::new();
        for (piv, row, rc) in &self.rows {
            if let Some(c) = v.get(piv).cloned() {
                axpy(&mut v, &-&c, row);
                axpy(&mut comb, &c, rc);
            }
        }
        (v, comb)
    }

    /// Inserts a vector; returns true when it raised the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (res, comb) = self.reduce(v);
        let Some((piv, lead)) = res.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let mut row = SparseVec::new();
        axpy(&mut row, &inv, &res);
        // row = inv·(v - Σ comb·inserted)
        let mut rc = SparseVec::new();
        rc.insert(idx, inv.clone());
        axpy(&mut rc, &-&inv, &comb);
        self.rows.push((piv, row, rc));
        true
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` lies in
    /// their span.
    pub fn solve(&self, v: SparseVec<K>) -> Option<SparseVec<usize>> {
        let (res, comb) = self.reduce(v);
        if res.is_empty() {
            Some(comb)
        } else {
            None
        }
    }
}

/// Exact rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vs: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

pub fn unit<K: Ord>(k: K) -> SparseVec<K> {
    let mut v = SparseVec::new();
    v.insert(k, Scalar::one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, Scalar::int(c))).collect()
    }

    #[test]
    fn rank_and_solve() {
        let a = vec(&[(0, 1), (1, 2)]);
        let b = vec(&[(1, 1), (2, 1)]);
        let c = vec(&[(0, 1), (1, 4), (2, 2)]); // a + 2b
        assert_eq!(rank([a.clone(), b.clone(), c.clone()]), 2);
        let mut e = Echelon::new();
        assert!(e.insert(a));
        assert!(e.insert(b));
        let sol = e.solve(c).unwrap();
        assert_eq!(sol.get(&0), Some(&Scalar::int(1)));
        assert_eq!(sol.get(&1), Some(&Scalar::int(2)));
        assert!(e.solve(vec(&[(3, 1)])).is_none());
    }

    #[test]
    fn solve_tracks_late_pivots() {
        let mut e = Echelon::new();
        e.insert(vec(&[(1, 1), (2, 1)]));
        e.insert(vec(&[(1, 1), (2, 3)]));
        e.insert(vec(&[(0, 2), (2, 5)]));
        let target = vec(&[(0, 2), (1, 2), (2, 9)]);
        let sol = e.solve(target.clone()).unwrap();
        let mut back = SparseVec::new();
        let basis = [vec(&[(1, 1), (2, 1)]), vec(&[(1, 1), (2, 3)]), vec(&[(0, 2), (2, 5)])];
        for (i, c) in &sol {
            axpy(&mut back, c, &basis[*i]);
        }
        assert_eq!(back, target);
    }
}
