//! Partitions, compositions, dominance order and the pair calculus used by
//! the polynomial independence argument.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("incomparable weights: {0} vs {1}")]
    IncomparableWeights(u64, u64),
    #[error("negative entry {0} in sequence")]
    NegativeEntry(i64),
    #[error("not a strict partition: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("part {part} exceeds bound {bound}")]
    PartTooLarge { part: u32, bound: u32 },
    #[error("raising index ({0},{1}) out of range")]
    RaisingIndex(usize, usize),
    #[error("pairs live in different C(k,d): ({0},{1}) vs ({2},{3})")]
    PairMismatch(usize, u64, usize, u64),
}

/// Finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, CombinatError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(CombinatError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded view of the given length.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (0..len.max(self.0.len())).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Strictly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<StrictPartition, CombinatError> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(CombinatError::NotStrict(parts));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> StrictPartition {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// `λ̄ = λ − (1^k)`.
    pub fn bar(&self) -> Vec<u32> {
        bar_partition(self)
    }

    /// `|λ̄|`.
    pub fn bar_weight(&self) -> u64 {
        self.weight() - self.0.len() as u64
    }

    /// `λ̃ = λ̄ − ρ_k`.
    pub fn tilde(&self) -> Vec<u32> {
        tilde(self)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn bar_partition(l: &StrictPartition) -> Vec<u32> {
    l.0.iter().map(|x| x - 1).collect()
}

/// `ρ_k = (k−1, …, 1, 0)`.
pub fn rho(k: usize) -> Vec<u32> {
    (0..k).rev().map(|x| x as u32).collect()
}

pub fn tilde(l: &StrictPartition) -> Vec<u32> {
    let k = l.len();
    // strictness guarantees λ_i − 1 ≥ k − i
    l.0.iter().enumerate().map(|(i, x)| x - 1 - (k - 1 - i) as u32).collect()
}

fn partial_sums(v: &[u32], len: usize) -> Vec<u64> {
    let mut acc = 0u64;
    (0..len)
        .map(|i| {
            acc += v.get(i).copied().unwrap_or(0) as u64;
            acc
        })
        .collect()
}

/// `α ⊴ β` in dominance order on sequences of equal weight (zero padded).
pub fn dominance_leq_seq(a: &[u32], b: &[u32]) -> Result<bool, CombinatError> {
    let wa: u64 = a.iter().map(|&x| x as u64).sum();
    let wb: u64 = b.iter().map(|&x| x as u64).sum();
    if wa != wb {
        return Err(CombinatError::IncomparableWeights(wa, wb));
    }
    let n = a.len().max(b.len());
    let (sa, sb) = (partial_sums(a, n), partial_sums(b, n));
    Ok(sa.iter().zip(&sb).all(|(x, y)| x <= y))
}

pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool, CombinatError> {
    dominance_leq_seq(&a.0, &b.0)
}

/// Strict dominance `α ◁ β`.
pub fn dominance_lt(a: &Partition, b: &Partition) -> Result<bool, CombinatError> {
    Ok(a != b && dominance_leq(a, b)?)
}

/// `[α]`: reorder entries decreasingly, drop zeros.
pub fn sort_desc(a: &[i64]) -> Result<Partition, CombinatError> {
    if let Some(&x) = a.iter().find(|&&x| x < 0) {
        return Err(CombinatError::NegativeEntry(x));
    }
    let mut v: Vec<u32> = a.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Partition(v))
}

pub fn sort_desc_u(a: &[u32]) -> Partition {
    let mut v: Vec<u32> = a.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition(v)
}

/// `λ ∪ μ`.
pub fn union(a: &[u32], b: &[u32]) -> Partition {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    sort_desc_u(&v)
}

/// Applies `Π R_{i,j}` (1-based indices) once each.
pub fn apply_raising(spec: &[(usize, usize)], v: &[i64]) -> Result<Vec<i64>, CombinatError> {
    let mut out = v.to_vec();
    for &(i, j) in spec {
        if i == 0 || i >= j || j > v.len() {
            return Err(CombinatError::RaisingIndex(i, j));
        }
        out[i - 1] += 1;
        out[j - 1] -= 1;
    }
    Ok(out)
}

/// All products of distinct raising operators on `r` entries, as subsets of
/// index pairs.
pub fn raising_subsets(r: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=r).flat_map(|i| ((i + 1)..=r).map(move |j| (i, j))).collect();
    (0u64..(1u64 << pairs.len()))
        .map(|mask| pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| *p).collect())
        .collect()
}

/// Partitions of `n` with parts ≤ `max_part`, reverse-lexicographic.
pub fn partitions(n: u32, max_part: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Strict partitions with parts ≤ `a` (the set SPar_a), reverse-lex.
pub fn strict_partitions(a: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << a) {
        let parts: Vec<u32> = (1..=a).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect();
        out.push(StrictPartition(parts));
    }
    out.sort_by(|x, y| y.cmp(x));
    out
}

/// SPar_{a,k}.
pub fn strict_partitions_len(a: u32, k: usize) -> Vec<StrictPartition> {
    strict_partitions(a).into_iter().filter(|l| l.len() == k).collect()
}

/// Partitions with parts ≤ `a` and weight exactly `d`.
pub fn par_a(a: u32, d: u32) -> Vec<Partition> {
    partitions(d, a)
}

/// `(λ, μ)` with `λ ∈ SPar_{a,k}`, `μ ∈ Par_a`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct PairIndex {
    pub lambda: StrictPartition,
    pub mu: Partition,
}

impl PairIndex {
    pub fn new(lambda: StrictPartition, mu: Partition) -> PairIndex {
        PairIndex { lambda, mu }
    }
    pub fn k(&self) -> usize {
        self.lambda.len()
    }
    /// `|λ̄| + |μ|`.
    pub fn d(&self) -> u64 {
        self.lambda.bar_weight() + self.mu.weight()
    }
    /// `λ̄ ∪ μ`.
    pub fn union(&self) -> Partition {
        union(&self.lambda.bar(), self.mu.parts())
    }
}

/// The set C_{k,d} for thickness bound `a`.
pub fn c_kd(a: u32, k: usize, d: u64) -> Vec<PairIndex> {
    let mut out = Vec::new();
    for l in strict_partitions_len(a, k) {
        let lb = l.bar_weight();
        if lb > d {
            continue;
        }
        for m in partitions((d - lb) as u32, a) {
            out.push(PairIndex::new(l.clone(), m));
        }
    }
    out
}

/// Strict order on pairs in the same C_{k,d}.
pub fn pair_lt(p: &PairIndex, q: &PairIndex) -> Result<bool, CombinatError> {
    if p.k() != q.k() || p.d() != q.d() {
        return Err(CombinatError::PairMismatch(p.k(), p.d(), q.k(), q.d()));
    }
    let (up, uq) = (p.union(), q.union());
    if up == uq {
        return Ok(p.lambda < q.lambda);
    }
    dominance_lt(&up, &uq)
}

fn check_pair(l: &StrictPartition, m: &Partition) -> Result<(), CombinatError> {
    StrictPartition::new(l.parts().to_vec())?;
    Partition::new(m.parts().to_vec())?;
    Ok(())
}

/// `γ_{λ,μ}` padded to length ℓ(μ).
pub fn gamma_padded(l: &StrictPartition, m: &Partition) -> Result<Vec<u32>, CombinatError> {
    check_pair(l, m)?;
    let k = l.len();
    let lb: Vec<i64> = l.bar().iter().map(|&x| x as i64).collect();
    let bar = |i: usize| -> i64 {
        if i == 0 {
            i64::MAX
        } else if i == k + 1 {
            -1
        } else {
            lb[i - 1]
        }
    };
    let mut out = Vec::with_capacity(m.len());
    for i in 0..=k {
        let d = m.parts().iter().filter(|&&x| bar(i + 1) < x as i64 && (x as i64) <= bar(i)).count();
        out.extend(std::iter::repeat_n((k - i) as u32, d));
    }
    Ok(out)
}

pub fn gamma_packet(l: &StrictPartition, m: &Partition) -> Result<Partition, CombinatError> {
    Ok(sort_desc_u(&gamma_padded(l, m)?))
}

/// The sequence ν of length k + ℓ(μ) with zeros kept, and the positions
/// `p_0, …, p_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuProfile {
    pub nu: Vec<u32>,
    pub p: Vec<usize>,
}

pub fn nu_profile(l: &StrictPartition, m: &Partition) -> Result<NuProfile, CombinatError> {
    let g = gamma_padded(l, m)?;
    let k = l.len();
    let lt = l.tilde();
    // d_i counts how many μ_j receive the value k − i
    let mut d = vec![0usize; k + 1];
    for &x in &g {
        d[k - x as usize] += 1;
    }
    let mut p = Vec::with_capacity(k + 1);
    let mut acc = 0;
    for di in &d {
        acc += di;
        p.push(acc);
    }
    let mut nu = Vec::with_capacity(k + m.len());
    let mut j = 0;
    for i in 0..=k {
        if i > 0 {
            nu.push(lt[i - 1]);
        }
        while j < p[i] {
            nu.push(m.part(j) - (k - i) as u32);
            j += 1;
        }
    }
    Ok(NuProfile { nu, p })
}

/// Multiset inclusion `sub ⊂_p sup`.
pub fn is_subseq_multiset(sub: &[u32], sup: &[u32]) -> bool {
    multiset_minus(sup, sub).is_some()
}

/// `sup ∖ sub` as a decreasing sequence, if `sub` is a sub-multiset.
pub fn multiset_minus(sup: &[u32], sub: &[u32]) -> Option<Vec<u32>> {
    let mut rest = sup.to_vec();
    for x in sub {
        let pos = rest.iter().position(|y| y == x)?;
        rest.remove(pos);
    }
    rest.sort_unstable_by(|x, y| y.cmp(x));
    Some(rest)
}

/// The graph on V_{λ,μ}.
#[derive(Clone, Debug)]
pub struct VGraph {
    pub lambda: StrictPartition,
    pub mu: Partition,
    pub nu: Vec<u32>,
    pub gamma: Vec<u32>,
    pub vertices: Vec<StrictPartition>,
    /// `(u, v, colour)` with colour the 1-based replaced index.
    pub edges: Vec<(usize, usize, usize)>,
}

impl VGraph {
    /// `β_α = ν ∖ α̃ + γ_{λ,μ}`.
    pub fn beta(&self, alpha: &StrictPartition) -> Option<Partition> {
        let rest = multiset_minus(&self.nu, &alpha.tilde())?;
        let len = rest.len().max(self.gamma.len());
        let v: Vec<u32> = (0..len).map(|i| rest.get(i).copied().unwrap_or(0) + self.gamma.get(i).copied().unwrap_or(0)).collect();
        Partition::new(v).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn index_of(&self, a: &StrictPartition) -> Option<usize> {
        self.vertices.iter().position(|v| v == a)
    }
}

pub fn v_graph(l: &StrictPartition, m: &Partition, a: u32) -> Result<VGraph, CombinatError> {
    let prof = nu_profile(l, m)?;
    let gamma = gamma_padded(l, m)?;
    let k = l.len();
    let vertices: Vec<StrictPartition> =
        strict_partitions_len(a, k).into_iter().filter(|al| is_subseq_multiset(&al.tilde(), &prof.nu)).collect();
    let values: BTreeSet<u32> = prof.nu.iter().copied().collect();
    let adjacent = |x: u32, y: u32| -> bool { x != y && !values.iter().any(|&v| (x < v && v < y) || (y < v && v < x)) };
    let mut edges = Vec::new();
    for (u, al) in vertices.iter().enumerate() {
        let ta = al.tilde();
        for (v, be) in vertices.iter().enumerate().skip(u + 1) {
            let tb = be.tilde();
            let diff: Vec<usize> = (0..k).filter(|&i| ta[i] != tb[i]).collect();
            if diff.len() == 1 && adjacent(ta[diff[0]], tb[diff[0]]) {
                edges.push((u, v, diff[0] + 1));
            }
        }
    }
    Ok(VGraph { lambda: l.clone(), mu: m.clone(), nu: prof.nu, gamma, vertices, edges })
}

/// C(λ,μ): pairs (α,β) ∈ C_{k,d} with α̃ ∪ [β − γ] = ν and γ ⊂ β.
pub fn c_lambda_mu(l: &StrictPartition, m: &Partition, a: u32) -> Result<Vec<PairIndex>, CombinatError> {
    let prof = nu_profile(l, m)?;
    let gamma = gamma_padded(l, m)?;
    let target = sort_desc_u(&prof.nu);
    let p = PairIndex::new(l.clone(), m.clone());
    let mut out = Vec::new();
    for q in c_kd(a, l.len(), p.d()) {
        if let Some(diff) = sub_padded(q.mu.parts(), &gamma) {
            if union(&q.lambda.tilde(), &diff) == target {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// Positional `β − γ` if non-negative.
pub fn sub_padded(b: &[u32], g: &[u32]) -> Option<Vec<u32>> {
    let n = b.len().max(g.len());
    (0..n)
        .map(|i| {
            let x = b.get(i).copied().unwrap_or(0);
            let y = g.get(i).copied().unwrap_or(0);
            x.checked_sub(y)
        })
        .collect()
}

/// I_{k,μ}: all α with 0 ≤ α_j ≤ min(k, μ_j).
pub fn i_k_mu(k: u32, m: &Partition) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &mj in m.parts() {
        let mut next = Vec::new();
        for v in &out {
            for x in 0..=k.min(mj) {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Non-negative integer matrices with row sums `rows` and column sums `cols`,
/// in decreasing row-major lexicographic order (diagonal-heavy first).
pub fn enumerate_matrices(rows: &[u32], cols: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let (r, c) = (rows.len(), cols.len());
    let wr: u64 = rows.iter().map(|&x| x as u64).sum();
    let wc: u64 = cols.iter().map(|&x| x as u64).sum();
    if wr != wc {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut m = vec![vec![0u32; c]; r];
    let mut col_left = cols.to_vec();
    fn go(i: usize, j: usize, row_left: u32, rows: &[u32], col_left: &mut Vec<u32>, m: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let (r, c) = (rows.len(), col_left.len());
        if i == r {
            if col_left.iter().all(|&x| x == 0) {
                out.push(m.clone());
            }
            return;
        }
        if j == c {
            if row_left == 0 {
                let next = if i + 1 < r { rows[i + 1] } else { 0 };
                go(i + 1, 0, next, rows, col_left, m, out);
            }
            return;
        }
        let hi = row_left.min(col_left[j]);
        for x in (0..=hi).rev() {
            m[i][j] = x;
            col_left[j] -= x;
            go(i, j + 1, row_left - x, rows, col_left, m, out);
            col_left[j] += x;
        }
        m[i][j] = 0;
    }
    if r == 0 {
        if c == 0 || cols.iter().all(|&x| x == 0) {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, 0, rows[0], rows, &mut col_left, &mut m, &mut out);
    out
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }
    fn pt(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bar_and_tilde() {
        assert_eq!(sp(&[3, 2]).bar(), vec![2, 1]);
        assert_eq!(sp(&[3, 1]).bar(), vec![2, 0]);
        assert_eq!(sp(&[3, 2]).tilde(), vec![1, 1]);
        assert!(sp(&[]).bar().is_empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&pt(&[2, 1, 1]), &pt(&[3, 1])).unwrap());
        assert!(dominance_leq(&pt(&[2, 2]), &pt(&[2, 2])).unwrap());
        assert!(!dominance_leq(&pt(&[3, 1]), &pt(&[2, 2])).unwrap());
        assert_eq!(dominance_leq(&pt(&[3]), &pt(&[2])), Err(CombinatError::IncomparableWeights(3, 2)));
    }

    #[test]
    fn sorting() {
        assert_eq!(sort_desc(&[1, 3, 2]).unwrap(), pt(&[3, 2, 1]));
        assert_eq!(sort_desc(&[0, 2, 0]).unwrap(), pt(&[2]));
        assert_eq!(union(&[2, 1], &[3]), pt(&[3, 2, 1]));
        assert!(sort_desc(&[1, -1]).is_err());
    }

    #[test]
    fn raising() {
        assert_eq!(apply_raising(&[(1, 2)], &[1, 1]).unwrap(), vec![2, 0]);
        assert_eq!(apply_raising(&[], &[2, 0]).unwrap(), vec![2, 0]);
        assert_eq!(apply_raising(&[(1, 2), (1, 3)], &[1, 1, 0]).unwrap(), vec![3, 0, -1]);
        assert_eq!(raising_subsets(3).len(), 8);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_packet(&sp(&[3, 1]), &pt(&[2, 1])).unwrap(), pt(&[1, 1]));
        assert_eq!(gamma_packet(&sp(&[2, 1]), &pt(&[])).unwrap(), pt(&[]));
        assert_eq!(gamma_packet(&sp(&[3, 2]), &pt(&[3])).unwrap(), pt(&[2]));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_profile(&sp(&[3, 1]), &pt(&[2, 1])).unwrap().nu, vec![1, 1, 0, 0]);
        assert_eq!(nu_profile(&sp(&[3, 2]), &pt(&[])).unwrap().nu, sp(&[3, 2]).tilde());
        // λ̄ = (1) and μ_1 = 1 ≤ λ̄_1, so γ is zero and ν = λ̃ ∪ μ
        assert_eq!(gamma_packet(&sp(&[2]), &pt(&[1])).unwrap(), pt(&[]));
        assert_eq!(nu_profile(&sp(&[2]), &pt(&[1])).unwrap().nu, vec![1, 1]);
    }

    #[test]
    fn pair_order_examples() {
        let p = PairIndex::new(sp(&[3, 1]), pt(&[2, 1]));
        let q = PairIndex::new(sp(&[3, 2]), pt(&[2]));
        assert!(pair_lt(&p, &q).unwrap());
        assert!(!pair_lt(&p, &p).unwrap());
        let r = PairIndex::new(sp(&[2]), pt(&[]));
        assert!(pair_lt(&p, &r).is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(enumerate_matrices(&[1, 1], &[1, 1]), vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]]);
        assert_eq!(enumerate_matrices(&[2], &[2]), vec![vec![vec![2]]]);
        assert_eq!(enumerate_matrices(&[2, 1], &[1, 1, 1]).len(), 3);
        assert!(enumerate_matrices(&[2], &[1]).is_empty());
    }

    #[test]
    fn vgraph_basics() {
        let g = v_graph(&sp(&[3, 1]), &pt(&[2, 1]), 4).unwrap();
        assert!(g.index_of(&sp(&[3, 1])).is_some());
        assert!(g.is_connected());
        assert_eq!(g.beta(&sp(&[3, 1])).unwrap(), pt(&[2, 1]));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(strict_partitions(3).len(), 8);
        assert_eq!(partitions(3, 3)[0], pt(&[3]));
    }
}
