//! Elementary symmetric polynomials, Vandermonde products and the `g_λ`
//! polynomials of the leading-term calculus. Variables are named by their
//! 1-based index: `y1, y2, …`.

use num_traits::{One, Zero};

use super::linalg::{rank, SparseVec};
use super::poly::{Monomial, MultiPoly};
use super::scalar::Scalar;
use super::PolyError;
use crate::combinat::{apply_raising, raising_subsets, rho, PairIndex, Partition, StrictPartition};

fn var(i: usize) -> MultiPoly {
    MultiPoly::var(i - 1)
}

/// `e_r` of the listed variables.
pub fn elem_sym(r: usize, vars: &[usize]) -> MultiPoly {
    elem_sym_signed(r, &vars.iter().map(|&v| (v, false)).collect::<Vec<_>>())
}

/// `e_r` of `±y_v` for each `(v, negate)`.
pub fn elem_sym_signed(r: usize, vars: &[(usize, bool)]) -> MultiPoly {
    // dp[j] = e_j of the prefix
    let mut dp = vec![MultiPoly::one()];
    for &(v, neg) in vars {
        let y = if neg { -var(v) } else { var(v) };
        dp.push(MultiPoly::zero());
        for j in (1..dp.len()).rev() {
            dp[j] = &dp[j] + &(&dp[j - 1] * &y);
        }
    }
    dp.get(r).cloned().unwrap_or_else(MultiPoly::zero)
}

/// `e_μ = Π e_{μ_i}`; any negative part gives zero.
pub fn elem_sym_seq(mu: &[i64], vars: &[usize]) -> MultiPoly {
    let mut out = MultiPoly::one();
    for &p in mu {
        if p < 0 {
            return MultiPoly::zero();
        }
        out = &out * &elem_sym(p as usize, vars);
    }
    out
}

pub fn elem_sym_partition(mu: &Partition, vars: &[usize]) -> MultiPoly {
    let v: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
    elem_sym_seq(&v, vars)
}

/// `Δ = Π_{a<b} (y_a − y_b)` in the given order.
pub fn vandermonde(vars: &[usize]) -> MultiPoly {
    let mut out = MultiPoly::one();
    for a in 0..vars.len() {
        for b in (a + 1)..vars.len() {
            out = &out * &(&var(vars[a]) - &var(vars[b]));
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = MultiPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let c = &m[0][j] * &det(&minor_matrix(m, 0, j));
        out = if j % 2 == 0 { &out + &c } else { &out - &c };
    }
    out
}

pub fn minor_matrix(m: &[Vec<MultiPoly>], i: usize, j: usize) -> Vec<Vec<MultiPoly>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// `B = (e_{j−1}(x_1, …, x̂_i, …, x_s))_{i,j}` over `y1..ys`.
pub fn esym_matrix(s: usize) -> Vec<Vec<MultiPoly>> {
    (1..=s)
        .map(|i| {
            let others: Vec<usize> = (1..=s).filter(|&t| t != i).collect();
            (1..=s).map(|j| elem_sym(j - 1, &others)).collect()
        })
        .collect()
}

/// `M_{i,j} = x_i^{s−j} Δ(x_1, …, x̂_i, …, x_s)` (1-based).
pub fn esym_minor(i: usize, j: usize, s: usize) -> Result<MultiPoly, PolyError> {
    if i == 0 || j == 0 || i > s || j > s {
        return Err(PolyError::MinorIndex { i, j, s });
    }
    let others: Vec<usize> = (1..=s).filter(|&t| t != i).collect();
    Ok(&var(i).pow((s - j) as u32) * &vandermonde(&others))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GMethod {
    Recursive,
    Raising,
}

fn check_lambda(l: &StrictPartition, k: usize, a: usize) -> Result<(), PolyError> {
    if l.len() != k || k > a || l.parts().iter().any(|&p| p as usize > a) {
        return Err(PolyError::BadLambda(l.parts().to_vec(), a));
    }
    Ok(())
}

/// `g_λ(y_{k+1}, …, y_a)` for `λ ∈ SPar_{a,k}`.
pub fn g_lambda(l: &StrictPartition, k: usize, a: usize, method: GMethod) -> Result<MultiPoly, PolyError> {
    check_lambda(l, k, a)?;
    if k == 0 {
        return Ok(MultiPoly::one());
    }
    let bar: Vec<i64> = l.bar().iter().map(|&x| x as i64).collect();
    match method {
        GMethod::Raising => {
            let base: Vec<i64> = bar.iter().zip(rho(k)).map(|(b, r)| b - r as i64).collect();
            let vars: Vec<usize> = ((k + 1)..=a).collect();
            let mut out = MultiPoly::zero();
            for spec in raising_subsets(k) {
                let v = apply_raising(&spec, &base).expect("indices in range");
                out = &out + &elem_sym_seq(&v, &vars);
            }
            Ok(out)
        }
        GMethod::Recursive => {
            let e = |r: i64, from: usize| -> MultiPoly {
                if r < 0 {
                    MultiPoly::zero()
                } else {
                    elem_sym(r as usize, &(from..=a).collect::<Vec<_>>())
                }
            };
            // g_1 = e_{λ̄_k}(y_2, …, y_a)
            let mut g = e(bar[k - 1], 2);
            for r in 1..k {
                let parts = g.collect_in(r); // powers of y_{r+1}
                let mut next = MultiPoly::zero();
                for (j, aj) in parts.iter().enumerate() {
                    next = &next + &(aj * &e(bar[k - 1 - r] + j as i64 - r as i64, r + 2));
                }
                g = next;
            }
            Ok(g)
        }
    }
}

/// Product `Π_{t≤k} (−1)^{|i_1|+…+|i_t|}` for a parity word.
pub fn parity_prefactor(par: &[bool], k: usize) -> Scalar {
    let mut odd = false;
    let mut acc = false;
    for &p in par.iter().take(k) {
        acc ^= p;
        odd ^= acc;
    }
    Scalar::sign(odd)
}

/// Fully barred leading polynomial of the packet `ω°_{λ̄} ω_μ` on a word
/// with the given parities (all even when `parities` is `None`).
pub fn packet_leading_poly(
    l: &StrictPartition,
    mu: &Partition,
    a: usize,
    k: usize,
    parities: Option<&[bool]>,
) -> Result<MultiPoly, PolyError> {
    if k > a {
        return Err(PolyError::TooManyBars { k, a });
    }
    check_lambda(l, k, a)?;
    let even = vec![false; a];
    let par = parities.unwrap_or(&even);
    let pre = &Scalar::i().pow(k as u32) * &parity_prefactor(par, k);
    let delta = vandermonde(&(1..=k).collect::<Vec<_>>());
    let g = g_lambda(l, k, a, GMethod::Recursive)?;
    let e = elem_sym_partition(mu, &(1..=a).collect::<Vec<_>>());
    Ok((&(&delta * &g) * &e).scale(&pre))
}

fn poly_vec(p: &MultiPoly) -> SparseVec<Monomial> {
    p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Exact rank of `{g_λ(y_{k+1..a}) e_μ(y_{1..a})}`.
pub fn independence_rank(pairs: &[PairIndex], a: usize, k: usize) -> Result<usize, PolyError> {
    let all: Vec<usize> = (1..=a).collect();
    let mut vs = Vec::with_capacity(pairs.len());
    for p in pairs {
        let g = g_lambda(&p.lambda, k, a, GMethod::Recursive)?;
        vs.push(poly_vec(&(&g * &elem_sym_partition(&p.mu, &all))));
    }
    Ok(rank(vs))
}

/// Expansion of a symmetric polynomial in `vars` into products of
/// elementary symmetric polynomials, by repeatedly stripping the grlex-leading
/// monomial.
pub fn to_e_basis(p: &MultiPoly, vars: &[usize]) -> Option<Vec<(Partition, Scalar)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    let pos: Vec<usize> = vars.iter().map(|v| v - 1).collect();
    while let Some((m, c)) = rest.terms().iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        // exponents along vars must be weakly decreasing for a symmetric leading term
        let ex: Vec<u32> = pos.iter().map(|&i| m.exp(i)).collect();
        if m.exps().iter().enumerate().any(|(i, e)| *e > 0 && !pos.contains(&i)) {
            return None;
        }
        if ex.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        // leading monomial y^ex corresponds to e_{ex'} with ex' the conjugate
        let mut conj = Vec::new();
        let top = ex.first().copied().unwrap_or(0);
        for h in 1..=top {
            conj.push(ex.iter().filter(|&&x| x >= h).count() as u32);
        }
        let part = Partition::new(conj).ok()?;
        let q = elem_sym_partition(&part, vars);
        rest = &rest - &q.scale(&c);
        out.push((part, c));
        if out.len() > 10_000 {
            return None;
        }
    }
    Some(out)
}

/// Leading-term model of `M ⊗ S^a(V)`: each term is a pattern of barred
/// letters over a fixed word, carrying a polynomial in the position variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingState {
    pub parities: Vec<bool>,
    pub terms: std::collections::BTreeMap<Vec<bool>, MultiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DotSymbol {
    Omega { a: usize, r: usize },
    OmegaCirc { a: usize, r: usize },
    Packet { a: usize, nu: StrictPartition, eta: Partition },
}

impl LeadingState {
    /// `u ⊗ 1 ⊗ v_i` for a word with the given parities.
    pub fn word(parities: Vec<bool>) -> LeadingState {
        let a = parities.len();
        let mut terms = std::collections::BTreeMap::new();
        terms.insert(vec![false; a], MultiPoly::one());
        LeadingState { parities, terms }
    }

    pub fn len(&self) -> usize {
        self.parities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parities.is_empty()
    }

    /// Number of barred letters in a term.
    pub fn psi(bars: &[bool]) -> usize {
        bars.iter().filter(|&&b| b).count()
    }

    pub fn coefficient(&self, bars: &[bool]) -> MultiPoly {
        self.terms.get(bars).cloned().unwrap_or_else(MultiPoly::zero)
    }

    fn push(&mut self, bars: Vec<bool>, p: MultiPoly) {
        let cur = self.terms.remove(&bars).unwrap_or_else(MultiPoly::zero);
        let s = &cur + &p;
        if !s.is_zero() {
            self.terms.insert(bars, s);
        }
    }

    fn omega(&self, r: usize) -> LeadingState {
        let mut out = LeadingState { parities: self.parities.clone(), terms: Default::default() };
        for (bars, p) in &self.terms {
            let vars: Vec<(usize, bool)> = bars.iter().enumerate().map(|(t, &b)| (t + 1, b)).collect();
            out.push(bars.clone(), p * &elem_sym_signed(r, &vars));
        }
        out
    }

    fn omega_circ(&self, r: usize) -> LeadingState {
        let mut out = LeadingState { parities: self.parities.clone(), terms: Default::default() };
        for (bars, p) in &self.terms {
            let mut prefix = false;
            for t in 0..bars.len() {
                prefix ^= self.parities[t] ^ bars[t];
                let vars: Vec<(usize, bool)> = bars.iter().enumerate().filter(|(s, _)| *s != t).map(|(s, &b)| (s + 1, b)).collect();
                let coef = &Scalar::i() * &Scalar::sign(prefix);
                let mut nb = bars.clone();
                nb[t] = !nb[t];
                out.push(nb, (p * &elem_sym_signed(r, &vars)).scale(&coef));
            }
        }
        out
    }

    /// Top-degree action of a dot symbol.
    pub fn act(&self, sym: &DotSymbol) -> Result<LeadingState, PolyError> {
        let a = match sym {
            DotSymbol::Omega { a, .. } | DotSymbol::OmegaCirc { a, .. } | DotSymbol::Packet { a, .. } => *a,
        };
        if a != self.len() {
            return Err(PolyError::WordLength { expected: a, got: self.len() });
        }
        Ok(match sym {
            DotSymbol::Omega { r, .. } => self.omega(*r),
            DotSymbol::OmegaCirc { r, .. } => {
                if *r >= a {
                    LeadingState { parities: self.parities.clone(), terms: Default::default() }
                } else {
                    self.omega_circ(*r)
                }
            }
            DotSymbol::Packet { nu, eta, .. } => {
                let mut s = self.clone();
                for &p in eta.parts() {
                    s = s.omega(p as usize);
                }
                for p in nu.bar().iter().rev() {
                    s = s.omega_circ(*p as usize);
                }
                s
            }
        })
    }
}

pub fn leading_action(sym: &DotSymbol, s: &LeadingState) -> Result<LeadingState, PolyError> {
    s.act(sym)
}

/// True when `p` vanishes after identifying `y_i` with `y_j`.
pub fn vanishes_on_diagonal(p: &MultiPoly, i: usize, j: usize) -> bool {
    p.identify(i - 1, j - 1).is_zero()
}

pub fn constant(c: i64) -> MultiPoly {
    MultiPoly::constant(Scalar::int(c))
}

pub fn is_one(p: &MultiPoly) -> bool {
    *p == MultiPoly::constant(Scalar::one())
}

pub fn zero_poly() -> MultiPoly {
    MultiPoly::zero()
}

pub fn scalar_zero() -> Scalar {
    Scalar::zero()
}
