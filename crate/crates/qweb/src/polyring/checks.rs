//! Batch checks of the polynomial layer.

use num_traits::One;
use serde::Serialize;

use super::sym::{det, esym_matrix, esym_minor, g_lambda, independence_rank, minor_matrix, to_e_basis, vandermonde, GMethod};
use super::PolyError;
use crate::combinat::{c_kd, dominance_lt, rho, sort_desc, strict_partitions_len};

#[derive(Clone, Debug, Default, Serialize)]
pub struct PolyReport {
    /// `g_λ` by recursion and by raising operators, compared.
    pub g_checked: usize,
    pub g_agree: usize,
    /// Leading `e`-term is `e_{λ̄−ρ_k}` with coefficient one and every other
    /// term strictly dominance-higher. Cases where `λ̄−ρ_k` has a negative
    /// entry or too many parts for the variables are counted as skipped.
    pub leading_checked: usize,
    pub leading_ok: usize,
    pub leading_skipped: usize,
    /// `(s, det B = Δ, all minors agree)`
    pub det: Vec<(usize, bool, bool)>,
    /// `(k, d, rank, |C_{k,d}|)`
    pub independence: Vec<(usize, u64, usize, usize)>,
}

impl PolyReport {
    pub fn all_ok(&self) -> bool {
        self.g_agree == self.g_checked
            && self.leading_ok == self.leading_checked
            && self.det.iter().all(|d| d.1 && d.2)
            && self.independence.iter().all(|r| r.2 == r.3)
    }
}

/// `g_λ` agreement and leading terms for `a ≤ a_max`, `k ≤ k_max`; the
/// determinant identities for `s ≤ s_max`; independence ranks over
/// `C_{k,d}` at thickness `ind_a` for `k ≤ ind_k`, `d ≤ ind_d`.
pub fn poly_report(a_max: usize, k_max: usize, s_max: usize, ind_a: usize, ind_k: usize, ind_d: u64) -> Result<PolyReport, PolyError> {
    let mut r = PolyReport::default();
    for a in 1..=a_max {
        for k in 1..=k_max.min(a) {
            for l in strict_partitions_len(a as u32, k) {
                let g1 = g_lambda(&l, k, a, GMethod::Recursive)?;
                let g2 = g_lambda(&l, k, a, GMethod::Raising)?;
                r.g_checked += 1;
                if g1 == g2 {
                    r.g_agree += 1;
                }
                let base: Vec<i64> = l.bar().iter().zip(rho(k)).map(|(&b, p)| b as i64 - p as i64).collect();
                let nvars = a - k;
                let lead = match sort_desc(&base) {
                    Ok(p) if p.is_empty() || (p.parts()[0] as usize) <= nvars => p,
                    _ => {
                        r.leading_skipped += 1;
                        continue;
                    }
                };
                r.leading_checked += 1;
                let vars: Vec<usize> = (k + 1..=a).collect();
                let Some(exp) = to_e_basis(&g2, &vars) else { continue };
                let ok = exp.iter().any(|(p, c)| *p == lead && c.is_one())
                    && exp.iter().all(|(p, _)| *p == lead || dominance_lt(&lead, p).unwrap_or(false));
                if ok {
                    r.leading_ok += 1;
                }
            }
        }
    }
    for s in 1..=s_max {
        let b = esym_matrix(s);
        let det_ok = det(&b) == vandermonde(&(1..=s).collect::<Vec<_>>());
        let mut minors_ok = true;
        for i in 1..=s {
            for j in 1..=s {
                minors_ok &= det(&minor_matrix(&b, i - 1, j - 1)) == esym_minor(i, j, s)?;
            }
        }
        r.det.push((s, det_ok, minors_ok));
    }
    for k in 1..=ind_k {
        for d in 0..=ind_d {
            let pairs = c_kd(ind_a as u32, k, d);
            let rank = independence_rank(&pairs, ind_a, k)?;
            r.independence.push((k, d, rank, pairs.len()));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_report() {
        let r = poly_report(3, 2, 3, 3, 1, 2).unwrap();
        assert!(r.all_ok(), "{:?}", r);
        assert!(r.g_checked > 0);
    }
}
