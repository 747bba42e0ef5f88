use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linalg::add_entry;
use super::scalar::Scalar;

/// Exponent vector with trailing zeros trimmed. Index 0 is `y1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut e: Vec<u32>) -> Monomial {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let n = self.0.len().max(o.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }
}

// graded lexicographic
impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&o.exp(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial in `y1, y2, ...` with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn constant(c: Scalar) -> MultiPoly {
        let mut p = MultiPoly::zero();
        add_entry(&mut p.terms, Monomial::default(), c);
        p
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Scalar::one())
    }

    /// The variable `y_{i+1}` (0-based index).
    pub fn var(i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.terms.insert(Monomial::var(i), Scalar::one());
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Scalar)>) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            add_entry(&mut p.terms, m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Largest variable index that occurs, plus one.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.exps().len()).max().unwrap_or(0)
    }

    /// Writes the polynomial as `Σ_j var^j · A_j`; returns the `A_j`.
    pub fn collect_in(&self, var: usize) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let j = m.exp(var) as usize;
            if out.len() <= j {
                out.resize(j + 1, MultiPoly::zero());
            }
            let mut e = m.exps().to_vec();
            if var < e.len() {
                e[var] = 0;
            }
            add_entry(&mut out[j].terms, Monomial::new(e), c.clone());
        }
        out
    }

    /// Substitutes `y_from := y_to`.
    pub fn identify(&self, from: usize, to: usize) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            let k = m.exp(from);
            if from < e.len() {
                e[from] = 0;
            }
            if e.len() <= to {
                e.resize(to + 1, 0);
            }
            e[to] += k;
            (Monomial::new(e), c.clone())
        }))
    }

    /// Substitutes `y_i := s_i·y_i` with `s_i = ±1`.
    pub fn sign_flip(&self, flip: &[bool]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let odd =
                m.exps().iter().enumerate().filter(|(i, _)| flip.get(*i).copied().unwrap_or(false)).map(|(_, e)| *e).sum::<u32>() % 2 == 1;
            (m.clone(), if odd { -c } else { c.clone() })
        }))
    }

    pub fn eval(&self, pt: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                t = &t * &pt[i].pow(*e);
            }
            out += &t;
        }
        out
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            add_entry(&mut out.terms, m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            add_entry(&mut out.terms, m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                add_entry(&mut out.terms, m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Scalar::int(-1))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, o: MultiPoly) -> MultiPoly {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("y{}", i + 1) } else { format!("y{}^{}", i + 1, e) })
                .collect();
            let (neg, mag) = if c.is_real() && c.re.is_negative() { (true, -c) } else { (false, c.clone()) };
            let coef = if !c.is_real() { format!("({})", c) } else { mag.to_string() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", coef)?;
            } else if mag.is_one() && c.is_real() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coef, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_and_print() {
        let y1 = MultiPoly::var(0);
        let y2 = MultiPoly::var(1);
        let p = &(&y1 * &y1) - &(&y2 + &MultiPoly::constant(Scalar::int(3)));
        assert_eq!(p.to_string(), "y1^2 - y2 - 3");
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn collect_in_var() {
        let y1 = MultiPoly::var(0);
        let y2 = MultiPoly::var(1);
        let p = &(&y1 * &y2) + &(&y2 * &y2);
        let parts = p.collect_in(0);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], &y2 * &y2);
        assert_eq!(parts[1], y2);
    }
}
