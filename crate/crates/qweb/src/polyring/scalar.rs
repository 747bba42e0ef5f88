use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Q;

/// Gaussian rational `re + im·√−1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    pub re: Q,
    pub im: Q,
}

impl Scalar {
    pub fn new(re: Q, im: Q) -> Scalar {
        Scalar { re, im }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar { re: Q::from_int(n), im: Q::zero() }
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar { re: Q::new(n, d), im: Q::zero() }
    }

    /// The unit √−1.
    pub fn i() -> Scalar {
        Scalar { re: Q::zero(), im: Q::one() }
    }

    pub fn sign(odd: bool) -> Scalar {
        if odd {
            Scalar::int(-1)
        } else {
            Scalar::one()
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn inv(&self) -> Option<Scalar> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        let r = norm.recip()?;
        Some(Scalar { re: &self.re * &r, im: -(&self.im * &r) })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Parses `p/q`, `p/q i`, `p/q + r/s i`, `i`, `-i`.
    pub fn parse(s: &str) -> Option<Scalar> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return None;
        }
        // split at a sign that is not leading
        let bytes = t.as_bytes();
        let mut cut = None;
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                cut = Some(k);
            }
        }
        let (a, b) = match cut {
            Some(k) => (&t[..k], Some(&t[k..])),
            None => (&t[..], None),
        };
        let mut out = Scalar::zero();
        for part in std::iter::once(a).chain(b) {
            let part = part.strip_prefix('+').unwrap_or(part);
            if let Some(body) = part.strip_suffix('i') {
                let q = match body {
                    "" => Q::one(),
                    "-" => -Q::one(),
                    _ => Q::parse(body.trim_end_matches('*'))?,
                };
                out.im = &out.im + &q;
            } else {
                out.re = &out.re + &Q::parse(part)?;
            }
        }
        Some(out)
    }
}

impl Zero for Scalar {
    fn zero() -> Scalar {
        Scalar { re: Q::zero(), im: Q::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Scalar {
        Scalar { re: Q::one(), im: Q::zero() }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl From<Q> for Scalar {
    fn from(q: Q) -> Scalar {
        Scalar { re: q, im: Q::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re * &o.re, im: Q::zero() };
        }
        Scalar { re: &(&self.re * &o.re) - &(&self.im * &o.im), im: &(&self.re * &o.im) + &(&self.im * &o.re) }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{} i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{} - {} i", self.re, self.im.abs())
                } else {
                    write!(f, "{} + {} i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Serialized as `{"re": "p/q", "im": "r/s"}`.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            re: String,
            im: String,
        }
        Wire { re: self.re.to_string(), im: self.im.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            re: String,
            im: String,
        }
        let w = Wire::deserialize(d)?;
        let re = Q::parse(&w.re).ok_or_else(|| serde::de::Error::custom("bad fraction in re"))?;
        let im = Q::parse(&w.im).ok_or_else(|| serde::de::Error::custom("bad fraction in im"))?;
        Ok(Scalar { re, im })
    }
}
