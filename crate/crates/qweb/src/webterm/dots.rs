use super::build::*;
use super::{Morphism, WebError};
use crate::combinat::{Partition, StrictPartition};

/// `ω_{a,r}`: split off an `r`-leg, put a black dot on it, merge back.
pub fn omega(a: u32, r: u32) -> Morphism {
    if r > a {
        return Morphism::zero(&[a], &[a]);
    }
    c(&[merge(r, a - r), t(&[bdot(r), id(a - r)]), split(r, a - r)])
}

/// `ω°_{a,r}`: black dot on the `r`-leg, white dot on the complement.
pub fn omega_circ(a: u32, r: u32) -> Morphism {
    if r >= a {
        return Morphism::zero(&[a], &[a]);
    }
    c(&[merge(r, a - r), t(&[bdot(r), wdot(a - r)]), split(r, a - r)])
}

/// Elementary dot packet `g_{ν,η}` on a strand of thickness `a`.
pub fn packet(a: u32, nu: &StrictPartition, eta: &Partition) -> Result<Morphism, WebError> {
    if a == 0 {
        return Err(WebError::BadPacket("zero thickness".into()));
    }
    if nu.parts().iter().any(|&p| p > a) {
        return Err(WebError::BadPacket(format!("strict part of {} exceeds {}", nu, a)));
    }
    if eta.parts().iter().any(|&p| p > a) {
        return Err(WebError::BadPacket(format!("part of {} exceeds {}", eta, a)));
    }
    let mut fs: Vec<Morphism> = nu.bar().iter().map(|&r| omega_circ(a, r)).collect();
    fs.extend(eta.parts().iter().map(|&r| omega(a, r)));
    if fs.is_empty() {
        return Ok(id(a));
    }
    Ok(c(&fs))
}

/// `(a) → (1,…,1)` by peeling thin strands off the left.
pub fn thin_split(a: u32) -> Morphism {
    if a <= 1 {
        return id(a);
    }
    c(&[t(&[id(1), thin_split(a - 1)]), split(1, a - 1)])
}

/// `(1,…,1) → (a)`.
pub fn thin_merge(a: u32) -> Morphism {
    if a <= 1 {
        return id(a);
    }
    c(&[merge(1, a - 1), t(&[id(1), thin_merge(a - 1)])])
}
