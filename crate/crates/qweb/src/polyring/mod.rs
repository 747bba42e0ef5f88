//! Scalars, polynomials, symmetric functions and exact linear algebra.

pub mod checks;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod sym;

pub use linalg::{Echelon, SparseVec};
pub use poly::{Monomial, MultiPoly};
pub use rational::Q;
pub use scalar::Scalar;
pub use sym::{DotSymbol, GMethod, LeadingState};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("minor index ({i},{j}) out of range for s={s}")]
    MinorIndex { i: usize, j: usize, s: usize },
    #[error("{0:?} is not a strict partition with parts <= {1}")]
    BadLambda(Vec<u32>, usize),
    #[error("k={k} exceeds thickness a={a}")]
    TooManyBars { k: usize, a: usize },
    #[error("symbol thickness {expected} does not match word length {got}")]
    WordLength { expected: usize, got: usize },
}
