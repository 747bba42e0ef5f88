//! Exact symbolic engine for the affine web supercategory of type Q.

pub mod cli;
pub mod combinat;
pub mod normalform;
pub mod polyring;
pub mod qrep;
pub mod sergeev;
pub mod webterm;
