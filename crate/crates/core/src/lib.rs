//! Exact computations with current algebras `a[t]`: the free Lie algebra
//! realization, finite-dimensional modules given by pairs `(ρ, η)`, module
//! constructions and Ext¹ between them. All arithmetic is over Q.

pub mod constructions;
pub mod curmod;
pub mod error;
pub mod extcalc;
pub mod freelie;
pub mod liealg;
pub mod qlinalg;

pub use error::{Error, Result};
