//! Exact classical invariant theory of binary quartics and quintics.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`], [`mpoly`], [`matrix`]: exact scalars, sparse multivariate
//!   polynomials, fraction-free determinants and rational linear algebra.
//! - [`forms`]: binary forms, the `GL₂` action, transvectants, resultants
//!   and discriminants.
//! - [`invariants`]: S, T, j of the quartic; J, K, L, H of the quintic; the
//!   Sylvester canonical form and the dimensions of the invariant ring.
//! - [`beauville`]: the six degree-24 invariants ℬ₀ … ℬ₅ built from the
//!   j-invariants of the five 4-point subsets of a quintic's roots.
//! - [`verify`]: the batch checks exposed by the command-line tool.

pub mod beauville;
pub mod error;
pub mod forms;
pub mod invariants;
pub mod matrix;
pub mod mpoly;
pub mod rational;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use forms::BinaryForm;
pub use mpoly::MPoly;
pub use rational::Rational;
