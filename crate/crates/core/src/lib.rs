//! Exact computer algebra for the mirror theorem on the quintic threefold.
//!
//! The crate builds the hypergeometric I-series, checks the Picard–Fuchs
//! equation and the linear sigma-model identity, performs the mirror
//! transformation, extracts the Yukawa coupling and inverts the multiple
//! cover formula for the instanton numbers `n_d`. The equivariant side
//! (fixed-point localizations, the recursion relation, polynomiality and the
//! uniqueness solver) is in [`recursion`]. Everything is exact over ℚ.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod hypergeom;
pub mod instanton;
pub mod mirror;
pub mod recursion;
pub mod schubert;
pub mod sigma_model;

pub use error::{Error, Result};
