//! Exact computational toolkit for point sets in GF(2)^n viewed as simple
//! binary matroids: character-sum (Walsh-Hadamard) analysis, uniformity and
//! regular-subspace decompositions, sum-tuple and circuit counting, critical
//! numbers, and executable verifiers for the counting bounds that tie these
//! together. Everything numeric is exact: machine integers where bounds are
//! proven, arbitrary precision elsewhere; no floating point anywhere.

pub mod error;
pub mod gf2;
pub mod pointset;
pub mod spectral;
pub mod matroid;
pub mod critical;
pub mod regularity;
pub mod harness;
pub mod cli;

pub use error::{Error, Result};

/// Exact rational type used for every density, threshold, and ratio.
pub type Rational = num_rational::BigRational;
