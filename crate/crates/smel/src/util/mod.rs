//! Shared numerical utilities: quadrature, interpolation, isotonic
//! projection, RNG substreams, and small-sample statistics.

pub mod interp;
pub mod pava;
pub mod quad;
pub mod rng;
pub mod stats;
