//! Seeded unimodular coefficients.
//!
//! Angles come from ChaCha8 and are turned into `e^{iθ}` with the pure-Rust
//! `libm` routines, so a seed gives the same bits on every platform.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::index::Dims;
use crate::matrix::DenseMatrix;
use crate::tensor::CoefficientTensor;
use crate::C64;

/// `count` values `e^{iθ}` with `θ` uniform on `[0, 2π)`.
pub fn random_unimodular(count: usize, seed: u64) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let theta = rng.gen::<f64>() * TAU;
            let (s, c) = libm::sincos(theta);
            C64::new(c, s)
        })
        .collect()
}

/// A coefficient tensor of seeded random phases.
pub fn random_phases(dims: &Dims, seed: u64) -> CoefficientTensor {
    CoefficientTensor::new(dims.clone(), random_unimodular(dims.total(), seed))
        .expect("phases are finite and sized to dims")
}

/// An `n × n` matrix of seeded random phases (row-major, same stream as
/// [`random_phases`] on dims `(n, n)`).
pub fn random_phase_matrix(n: usize, seed: u64) -> Result<DenseMatrix> {
    DenseMatrix::new(n, n, random_unimodular(n * n, seed))
}
