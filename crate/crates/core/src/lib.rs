//! Gate entanglers for multipartite systems, built from braiding operators,
//! with the checks that go with them.
//!
//! * [`segre`] decides whether a pure state `Σ α_k |k_1⟩⊗⋯⊗|k_m⟩` is fully
//!   separable, by the quadric equations of the Segre variety and,
//!   independently, by the ranks of the mode flattenings.
//! * [`entangler`] builds the monomial operator `R` that maps the uniform
//!   product state to `Σ α_k |k⟩`, its pattern permutation `P` and the
//!   phase gate `R·P`, and certifies unitarity and entangling power.
//! * [`braid`] builds the phase-decorated swap solutions of the Yang–Baxter
//!   equation and checks the Artin relations in the induced representation.
//!
//! ```
//! use braidgate::{apply_entangler, is_fully_separable, CoefficientTensor, Convention};
//!
//! let alpha = CoefficientTensor::from_real(&[2, 2], &[1.0, 1.0, 1.0, -1.0]).unwrap();
//! let out = apply_entangler(&alpha, Convention::Theorem).unwrap();
//! assert_eq!(out.amplitudes(), alpha.entries());
//!
//! let verdict = is_fully_separable(&out.to_tensor(), 1e-9).unwrap();
//! assert!(!verdict.separable);
//! assert_eq!(verdict.max_violation, 2.0);
//! ```
//!
//! The `book/` directory at the repository root has the longer guide; its
//! code blocks are compiled as doctests of this crate.

#![forbid(unsafe_code)]

pub mod braid;
pub mod entangler;
mod error;
pub mod index;
pub mod matrix;
pub mod random;
pub mod segre;
pub mod tensor;

/// Double-precision complex scalar.
pub type C64 = num_complex::Complex64;

pub use braid::{
    braid_generator_rep, check_algebraic_yang_baxter, check_braid_relations, check_yang_baxter,
    evaluate_braid_word, flat_crossing, r_from_phase_matrix, swap_gate, BraidRelationsReport,
    BraidWord, Relation, RelationCheck, YbeReport,
};
pub use entangler::{
    apply_entangler, certify_entangler, construct_entangler, pattern_permutation, phase_gate,
    CertifyTolerances, Convention, EntanglerCertificate, MonomialGateMatrix, DEFAULT_UNITARY_TOL,
};
pub use error::{Error, Result};
pub use index::{Dims, MultiIndex};
pub use matrix::{DenseMatrix, UnitarityCheck};
pub use random::{random_phase_matrix, random_phases};
pub use segre::{
    evaluate_quadric, is_fully_separable, quadric_generators, rank1_oracle, segre_map,
    QuadricGenerator, SeparabilityVerdict, DEFAULT_ORACLE_TOL, DEFAULT_SEPARABILITY_TOL,
};
pub use tensor::{uniform_product_state, CoefficientTensor, StateVector};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tensors.md")]
    mod tensors {}
    #[doc = include_str!("../../../book/src/segre.md")]
    mod segre {}
    #[doc = include_str!("../../../book/src/entangler.md")]
    mod entangler {}
    #[doc = include_str!("../../../book/src/braid.md")]
    mod braid {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
