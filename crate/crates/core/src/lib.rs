//! Coxeter combinatorics of μ-involutions and their Schubert polynomials.

pub mod composition;
pub mod error;
pub mod involutions;
pub mod mu_involutions;
pub mod permutations;
pub mod polynomials;
pub mod schubert_mu;
pub mod verify;

pub use composition::Composition;
pub use error::{Error, Result};
pub use involutions::{CycleSet, Involution};
pub use mu_involutions::MuInvolution;
pub use permutations::{BlockWord, Permutation, Word};
pub use polynomials::MultiPolynomial;
