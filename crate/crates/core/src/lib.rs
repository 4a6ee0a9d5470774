//! Dirichlet characters and L-series over `(Z/kZ)*`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: sieve, factorization, totient, modular powers, primitive roots
//!   and cached discrete-logarithm tables.
//! - [`unit_group`]: the decomposition of `(Z/kZ)*` into cyclic factors with
//!   canonical generators, and the index-vector map onto exponent tuples.
//! - [`cyclotomic`]: exact roots of unity, integer formal sums of them, and an
//!   exact zero test through cyclotomic-polynomial divisibility.
//! - [`characters`]: Dirichlet characters as exponent tuples, their group law,
//!   classification, historical labels and exact orthogonality relations.
//! - [`lseries`]: zeta, L-series by period-block summation, Euler products,
//!   prime-power logarithms and the character-weighted residue-class identity.
//! - [`resolvent`]: Lagrange resolvents, root recovery and the primitive-root
//!   ordering used in cyclotomy.
//! - [`cli`]: report builders and renderers behind the `dirichlet` binary.

pub mod arith;
pub mod characters;
pub mod cli;
pub mod cyclotomic;
mod error;
pub mod lseries;
pub mod resolvent;
pub mod unit_group;

pub use crate::arith::{
    euler_phi, factorize, find_primitive_root, index_of, pow_mod, sieve_primes, Factorization,
};
pub use crate::characters::{
    character_from_label, enumerate_characters, orthogonality_over_characters,
    orthogonality_over_group, weighted_orthogonality, CharacterClass, DirichletCharacter,
    OrthogonalityCheck,
};
pub use crate::cyclotomic::{cyclotomic_polynomial, CycSum, RootValue};
pub use crate::error::{Error, Result};
pub use crate::lseries::{EvalOptions, LValue};
pub use crate::resolvent::ResolventSystem;
pub use crate::unit_group::{CyclicFactor, IndexVector, UnitGroupStructure};
