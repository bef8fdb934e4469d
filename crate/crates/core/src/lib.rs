//! Monomial retractions of polynomial rings `R[X_1, .., X_n]`.
//!
//! A retraction sending every variable to zero or a monomial is described
//! by its coefficients and its exponent matrix. This crate checks
//! retraction-hood, computes the structural invariants of exponent
//! matrices, conjugates retractions into standard form, certifies that the
//! retract is a polynomial ring, and enumerates the monic retractions that
//! share a retract. The [`oracle`] module re-derives the key facts by brute
//! force so the two can be compared.

pub mod cli;
pub mod crosscheck;
pub mod domain;
pub mod error;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod same_retract;
pub mod structure;
pub mod transform;

pub use domain::{Domain, DomainElement};
pub use error::{Error, Result};
pub use matrix::{ExponentMatrix, StructureReport};
pub use monomial::{Image, Monomial, MonomialMap};
pub use same_retract::GammaSets;
pub use structure::{MonicAssociation, RetractStructure, WitnessReport};
pub use transform::Permutation;
