use thiserror::Error;

use crate::domain::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("elements belong to different domains ({left} vs {right})")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("operation undefined on the zero element")]
    ZeroElement,

    #[error("monomial coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("value `{value}` is not an element of {domain}")]
    NotInDomain { value: String, domain: Domain },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent arithmetic overflowed the 64-bit range")]
    ExponentOverflow,

    #[error("map is not an endomorphism ({source_vars} -> {target_vars} variables)")]
    NotEndomorphism {
        source_vars: usize,
        target_vars: usize,
    },

    #[error("map is not monic")]
    NotMonic,

    #[error("X{0} is mapped to zero")]
    ZeroImage(usize),

    #[error("map is not a retraction")]
    NotRetraction,

    #[error("retraction is degenerate: X{0} does not appear in the image")]
    Degenerate(usize),

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("matrix is not standard (diagonal is not non-increasing)")]
    NotStandard,

    #[error("row {0} of the matrix is zero")]
    ZeroRow(usize),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("search space of {candidates} candidates exceeds the cap of {cap}")]
    SearchSpaceTooLarge { candidates: u128, cap: u128 },

    #[error("count overflowed")]
    CountOverflow,
}
