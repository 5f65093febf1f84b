//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("laurent flag mismatch between operands")]
    LaurentMismatch,

    #[error(
        "substitution hits a pole: zero (or a polynomial) substituted into a negative exponent"
    )]
    Pole,

    #[error("not divisible: remainder has {remainder_terms} terms, leading term {leading}")]
    NotDivisible {
        remainder_terms: usize,
        leading: String,
    },

    #[error("singular linear system")]
    Singular,

    #[error("inconsistent linear system")]
    Inconsistent,

    #[error("rank {rank} out of range for type {ty} (minimum {min}); pass permissive to override")]
    RankOutOfRange { ty: char, rank: usize, min: usize },

    #[error("group order {predicted} exceeds enumeration cap {cap}")]
    EnumerationCap { predicted: u128, cap: u128 },

    #[error("weight diamond size {size} exceeds cap {cap}")]
    WeightCap { size: usize, cap: usize },

    #[error("vector is not a root of the given system")]
    NotARoot,

    #[error("linear map is not expressible as a signed permutation")]
    NotSignedPerm,

    #[error("weight is not dominant for the given system")]
    NotDominant,

    #[error("weight is not integral for the given system")]
    NotIntegral,

    #[error("unknown symmetric-space family `{0}`")]
    UnknownFamily(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("degenerate seed: alternating symmetrization is identically zero")]
    DegenerateSeed,

    #[error("internal inconsistency: {0}")]
    Inconsistent2(String),
}

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Inconsistent2(msg.into())
    }
}
