use thiserror::Error;

/// Failures reported by the library. Every variant is either an input that
/// violates an operation's contract or a computation that hit a resource cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("invalid modulus {0}: must be at least {1}")]
    InvalidModulus(String, u32),

    #[error("group is infinite")]
    InfiniteGroup,

    #[error("group of order {order} exceeds the brute-force cap {cap}")]
    GroupTooLarge { order: String, cap: usize },

    #[error("lattice containment violated: {0}")]
    NotContained(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("enumeration cap of {cap} group elements exceeded")]
    CapExceeded { cap: usize },

    #[error("sublattice is not of full rank: rank {rank} in dimension {dim}")]
    NotFullRank { rank: usize, dim: usize },

    #[error("covering is trivial (minimal inducing dimension 0); it has no obstruction class")]
    TrivialCovering,

    #[error("stabilizer of order {order} is not abelian")]
    NonAbelian { order: usize },

    #[error("flag dimension {n} exceeds the exhaustive-search cap {cap}")]
    FlagTooLarge { n: usize, cap: usize },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::NotPrime(_) => "not_prime",
            Error::InvalidModulus(..) => "invalid_modulus",
            Error::InfiniteGroup => "infinite_group",
            Error::GroupTooLarge { .. } => "group_too_large",
            Error::NotContained(_) => "not_contained",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::NonCommuting(..) => "non_commuting",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::NotFullRank { .. } => "not_full_rank",
            Error::TrivialCovering => "trivial_covering",
            Error::NonAbelian { .. } => "non_abelian",
            Error::FlagTooLarge { .. } => "flag_too_large",
            Error::InvalidFlag(_) => "invalid_flag",
        }
    }

    /// True when the input itself is malformed, as opposed to a well-formed
    /// request whose computation could not be completed.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::ShapeMismatch(_)
                | Error::NotPrime(_)
                | Error::InvalidModulus(..)
                | Error::NotContained(_)
                | Error::InvalidPermutation(_)
                | Error::NonCommuting(..)
                | Error::NotFullRank { .. }
                | Error::InvalidFlag(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
