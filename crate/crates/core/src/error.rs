use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension {dim} exceeds the supported maximum {max}")]
    DimensionGuard { dim: usize, max: usize },

    #[error("cannot parse type spec {spec:?}: {reason}")]
    TypeSpec { spec: String, reason: String },

    #[error("unsupported rank {rank} for type {family}")]
    UnsupportedRank { family: char, rank: usize },

    #[error("weight is not dominant: fundamental coordinate {} is negative", .index + 1)]
    NotDominant { index: usize },

    #[error("weight lies on a chamber wall: fundamental coordinate {} is zero", .index + 1)]
    OnChamberWall { index: usize },

    #[error("lambda is outside the closed Weyl chamber: fundamental coordinate {} is negative", .index + 1)]
    LambdaOutsideChamber { index: usize },

    #[error("Weyl group has {size} elements, above the cap of {cap}")]
    WeylCapExceeded { size: u128, cap: u128 },

    #[error("scale guard: {what} (rank {rank}, limit {limit}); pass the override flag to proceed")]
    ScaleGuard { what: String, rank: usize, limit: usize },

    #[error("start point is not in the cone")]
    StartNotInCone,

    #[error("basis {0} is not available for this root system")]
    BasisUnavailable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("path construction exceeded {limit} steps")]
    PathGuard { limit: usize },

    #[error("invalid input for {field}: {reason}")]
    Invalid { field: String, reason: String },
}

impl Error {
    /// Errors caused by the size guards rather than by bad input.
    pub fn is_scale_guard(&self) -> bool {
        matches!(self, Error::ScaleGuard { .. } | Error::WeylCapExceeded { .. } | Error::DimensionGuard { .. })
    }
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
