use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for a system of {len} equations")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("equation {index} has {found} coefficients, expected {expected}")]
    ArityMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("subsystem size {size} exceeds the {len} available equations")]
    SubsetTooLarge { size: usize, len: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("disk radius must be strictly positive")]
    NonPositiveRadius,
    #[error("the family needs at least {needed} disks, got {found}")]
    TooFewDisks { needed: usize, found: usize },
    #[error("the region is empty")]
    EmptyRegion,
    #[error("query disk meets the region")]
    NotDisjoint,
    #[error("exhaustive search is limited to {limit} equations, got {found}")]
    TooLargeForOracle { limit: usize, found: usize },
    #[error("grid needs a positive resolution and a nonempty box")]
    BadGrid,
    #[error("right-hand side has {found} entries, matrix has {expected} rows")]
    RhsLength { expected: usize, found: usize },
    #[error("malformed instance: {0}")]
    Instance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
