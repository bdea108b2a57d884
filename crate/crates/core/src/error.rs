use alloc::string::String;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("relations do not form a regular sequence: dimension fails to drop at relation {index}")]
    NotRegularSequence { index: usize },
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("composition of maps is not zero")]
    CompositionNotZero,
    #[error("ring is not a hypersurface")]
    NotHypersurface,
    #[error("Tor_{index} does not have finite length")]
    TailNotFiniteLength { index: usize },
    #[error("Tor lengths not yet periodic at bound {bound}; raise the bound")]
    NotStabilized { bound: usize },
    #[error("Tor lengths not yet quasi-polynomial at bound {bound}; raise the bound")]
    FitFailed { bound: usize },
    #[error("module is not torsion-free")]
    NotTorsionFree,
    #[error("pushforward chain blocked at stage {stage}: module has torsion")]
    ChainBlocked { stage: usize },
    #[error("ring has no declared minimal primes")]
    MissingMinPrimes,
}

pub type Result<T> = core::result::Result<T, Error>;
