use thiserror::Error;

/// Errors raised while building combinatorial objects or running actions on them.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed poset spec `{spec}`: {reason}")]
    PosetSpec { spec: String, reason: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("enumeration cap of {cap} exceeded while building {what}")]
    CapExceeded { what: String, cap: usize },

    #[error("poset `{0}` does not carry product-of-chains coordinates")]
    NotProductOfChains(String),

    #[error("poset `{0}` is not graded")]
    NotGraded(String),

    #[error("`{0}` is not one of the minuscule families")]
    NotMinuscule(String),

    #[error("restriction function is inconsistent: label set of element {element} became empty")]
    InconsistentRestriction { element: usize },

    #[error("invalid restriction function: {0}")]
    InvalidRestriction(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid lattice projection: {0}")]
    InvalidProjection(String),

    #[error("malformed statistic `{spec}`: {reason}")]
    StatisticSpec { spec: String, reason: String },

    #[error("action is not a bijection on `{set}`: {reason}")]
    NotBijective { set: String, reason: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
