use thiserror::Error;

/// Errors shared by every module of the laboratory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring order {0}: need at least 2 elements")]
    InvalidOrder(usize),

    #[error("ring order {order} exceeds the cap of {cap}")]
    SizeCap { order: usize, cap: usize },

    #[error("ring tables are not a commutative ring with identity: {0}")]
    AxiomViolation(String),

    #[error("quotient by the full ring is not a ring")]
    ImproperQuotient,

    #[error("power intersection needs a proper ideal")]
    ImproperIdeal,

    #[error("module action is not defined: {0}")]
    ModuleAction(String),

    #[error("arguments belong to different rings")]
    RingMismatch,

    #[error("map is not a ring isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("ideal meets the multiplicative set (element index {elem})")]
    DisjointnessViolation { elem: usize },

    #[error("multiplicative set contains 0, which this check forbids")]
    ZeroInMultSet,

    #[error("computed S-radical is not an ideal: {0}")]
    SRadicalNotIdeal(String),

    #[error("search exhausted where a theorem guarantees a witness: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
