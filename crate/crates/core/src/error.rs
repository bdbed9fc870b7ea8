use thiserror::Error;

/// Errors surfaced by set-system and duality operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("ground set is invalid: {0}")]
    InvalidGroundSet(String),

    #[error("mask {mask:#x} has bits outside a ground set of {n} elements")]
    MaskOutOfRange { mask: u32, n: usize },

    #[error("family has no members")]
    EmptyFamily,

    #[error("duplicate member {0}")]
    DuplicateMember(String),

    #[error("set {0} is not feasible")]
    NotFeasible(String),

    #[error("family is not closed under union; bases are not unique")]
    NotUnionClosed,

    #[error("no feasible subset of {0}")]
    NoFeasibleSubset(String),

    #[error("truncation level {k} is outside 1..={rank}")]
    InvalidTruncationLevel { k: usize, rank: usize },

    #[error("not a {k}-truncated antimatroid: {reason}")]
    NotTruncatedAntimatroid { k: usize, reason: String },

    /// The accessible-system characterizations (exchange, union-closure,
    /// interval property) disagreed. This is an implementation bug, never a
    /// property of an input.
    #[error("recognizer consistency violation: {0}")]
    ConsistencyViolation(String),

    #[error("function has no value for {0}")]
    MissingValue(String),

    #[error("empty continuation set at feasible {0}")]
    EmptyContinuationSet(String),

    #[error("interval [{set}, E-{x}] contains no valued member")]
    EmptyInterval { x: String, set: String },

    #[error("linkage function does not represent the set function")]
    NotARepresentation,

    #[error("system satisfies the truncated interval property; nothing to exploit")]
    NoViolation,

    #[error("guardrail exceeded: {0}")]
    GuardrailExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
