use thiserror::Error;

/// Errors raised by constructors and parsers. Axiom failures are never
/// errors; they are reported through [`crate::report::ValidationReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus {0:?} is not an irreducible polynomial of the required degree")]
    ReducibleModulus(Vec<u64>),

    #[error("field too large: {0} elements (limit {1})")]
    TooLarge(usize, usize),

    #[error("not a field: {0}")]
    NotAField(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("order {order} above enumeration cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("window too large: {0}")]
    WindowTooLarge(String),

    #[error("not a Krasner valuation on the window: {0}")]
    NotKrasner(String),

    #[error("inconsistent valuation ring: {0}")]
    InconsistentRing(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
