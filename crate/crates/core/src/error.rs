use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomials live in different rings ({left} vs {right} variables)")]
    ContextMismatch { left: usize, right: usize },

    #[error("expected degree {expected}, found degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("the unit monomial has no largest variable")]
    UnitMonomial,

    #[error("invalid ambient context: {0}")]
    InvalidContext(String),

    #[error("invalid lexsegment: {0}")]
    InvalidSegment(String),

    #[error("set of monomials is empty")]
    EmptySet,

    #[error("monomials of mixed degrees")]
    MixedDegrees,

    #[error("generator sequence contains a duplicate at position {0}")]
    DuplicateGenerator(usize),

    #[error("linear quotients fail at position {position}")]
    NotLinearQuotients { position: usize },

    #[error("monomial {0} is not in the ideal")]
    NotInIdeal(String),

    #[error("variable x{var} is not in set({generator})")]
    NotInSet { var: usize, generator: String },

    #[error("{count} generators exceed the capacity {cap}")]
    CapacityExceeded { count: usize, cap: usize },

    #[error("unsupported construction: {0}")]
    Unsupported(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("variable index x{index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
}
