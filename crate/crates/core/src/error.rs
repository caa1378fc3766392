use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty lcm: the lcm of an empty set of monomials is undefined")]
    EmptyLcm,

    #[error("monomials live in different variable contexts ({left} vs {right} variables)")]
    ContextMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: unknown variable `{name}`")]
    UnknownVariable { line: usize, name: String },

    #[error("line {line}: negative exponent")]
    NegativeExponent { line: usize },

    #[error("line {line}: generator equals 1")]
    UnitGenerator { line: usize },

    #[error("the ideal has no generators")]
    EmptyIdeal,

    #[error("generator index {index} out of range (ideal has {count} generators)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "{count} generators exceed the exhaustive threshold of {threshold}; \
         force the search or use the courts-first heuristic"
    )]
    ThresholdExceeded { count: usize, threshold: usize },

    #[error("{count} generators exceed the supported bound of {bound}")]
    TooManyGenerators { count: usize, bound: usize },

    #[error("the Lyubeznik resolution under this order is not minimal; use the Taylor oracle for Betti numbers")]
    NotMinimal,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
