use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable context mismatch: {0}")]
    Context(String),

    #[error("{0}")]
    Domain(String),

    #[error("the ideal is the unit ideal (empty variety)")]
    UnitIdeal,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    /// Malformed ideal file; line and column are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Input { line: usize, column: usize, message: String },

    #[error("Gröbner basis computation exceeded its budget of {budget} pair reductions")]
    Budget { budget: usize },

    #[error("no admissible linear change of coordinates found after {attempts} attempts")]
    Genericity { attempts: usize },

    #[error("fiber over the chosen base point is not zero-dimensional")]
    NonGenericPoint,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("sampling exhausted: {0}")]
    SamplingExhausted(String),

    #[error("neighbor graph is disconnected at k = {k}; increase k or sample more densely")]
    Disconnected { k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
