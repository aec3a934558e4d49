use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("non-square selection: {rows} rows, {cols} columns")]
    NonSquareSelection { rows: usize, cols: usize },

    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),

    #[error("denominator is divisible by the characteristic {0}")]
    DenominatorDivisibleByModulus(u64),

    #[error("operation is undefined for the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("linear system has no strictly positive integer solution")]
    NoPositiveSolution,

    #[error("solution space has dimension {0}, expected 1")]
    SolutionDimension(usize),

    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
}
