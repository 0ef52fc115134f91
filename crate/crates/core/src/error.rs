use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: Vec<u32>, reason: &'static str },
    #[error("cannot parse {input:?} as {what}")]
    Parse { input: String, what: &'static str },
    #[error("left operand of {op} must be non-empty")]
    EmptyLeftOperand { op: &'static str },
    #[error("element is not in the {algebra} subalgebra: {detail}")]
    NotInSubalgebra { algebra: &'static str, detail: String },
    #[error("rational function is not a polynomial; denominator {denominator}")]
    NonPolynomial { denominator: String },
    #[error("expected {expected} basis, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("compositions with zero parts are not allowed here")]
    ExtendedKey,
    #[error("vectors of several degrees passed to a graded computation")]
    MixedGrading,
    #[error("malformed path {path:?}: {reason}")]
    MalformedPath { path: String, reason: &'static str },
    #[error("series constant term must be 1")]
    BadConstantTerm,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{what} = {value} exceeds supported maximum {max}")]
    OutOfRange { what: &'static str, value: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
