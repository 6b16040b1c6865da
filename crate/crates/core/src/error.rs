use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analyzing an algebra.
///
/// The variants fall into four groups that the command line maps onto exit
/// codes: malformed input, exhausted enumeration budgets, failed
/// preconditions of a particular operation, and theorem violations. The last
/// group never fires on a correct implementation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus {0} is too large (must be below 65536)")]
    ModulusTooLarge(u64),

    #[error("value {value} is not reduced modulo {p}")]
    NotReduced { value: u64, p: u32 },

    #[error("operands live over different fields (p = {0} and p = {1})")]
    FieldMismatch(u32, u32),

    #[error("multiplication table is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit vector fails the unit law at basis index {0}")]
    UnitLaw(usize),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("quotient by the whole algebra is the zero ring")]
    DegenerateQuotient,

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("hypotheses of the graded formulas do not hold: {0}")]
    Hypothesis(String),

    #[error("decomposition unavailable: {0}")]
    DecompositionUnavailable(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),

    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: String,
    },

    #[error("cannot decide central essentiality: {0}")]
    Undecidable(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, needed: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what: what.into(),
            needed: needed.to_string(),
            cap: cap.to_string(),
        }
    }

    /// Budget-type failure, as opposed to bad input or a broken theorem.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Undecidable(_))
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
