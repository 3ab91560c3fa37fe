use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {prime} must exceed the socle degree {degree}")]
    PrimeTooSmall { prime: u64, degree: u32 },
    #[error("field mismatch: expected p = {expected}, found p = {found}")]
    FieldMismatch { expected: u64, found: u64 },

    #[error("index {index} out of range for {count} monomials")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("operator degree {operator} exceeds form degree {form}")]
    DegreeExceeded { operator: u32, form: u32 },
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("all coefficients of the linear form are zero")]
    ZeroForm,
    #[error("monomial has degree {found}, expected {expected}")]
    NotHomogeneous { expected: u32, found: u32 },

    #[error("row {row} has length {found}, expected {expected}")]
    RaggedInput { row: usize, expected: usize, found: usize },
    #[error("requested type {requested} exceeds available dimension {available}")]
    TypeTooLarge { requested: usize, available: usize },
    #[error("random combinations stayed dependent after {attempts} attempts")]
    GenericityFailure { attempts: usize },

    #[error("generator {index} lies in the span of the preceding generators")]
    DependentGenerators { index: usize },
    #[error("generator {index} has degree {found}, expected {expected}")]
    MixedDegrees { index: usize, expected: u32, found: u32 },
    #[error("generator {index} has {found} variables, expected {expected}")]
    MixedVariableCounts { index: usize, expected: usize, found: usize },
    #[error("presentation has no generators")]
    EmptyPresentation,
    #[error("degree {degree} outside the allowed range {min}..={max}")]
    DegreeOutOfRange { degree: u32, min: u32, max: u32 },

    #[error("h_d = 1 at d = {d}: the truncation is Gorenstein, so the lower-bound formula has a zero denominator")]
    DegenerateSocle { d: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
