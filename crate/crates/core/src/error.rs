use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("graded indeterminate {0} is not supported by max-min composition")]
    GradedIndeterminateUnsupported(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("component {component} is not bidiagonalizable: eigenvalue {eigenvalue} has {found} independent eigenvectors for multiplicity {multiplicity}")]
    NotBidiagonalizable {
        component: usize,
        eigenvalue: String,
        found: usize,
        multiplicity: usize,
    },
    #[error("characteristic polynomial of component {component} does not split; irreducible part {factor}")]
    CharPolyDoesNotSplit { component: usize, factor: String },
    #[error("unknown space family `{0}`")]
    UnknownFamily(String),
    #[error("input bivectors are linearly dependent at index {index} (component {component})")]
    LinearlyDependentInput { index: usize, component: usize },
    #[error("zero norm encountered at index {index} (component {component})")]
    ZeroNormEncountered { index: usize, component: usize },
    #[error("basis is not biorthogonal: {0}")]
    BasisNotBiorthogonal(String),
    #[error("unsupported component family for complement: {0}")]
    UnsupportedComponentFamily(String),
    #[error("inner product rejected: {0}")]
    InvalidInnerProduct(String),
    #[error("parity matrix of component {component} has rank {rank}, expected {expected}")]
    RankDeficientParity {
        component: usize,
        rank: usize,
        expected: usize,
    },
    #[error("generator matrix of component {component} has rank {rank}, expected {expected}")]
    RankDeficientGenerator {
        component: usize,
        rank: usize,
        expected: usize,
    },
    #[error("generator polynomial {generator} does not divide x^{n} - 1")]
    GeneratorDoesNotDivide { generator: String, n: usize },
    #[error("enumeration of {count} words exceeds the cap {cap}")]
    EnumerationTooLarge { count: String, cap: u64 },
    #[error("decoder exhausted all {tried} bases of component {component}")]
    DecoderExhausted { component: usize, tried: usize },
    #[error("invalid basis for component {component}: {reason}")]
    InvalidBasis { component: usize, reason: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("singular system (rank {rank} of {size})")]
    SingularSystem { rank: usize, size: usize },
    #[error("both split matrices of component {component} are singular")]
    BothSplitsSingular { component: usize },
    #[error("no rational roots in split component {0}")]
    NoRationalRoots(usize),
    #[error("cannot parse `{literal}` as {kind}")]
    Parse { literal: String, kind: String },
    #[error("expected scalar kind {expected}, found {found}")]
    ScalarKindMismatch { expected: String, found: String },
    #[error("malformed document at line {line}, column {column}: {message}")]
    Document { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Error {
    Error::ShapeMismatch {
        op,
        detail: detail.into(),
    }
}

pub(crate) fn parse_err(literal: &str, kind: &str) -> Error {
    Error::Parse {
        literal: literal.to_string(),
        kind: kind.to_string(),
    }
}
