use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank n must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("orientation has length {got}, expected {expected}")]
    OrientationLength { expected: usize, got: usize },
    #[error("invalid orientation `{0}`")]
    BadOrientation(String),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("letters at position {0} do not compose")]
    NonComposable(usize),
    #[error("letters at position {0} form a forbidden pair")]
    ForbiddenPair(usize),
    #[error("endpoints of the factors do not match")]
    IncompatibleEndpoints,
    #[error("the factors meet in a forbidden junction")]
    ForbiddenJunction,
    #[error("rank vector is not integral")]
    NonIntegralRank,
    #[error("string is not locally free")]
    NotLocallyFree,
    #[error("hook operation needs end sign {expected}, found {found}")]
    SignMismatch { expected: i8, found: i8 },
    #[error("word is not a band")]
    NotABand,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("vector is not a positive root")]
    NotARoot,
    #[error("root is not real")]
    NotRealRoot,
    #[error("outside enumeration bounds: {0}")]
    OutOfBounds(String),
    #[error("string is not in a class of simple regular strings")]
    NotSimpleRegular,
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("universe is missing an isomorphism class: {0}")]
    IncompleteUniverse(String),
    #[error("band evaluation not supported: {0}")]
    UnsupportedBandEvaluation(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}
