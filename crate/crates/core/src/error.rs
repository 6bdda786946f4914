use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyFamily,
    #[error("bases have different sizes: {first:?} has {} elements, {other:?} has {}", first.len(), other.len())]
    MixedCardinality { first: Subset, other: Subset },
    #[error("exchange axiom fails: removing {element} from {b1:?} admits no replacement from {b2:?}")]
    ExchangeFailure {
        b1: Subset,
        b2: Subset,
        element: usize,
    },
    #[error("subset {subset:?} is not contained in the ground set [{n}]")]
    OutOfRange { subset: Subset, n: usize },
    #[error("matroid has loops: {0:?}")]
    HasLoops(Subset),
    #[error("ground set of size {n} exceeds the cap of {cap} for {what}")]
    CapExceeded { n: usize, cap: usize, what: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not submodular: z({s:?}) + z({t:?}) < z(union) + z(intersection)")]
    NotSubmodular { s: Subset, t: Subset },
    #[error("ground set sizes disagree: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no generic weight found after {attempts} draws")]
    GenericityExhausted { attempts: u32 },
    #[error("weight is not certified generic for this matroid")]
    WeightNotCertified,
    #[error("Snapper polynomial of degree {degree} disagrees with chi at a = {power}: fitted {fitted}, computed {computed}")]
    DegreeMismatch {
        degree: usize,
        power: i64,
        fitted: i128,
        computed: i128,
    },
    #[error("expected {expected} sets, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("coefficient {coefficient} on monomial {monomial:?} is not 0 or 1")]
    NonUnitCoefficient { monomial: Subset, coefficient: i64 },
    #[error("support is not closed under subsets: {present:?} present but {missing:?} absent")]
    NotDownwardClosed { present: Subset, missing: Subset },
    #[error("maximal monomials have different sizes: {first:?} and {other:?}")]
    NotPure { first: Subset, other: Subset },
    #[error("polynomial has empty support")]
    EmptySupport,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code for reports and exit paths.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyFamily => "EMPTY_FAMILY",
            Error::MixedCardinality { .. } => "MIXED_CARDINALITY",
            Error::ExchangeFailure { .. } => "EXCHANGE_FAILURE",
            Error::OutOfRange { .. } => "OUT_OF_RANGE",
            Error::HasLoops(_) => "HAS_LOOPS",
            Error::CapExceeded { .. } => "CAP_EXCEEDED",
            Error::Parse(_) => "PARSE_ERROR",
            Error::NotSubmodular { .. } => "NOT_SUBMODULAR",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::GenericityExhausted { .. } => "GENERICITY_EXHAUSTED",
            Error::WeightNotCertified => "WEIGHT_NOT_CERTIFIED",
            Error::DegreeMismatch { .. } => "DEGREE_MISMATCH",
            Error::WrongArity { .. } => "WRONG_ARITY",
            Error::NonUnitCoefficient { .. } => "NON_UNIT_COEFFICIENT",
            Error::NotDownwardClosed { .. } => "NOT_DOWNWARD_CLOSED",
            Error::NotPure { .. } => "NOT_PURE",
            Error::EmptySupport => "EMPTY_SUPPORT",
            Error::Overflow(_) => "OVERFLOW",
            Error::Io(_) => "IO_ERROR",
            Error::Internal(_) => "INTERNAL",
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
