use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("defining polynomial is not monic")]
    NotMonic,
    #[error("defining polynomial is not squarefree")]
    NotSquarefree,
    #[error("field is not totally real: {real_roots} real roots for degree {degree}")]
    NotTotallyReal { real_roots: usize, degree: usize },
    #[error("basis does not span a ring: omega_{i} * omega_{j} has a non-integer coordinate")]
    BasisNotRing { i: usize, j: usize },
    #[error("integral basis matrix is singular")]
    SingularBasis,
    #[error("invalid field input: {0}")]
    InvalidField(String),
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("element is not an algebraic integer with respect to the basis")]
    NotAnAlgebraicInteger,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("refinement cap of {cap} rounds reached without a certified decision")]
    PrecisionExhausted { cap: u32 },
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheckFailure(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("target is not representable by the generators")]
    NotRepresentable,
    #[error("generators are not coprime")]
    NotCoprime,
    #[error("work limit of {limit} exceeded")]
    WorkLimitExceeded { limit: u64 },
    #[error("enumeration box too large: about {estimate} nodes, limit {limit}")]
    BoxTooLarge { estimate: String, limit: u64 },
    #[error("hypothesis not established: {0}")]
    HypothesisNotEstablished(String),
    #[error("parse error at {location}: {message}")]
    ParseError { location: String, message: String },
}

impl Error {
    /// Stable variant name, used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotMonic => "NotMonic",
            Error::NotSquarefree => "NotSquarefree",
            Error::NotTotallyReal { .. } => "NotTotallyReal",
            Error::BasisNotRing { .. } => "BasisNotRing",
            Error::SingularBasis => "SingularBasis",
            Error::InvalidField(_) => "InvalidField",
            Error::FieldMismatch => "FieldMismatch",
            Error::NotAnAlgebraicInteger => "NotAnAlgebraicInteger",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::InternalCrossCheckFailure(_) => "InternalCrossCheckFailure",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotRepresentable => "NotRepresentable",
            Error::NotCoprime => "NotCoprime",
            Error::WorkLimitExceeded { .. } => "WorkLimitExceeded",
            Error::BoxTooLarge { .. } => "BoxTooLarge",
            Error::HypothesisNotEstablished(_) => "HypothesisNotEstablished",
            Error::ParseError { .. } => "ParseError",
        }
    }
}
