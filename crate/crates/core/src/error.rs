use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision exhausted: need {needed}, have {available}")]
    PrecisionExhausted { needed: usize, available: usize },
    #[error("series precisions differ ({left} vs {right})")]
    PrecisionMismatch { left: usize, right: usize },
    #[error("series is not divisible by T^{shift}")]
    NotDivisible { shift: usize },
    #[error("series has zero constant term and cannot be inverted")]
    NotAUnit,

    #[error("generators are not primitive (gcd {gcd})")]
    NotPrimitive { gcd: u64 },
    #[error("not a plane branch semigroup: {0}")]
    NotPlaneBranch(String),
    #[error("generator {generator} lies in the semigroup generated by the smaller ones")]
    NotMinimal { generator: u64 },
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("invalid parameterization: {0}")]
    InvalidParameterization(String),
    #[error("equation is not in semiquasihomogeneous short form: {0}")]
    NotShortForm(String),
    #[error("Newton iteration stalled at residual order {order}")]
    NoConvergence { order: usize },

    #[error("the differential value set has no element outside the semigroup")]
    LambdaEmpty,
    #[error("{v0} and {v1} are not coprime")]
    NotCoprime { v0: u64, v1: u64 },
    #[error("value set and spectrum refer to different semigroups")]
    SemigroupMismatch,
    #[error("unsupported semigroup: {0}")]
    UnsupportedSemigroup(String),
    #[error("bad case: {0}")]
    BadCase(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("duplicate exponent {0}")]
    DuplicateExponent(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::PrecisionExhausted { .. } => "PRECISION_EXHAUSTED",
            Error::PrecisionMismatch { .. } => "PRECISION_MISMATCH",
            Error::NotDivisible { .. } => "NOT_DIVISIBLE",
            Error::NotAUnit => "NOT_A_UNIT",
            Error::NotPrimitive { .. } => "NOT_PRIMITIVE",
            Error::NotPlaneBranch(_) => "NOT_PLANE_BRANCH",
            Error::NotMinimal { .. } => "NOT_MINIMAL",
            Error::InvalidGenerators(_) => "INVALID_GENERATORS",
            Error::InvalidParameterization(_) => "INVALID_PARAMETERIZATION",
            Error::NotShortForm(_) => "NOT_SHORT_FORM",
            Error::NoConvergence { .. } => "NO_CONVERGENCE",
            Error::LambdaEmpty => "LAMBDA_EMPTY",
            Error::NotCoprime { .. } => "NOT_COPRIME",
            Error::SemigroupMismatch => "SEMIGROUP_MISMATCH",
            Error::UnsupportedSemigroup(_) => "UNSUPPORTED_SEMIGROUP",
            Error::BadCase(_) => "BAD_CASE",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::DuplicateExponent(_) => "DUPLICATE_EXPONENT",
        }
    }
}
