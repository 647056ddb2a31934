use thiserror::Error;

/// Errors raised by the exact computations in this crate.
///
/// Variants fall into two groups: input errors (malformed shapes, points,
/// parse failures) and mathematical refusals (a non-simple spectrum, a pole,
/// a precondition of a theorem that does not hold at the requested point).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization point: factor {0} vanishes")]
    PoleAtPoint(String),
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("spectrum is not simple: {0}")]
    SpectrumNotSimple(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("kappa must be specialized to 1 for this operation")]
    KappaNotOne,
    #[error("truncation exceeded: degree {degree} > {max}")]
    TruncationExceeded { degree: usize, max: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not proven: {0}")]
    NotProven(String),
}

impl Error {
    /// Stable machine-readable code, used by the command line front end.
    pub fn reason_code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::PoleAtPoint(_) => "pole_at_point",
            Error::OutOfDomain(_) => "out_of_domain",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::InvalidInput(_) => "invalid_input",
            Error::Parse(_) => "parse_error",
            Error::ConsistencyFailure(_) => "consistency_failure",
            Error::SpectrumNotSimple(_) => "spectrum_not_simple",
            Error::OutOfScope(_) => "out_of_scope",
            Error::KappaNotOne => "kappa_not_one",
            Error::TruncationExceeded { .. } => "truncation_exceeded",
            Error::PreconditionFailed(_) => "precondition_failed",
            Error::NotProven(_) => "not_proven",
        }
    }

    /// True for refusals that are properties of the mathematics at the
    /// requested point rather than of malformed input.
    pub fn is_mathematical_refusal(&self) -> bool {
        matches!(
            self,
            Error::SpectrumNotSimple(_)
                | Error::PoleAtPoint(_)
                | Error::OutOfScope(_)
                | Error::KappaNotOne
                | Error::PreconditionFailed(_)
                | Error::NotProven(_)
                | Error::ConsistencyFailure(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
