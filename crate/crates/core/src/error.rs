use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points span an affine space of dimension {found}, expected {expected}")]
    NotFullDimensional { expected: usize, found: usize },
    #[error("{what} count {count} exceeds the configured cap of {cap}")]
    TooLarge {
        what: &'static str,
        count: usize,
        cap: usize,
    },
    #[error("point {0:?} is not a vertex of the polytope")]
    RedundantPoint(Vec<i64>),
    #[error("generator {index} does not map the polytope onto itself")]
    NotSymmetry { index: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("polytope is not a simplex")]
    NotSimplex,
    #[error("polytope is not simple")]
    NotSimple,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("dual polytope is not invariant under the inverse-transpose action")]
    DualNotInvariant,
    #[error("phi[t] is not a polynomial up to the truncation order")]
    PhiNotPolynomial,
    #[error("induced character value {numerator}/{denominator} is not an integer")]
    NotInteger { numerator: i64, denominator: i64 },
    #[error("multiplicity {numerator}/{denominator} is not an integer")]
    NonIntegralMultiplicity { numerator: i64, denominator: i64 },
    #[error("multiplicity {0} is negative")]
    NegativeMultiplicity(i64),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input itself is malformed.
    Input,
    /// The input is well formed but outside what can be computed.
    Scope,
    /// An internal consistency check failed.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NotFullDimensional { .. }
            | TooLarge { .. }
            | RedundantPoint(_)
            | NotSymmetry { .. }
            | GroupTooLarge { .. }
            | UnknownScenario(_)
            | InvalidInput(_) => ErrorKind::Input,
            NotSimplex | NotSimple | NotReflexive | PhiNotPolynomial => ErrorKind::Scope,
            DualNotInvariant
            | NotInteger { .. }
            | NonIntegralMultiplicity { .. }
            | NegativeMultiplicity(_)
            | InvariantViolation(_) => ErrorKind::Internal,
        }
    }
}
