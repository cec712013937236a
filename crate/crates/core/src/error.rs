use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("conductor {conductor} is not divisible by {divisor}")]
    ConductorNotDivisible { conductor: u32, divisor: u32 },
    #[error("lowest degree requested for the zero polynomial")]
    EmptyPolynomial,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("length cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("group is not finite within the enumeration caps")]
    NotFinite,
    #[error("invalid dihedral representation {kind} for m = {m}")]
    InvalidKind { kind: String, m: u32 },
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("non-integer multiplicity for {0}")]
    NonIntegerMultiplicity(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("graph is not simply laced")]
    NotSimplyLaced,
    #[error("parameter x must be nonzero")]
    ZeroParameter,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
