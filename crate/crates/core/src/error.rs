use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line endpoints coincide")]
    DegenerateLine,
    #[error("line is parallel to the y-axis")]
    VerticalLine,
    #[error("step size lambda must be positive")]
    NonPositiveLambda,
    #[error("point coordinates must be nonnegative")]
    NegativeCoordinate,
    #[error("monomial ideal must have at least one generator")]
    EmptyIdeal,
    #[error("factor exponents must be strictly positive")]
    NonPositiveExponent,
    #[error("support direction must not be the zero vector")]
    ZeroVector,
    #[error("support direction must be componentwise nonnegative")]
    NegativeComponent,
    #[error("no facet direction is an integral multiple of a factor step")]
    NoLatticeStep,
    #[error("divisor components must be at least 1")]
    ZeroDivisorComponent,
    #[error("oracle radius must be at least 2")]
    RadiusTooSmall,
    #[error("no computing divisor within radius {0}")]
    NoComputingDivisorInRadius(u64),
    #[error("polygon does not contain (1,1)")]
    PolygonWithoutOne,
    #[error("polygon contains (1,1)")]
    PolygonContainsOne,
    #[error("coefficient set must be nonempty")]
    EmptySet,
    #[error("coefficient values must be strictly positive")]
    NonPositiveCoefficient,
    #[error("invariant violated: need e >= gamma > 0")]
    InvariantViolation,
    #[error("internal invariant failed: {0}")]
    ProofInvariantViolated(&'static str),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
