use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("constant polynomial has no root bound")]
    ConstantPolynomial,
    #[error("zero function")]
    ZeroFunction,
    #[error("odd valuation {valuation} at vertex {vertex}")]
    OddVertexValuation { vertex: String, valuation: i64 },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("overlapping zero/pole specifications")]
    OverlappingSpecs,
    #[error("function magnitude underflow on the boundary")]
    BoundaryZeroDetected,
}

pub type Result<T> = std::result::Result<T, Error>;
