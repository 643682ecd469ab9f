use thiserror::Error;

/// Errors raised by the algebra and kinematics operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation requires a zero scalar part, got scalar {0}")]
    NonzeroScalar(f64),
    #[error("invalid grade index {0}, expected 0, 1 or 2")]
    InvalidGrade(u32),
    #[error("hyperbolic number lies on the null cone |x| = |y|, no polar form")]
    NullCone,
    #[error("rotor between antipodal unit vectors is not unique")]
    AmbiguousRotor,
    #[error("element does not square to -1 (got {0}), not a unit relative bivector")]
    NotUnitBivector(f64),
    #[error("speed {0} is not strictly less than 1 (c = 1)")]
    Superluminal(f64),
    #[error("degenerate boost direction: frames have equal momentum-like numerators")]
    DegenerateDirection,
    #[error("element has a nonzero odd part, not in the even subalgebra")]
    NotEven,
    #[error("zero vector has no causal class")]
    ZeroVector,
    #[error("timelike vectors have opposite time orientation")]
    OppositeOrientation,
    #[error("bivector D = (w - v) ^ u is null or zero, split undefined")]
    DegenerateD,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
