use thiserror::Error;

/// Errors raised by the algebra, root and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coefficient in {0}")]
    NonFinite(&'static str),

    #[error("expected a pure quaternion, scalar part is {scalar}")]
    NotPure { scalar: f64 },

    #[error("expected a unit vector, norm is {norm}")]
    NotUnit { norm: f64 },

    #[error("directions are not perpendicular: dot product {dot}")]
    NotPerpendicular { dot: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),

    #[error("expected a nontrivial root classification")]
    WrongVariant,

    /// A biquaternion passed the residual test but matched none of the
    /// three root families. Should be unreachable.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("lattice has {points} points, limit is {limit}")]
    GridTooLarge { points: u128, limit: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("starting point outside the Newton basin: residual {residual} exceeds {limit}")]
    OutsideBasin { residual: f64, limit: f64 },

    #[error("Newton iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("Newton iteration stalled at residual {residual:e}: no step reduced the residual")]
    Stalled { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
