//! Exact arithmetic over the real quadratic fields Q(√d), d ∈ {1, 2, 3, 5},
//! and the isometries of 3-space built on it.

pub mod isometry;
pub mod rational;
pub mod scalar;
pub mod vector;

pub use isometry::{Isometry, IsometryKind, Line, Plane, MAX_FINITE_PERIOD};
pub use rational::Rational;
pub use scalar::Scalar;
pub use vector::{Mat3, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("radicand {0} is not one of 1, 2, 3, 5")]
    UnsupportedRadicand(i64),
    #[error("cannot mix sqrt({0}) and sqrt({1})")]
    IncompatibleRadicand(u8, u8),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("linear part is not orthogonal")]
    NotOrthogonal,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
}
