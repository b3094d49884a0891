//! Construction, classification and verification of highly symmetric
//! skeletal polyhedra and polygonal complexes in Euclidean 3-space, using
//! exact quadratic-field arithmetic throughout.

pub mod geometry;

pub use geometry::{GeometryError, Isometry, IsometryKind, Mat3, Rational, Scalar, Vec3};
pub mod groups;
pub mod incidence;
pub mod construction;
pub mod classification;
pub mod catalog;
