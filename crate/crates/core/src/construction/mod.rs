//! Complexes from symmetry data, and operations between them.

mod assembly;
mod chiral;
pub(crate) mod generators;
mod operations;

pub use assembly::{assemble, AssemblyData, VERTEX_BOUND};
pub use chiral::{chiral_candidates, generate_from_chiral, solve_chiral_family, ChiralFamily, ChiralGeneratorPair, ChiralSpec, FaceMode};
pub use generators::{petrie_swap_rank4, two_skeleton, wythoff, BlendComponent, GeneratorTriple, Rank4Generators};
pub use operations::{dual, facetting, petrie_dual, walk_path};

use crate::geometry::GeometryError;
use crate::groups::GroupError;
use crate::incidence::IncidenceError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("generator data violates an invariant: {0}")]
    InvariantViolation(String),
    #[error("relation fails: {0}")]
    RelationViolation(String),
    #[error("base edge collapses to a point")]
    DegenerateEdge,
    #[error("base face has fewer than three distinct vertices")]
    DegenerateFace,
    #[error("infinite faces need a window")]
    InfiniteWithoutWindow,
    #[error("more than {0} vertices")]
    TooLarge(usize),
    #[error("window too small")]
    WindowTooSmall,
    #[error("operation needs exactly two faces per edge")]
    NotAPolyhedron,
    #[error("face centers required")]
    CentersRequired,
    #[error("blend height must be nonzero")]
    ZeroScale,
    #[error("blend needs a planar apeirohedron in the plane z = 0")]
    NotPlanar,
    #[error("no solution")]
    NoSolution,
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
