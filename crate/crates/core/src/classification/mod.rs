//! Symmetry-based classification of polygonal complexes.

mod orbits;
mod record;
mod symmetry;
mod verify;

use thiserror::Error;

use crate::construction::ConstructionError;
use crate::geometry::GeometryError;
use crate::groups::GroupError;
use crate::incidence::IncidenceError;

pub use orbits::{flag_orbits, flag_stabilizer_order, is_regular, is_simply_flag_transitive, two_orbit_class, FlagOrbits};
pub use record::{
    classify, detect_vertex_set, faces_per_edge, fine_lengths, has_face_mirrors, mirror_vector, schlafli_data, vertex_figure_polygon,
    vertex_figure_matches, vertex_figure_name, vertex_set_matches, ClassificationRecord, FineLengths, Length,
};
pub use symmetry::{base_flag, symmetries_between_flags, SymmetryChecker};
pub use verify::{compare, congruent, edge_ratio, similar, verify_chiral, verify_complex, ChiralReport, FieldCheck, VerificationReport};

#[derive(Debug, Error)]
pub enum ClassificationError {
    #[error("a needed flag touches the boundary of the window")]
    BoundaryContact,
    #[error("window too small to decide")]
    WindowTooSmall,
    #[error("degenerate configuration")]
    Degenerate,
    #[error("expected two flag orbits, found {0}")]
    NotTwoOrbit(usize),
    #[error("complex is not simply flag-transitive")]
    NotRegular,
    #[error("generator {0} is not a reflection")]
    NoReflectionGenerator(u8),
    #[error("complex is not equivelar")]
    NotEquivelar,
    #[error("complex is not a polyhedron")]
    NotAPolyhedron,
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
