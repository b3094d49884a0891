//! Polygons, polygonal complexes, flags and vertex-figures.

mod complex;
mod graph;
mod polygon;

pub use complex::{build_complex, ComplexData, Face, Flag, PolygonalComplex};
pub(crate) use complex::canonical_cycle;
pub use graph::{graph_isomorphic, reference, GeometricGraph, GraphMode, MAX_GRAPH_NODES};
pub use polygon::{classify_polygon, is_regular_polygon, solve_step, FaceKind, InfiniteRule, Polygon};

use crate::geometry::{GeometryError, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IncidenceError {
    #[error("edge graph of the interior is disconnected")]
    DisconnectedEdgeGraph,
    #[error("vertex-figure at {0} is disconnected")]
    DisconnectedVertexFigure(Vec3),
    #[error("{} interior edge(s) lie in fewer than two faces", .0.len())]
    EdgeFaceDeficit(Vec<[Vec3; 2]>),
    #[error("vertices {0} and {1} are too close")]
    NonDiscrete(Vec3, Vec3),
    #[error("query touches the boundary of the window")]
    BoundaryContact,
    #[error("graph with more than {0} nodes")]
    SizeLimit(usize),
    #[error("polygon is not regular")]
    NotRegular,
    #[error("invalid infinite polygon: {0}")]
    InvalidRule(&'static str),
    #[error("face edge {0}–{1} is not an edge")]
    MissingEdge(Vec3, Vec3),
    #[error("element index out of range")]
    InvalidIndex,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(Vec3),
    #[error("edge with both ends at {0}")]
    DegenerateEdge(Vec3),
    #[error("face with repeated or too few vertices")]
    DegenerateFace,
    #[error("operation needs exactly two faces per edge")]
    NotAPolyhedron,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
