//! Classification fields computed from a complex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construction::walk_path;
use crate::geometry::{Isometry, Scalar, Vec3, MAX_FINITE_PERIOD};
use crate::groups::{special_group, IsometryGroup, VertexSetPredicate};
use crate::incidence::{classify_polygon, reference, solve_step, FaceKind, Polygon, Flag, GeometricGraph, GraphMode, PolygonalComplex, graph_isomorphic};

use super::orbits::{flag_orbits_from, two_orbit_label, FlagOrbits};
use super::symmetry::{base_flag, frame, SymmetryChecker};
use super::ClassificationError;

/// Length of a circuit; `inf` for an infinite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

impl From<Length> for String {
    fn from(l: Length) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for Length {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        if s == "inf" {
            Ok(Length::Infinite)
        } else {
            s.parse().map(Length::Finite).map_err(|_| format!("bad length {s:?}"))
        }
    }
}

/// Lengths of Petrie polygons, holes and 2-zigzags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FineLengths {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub petrie: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole: Option<Length>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zigzag2: Option<Length>,
}

/// Computed (or expected) classification data. Fields that do not apply
/// are left empty.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassificationRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_kind: Option<FaceKind>,
    /// `planar`, `skew` or `helical`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_shape: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schlafli: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_figure: Option<String>,
    /// `planar` or `skew`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_figure_shape: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_set: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror_vector: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag_orbits: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag_stabilizer_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_orbit_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fine_lengths: Option<FineLengths>,
    /// Census of the stabilizer of the base vertex and edge, e.g. `D2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_mirrors: Option<bool>,
}

/// Faces per edge, if constant over interior edges.
pub fn faces_per_edge(c: &PolygonalComplex) -> Option<usize> {
    let s = c.faces_per_edge();
    (s.len() == 1).then(|| *s.iter().next().unwrap())
}

/// The vertex-figure of a polyhedron at the vertex of `f` as a polygon:
/// neighbours in the cyclic order of the faces around the vertex.
pub fn vertex_figure_polygon(c: &PolygonalComplex, f: &Flag) -> Result<Polygon, ClassificationError> {
    let mut pts = Vec::new();
    let mut g = *f;
    loop {
        pts.push(c.vertices()[c.other_end(g.edge, g.vertex)].clone());
        g = c.step_flag(&c.step_flag(&g, 1)?, 2)?;
        if g == *f || pts.len() > 64 {
            break;
        }
    }
    let centre = &c.vertices()[f.vertex];
    Ok(Polygon::Finite(pts.iter().map(|p| p - centre).collect()))
}

fn symbol(k: &FaceKind, n: usize) -> String {
    match k {
        FaceKind::Star(p, q) => format!("{p}/{q}"),
        _ => match k.gonality() {
            Some(p) => p.to_string(),
            None if n == 0 => "inf".into(),
            None => n.to_string(),
        },
    }
}

/// `{p,q}` for equivelar polyhedra (star polygons written `p/d`),
/// `(face kind, r)` otherwise.
pub fn schlafli_data(c: &PolygonalComplex) -> Result<String, ClassificationError> {
    let mut degrees = std::collections::BTreeSet::new();
    let mut lengths = std::collections::BTreeSet::new();
    for v in c.interior_vertices() {
        degrees.insert(c.neighbours(v).len());
        for &f in c.faces_at_vertex(v) {
            let face = &c.faces()[f];
            lengths.insert(if face.closed { Some(face.len()) } else { None });
        }
    }
    if degrees.len() != 1 || lengths.len() != 1 {
        return Err(ClassificationError::NotEquivelar);
    }
    let q = degrees.into_iter().next().unwrap();
    let f = base_flag(c)?;
    let face = c.face_kind(f.face)?;
    match faces_per_edge(c) {
        Some(2) => {
            let vf = classify_polygon(&vertex_figure_polygon(c, &f)?)?;
            Ok(format!("{{{},{}}}", symbol(&face, 0), symbol(&vf, q)))
        }
        Some(r) => Ok(format!("({face}, {r})")),
        None => Err(ClassificationError::NotEquivelar),
    }
}

fn walk_length(c: &PolygonalComplex, start: &Flag, ops: &[u8]) -> Result<Length, ClassificationError> {
    if let Some(n) = c.walk_length(start, ops, 200)? {
        return Ok(Length::Finite(n as u32));
    }
    let (path, closed) = walk_path(c, start, ops)?;
    if closed {
        return Ok(Length::Finite(path.len() as u32));
    }
    let pts: Vec<Vec3> = path.iter().map(|&v| c.vertices()[v].clone()).collect();
    let step = solve_step(&pts).ok_or(ClassificationError::WindowTooSmall)?;
    match step.order(MAX_FINITE_PERIOD) {
        Some(n) => Ok(Length::Finite(n)),
        None => Ok(Length::Infinite),
    }
}

pub fn fine_lengths(c: &PolygonalComplex) -> Result<FineLengths, ClassificationError> {
    if !c.is_polyhedron() {
        return Err(ClassificationError::NotAPolyhedron);
    }
    let f = base_flag(c)?;
    Ok(FineLengths {
        petrie: Some(walk_length(c, &f, &[0, 1, 2])?),
        hole: Some(walk_length(c, &f, &[0, 1, 2, 1])?),
        zigzag2: Some(walk_length(c, &f, &[0, 1, 2, 1, 2])?),
    })
}

fn face_shape(k: &FaceKind) -> &'static str {
    if k.is_helical() {
        "helical"
    } else if k.is_planar() {
        "planar"
    } else {
        "skew"
    }
}

fn coplanar(pts: &[Vec3]) -> bool {
    if pts.len() < 4 {
        return true;
    }
    let a = &pts[1] - &pts[0];
    let Some(b) = pts.iter().map(|p| p - &pts[0]).find(|d| !a.cross(d).is_zero()) else { return true };
    let n = a.cross(&b);
    pts.iter().all(|p| (p - &pts[0]).dot(&n).is_zero())
}

/// Name of the reference graph matching the vertex-figure: by similarity if
/// possible, otherwise abstractly.
pub fn vertex_figure_name(g: &GeometricGraph) -> Option<String> {
    if g.nodes.len() > crate::incidence::MAX_GRAPH_NODES {
        return None;
    }
    reference::name_of(g).or_else(|| reference::abstract_name_of(g)).map(str::to_string)
}

/// Whether `g` is similar to the named reference graph, or (for names
/// without a fixed shape) abstractly isomorphic to it.
pub fn vertex_figure_matches(g: &GeometricGraph, name: &str) -> bool {
    let Some((_, r)) = reference::all().into_iter().find(|(n, _)| *n == name) else { return false };
    let strict = matches!(name, "cuboctahedron" | "ns-cuboctahedron");
    let mode = if strict { GraphMode::Similarity } else { GraphMode::Abstract };
    graph_isomorphic(g, &r, mode).unwrap_or(false)
}

/// Whether the vertices of `c` form exactly the set `pred` where `c` is
/// complete: interior vertices satisfy it, and its points well inside the
/// window are vertices. The set may be taken in any orientation that
/// permutes the coordinate axes.
pub fn vertex_set_matches(c: &PolygonalComplex, pred: &VertexSetPredicate, scale: &Scalar) -> bool {
    signed_permutations().any(|(perm, sign)| {
        let moved = |p: &Vec3| Vec3::new(
            p.0[perm[0]].clone() * Scalar::int(sign[0]),
            p.0[perm[1]].clone() * Scalar::int(sign[1]),
            p.0[perm[2]].clone() * Scalar::int(sign[2]),
        );
        matches_in_frame(c, |p| pred.contains(&moved(p)), scale)
    })
}

/// The 48 coordinate permutations with sign changes.
fn signed_permutations() -> impl Iterator<Item = ([usize; 3], [i64; 3])> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.into_iter().flat_map(|perm| {
        (0..8).map(move |m| (perm, [0, 1, 2].map(|i| if m >> i & 1 == 1 { -1 } else { 1 })))
    })
}

fn matches_in_frame(c: &PolygonalComplex, contains: impl Fn(&Vec3) -> bool, scale: &Scalar) -> bool {
    if c.interior_vertices().any(|v| !contains(&c.vertices()[v])) {
        return false;
    }
    let Some(w) = c.window() else { return false };
    let r = w.to_f64() * 0.6;
    let a = scale.to_f64();
    let n = (r / a).ceil() as i64 + 1;
    let r2 = Scalar::ratio((r * r * 1000.0) as i64, 1000);
    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                let p = Vec3::new(scale * &Scalar::int(i), scale * &Scalar::int(j), scale * &Scalar::int(k));
                if p.within(&r2) && contains(&p) && c.vertex_id(&p).is_none() {
                    return false;
                }
            }
        }
    }
    true
}

/// Predicates tried by [`detect_vertex_set`], at scale `a`.
fn predicates(a: &Scalar) -> Vec<VertexSetPredicate> {
    vec![
        VertexSetPredicate::cubic(a.clone()),
        VertexSetPredicate::face_centered(a.clone()),
        VertexSetPredicate::body_centered(a.clone()),
        VertexSetPredicate::V { a: a.clone() },
        VertexSetPredicate::W { a: a.clone() },
    ]
}

/// Label of the first standard vertex set that the vertices of `c` fill.
pub fn detect_vertex_set(c: &PolygonalComplex) -> Option<String> {
    c.window()?;
    let [a, b] = c.edges().first()?;
    let l2 = c.vertices()[*a].dist2(&c.vertices()[*b]);
    for (n, d) in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 8), (2, 1), (4, 1)] {
        let Some(s) = (&l2 * &Scalar::ratio(n, d)).sqrt_exact() else { continue };
        if s.radicand() != 1 && c.vertices().iter().any(|v| v.0.iter().any(|x| x.radicand() != 1 && x.radicand() != s.radicand())) {
            continue;
        }
        for p in predicates(&s) {
            if vertex_set_matches(c, &p, &s) {
                return Some(p.label());
            }
        }
    }
    None
}

/// Planes of faces that are mirrors of plane reflections of `c`.
pub fn has_face_mirrors(c: &PolygonalComplex) -> Result<(bool, Vec<Isometry>), ClassificationError> {
    let chk = SymmetryChecker::new(c);
    let f = base_flag(c)?;
    face_mirrors_at(&chk, &f)
}

fn face_mirrors_at(chk: &SymmetryChecker, f: &Flag) -> Result<(bool, Vec<Isometry>), ClassificationError> {
    let c = chk.complex();
    let [v, u, w, z] = frame(c, f)?;
    let p = |i: usize| c.vertices()[i].clone();
    let pts = [p(v), p(u), p(w), p(z)];
    if !coplanar(&pts) {
        return Ok((false, vec![]));
    }
    let n = (&pts[1] - &pts[0]).cross(&(&pts[2] - &pts[0]));
    if n.is_zero() {
        return Ok((false, vec![]));
    }
    let g = Isometry::plane_reflection(&pts[0], &n)?;
    let ok = chk.is_symmetry(&g);
    Ok((ok, if ok { vec![g] } else { vec![] }))
}

/// Stabilizer of the base vertex and base edge, named by its element
/// orders: `C_r` if cyclic of order `r`, else `D_{r/2}`.
fn g2_census(chk: &SymmetryChecker, f: &Flag) -> Result<String, ClassificationError> {
    let c = chk.complex();
    let mut elems = chk.between_flags(f, f)?;
    for g in c.i_adjacent(f, 2)? {
        elems.extend(chk.between_flags(f, &g)?);
    }
    let n = elems.len() as u32;
    let cyclic = elems.iter().any(|g| g.order(MAX_FINITE_PERIOD) == Some(n));
    Ok(if cyclic { format!("C{n}") } else { format!("D{}", n / 2) })
}

/// Mirror dimensions of the distinguished generators of a simply
/// flag-transitive complex.
pub fn mirror_vector(c: &PolygonalComplex) -> Result<Vec<u8>, ClassificationError> {
    let chk = SymmetryChecker::new(c);
    let f = base_flag(c)?;
    let o = flag_orbits_from(&chk, f)?;
    mirror_vector_from(&chk, &o)
}

fn mirror_vector_from(chk: &SymmetryChecker, o: &FlagOrbits) -> Result<Vec<u8>, ClassificationError> {
    let c = chk.complex();
    // a planar complex is fixed pointwise by the reflection in its plane
    let flat = o.stabilizer.iter().all(|g| g.is_identity() || c.vertices().iter().all(|p| &g.apply(p) == p));
    if o.count() != 1 || !flat {
        return Err(ClassificationError::NotRegular);
    }
    let ranks: &[u8] = if c.is_polyhedron() { &[0, 1, 2] } else { &[0, 1] };
    let mut out = Vec::new();
    for &i in ranks {
        let adj = c.i_adjacent(&o.base, i)?;
        let dim = chk.between_flags(&o.base, &adj[0])?.iter().filter_map(|g| g.mirror_dimension()).max();
        out.push(dim.ok_or(ClassificationError::NoReflectionGenerator(i))?);
    }
    Ok(out)
}

/// Every applicable field of the classification record.
pub fn classify(c: &PolygonalComplex) -> Result<(ClassificationRecord, FlagOrbits), ClassificationError> {
    let chk = SymmetryChecker::new(c);
    let f = base_flag(c)?;
    let o = flag_orbits_from(&chk, f)?;
    let mut rec = ClassificationRecord {
        r: faces_per_edge(c),
        flag_orbits: Some(o.count()),
        flag_stabilizer_order: Some(o.stabilizer_order()),
        ..Default::default()
    };
    let mut kinds: Vec<FaceKind> = Vec::new();
    for r in &o.representatives {
        let k = c.face_kind(r.face)?;
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    if kinds.len() == 1 {
        rec.face_shape = Some(face_shape(&kinds[0]).into());
        rec.face_kind = Some(kinds[0]);
    }
    rec.schlafli = schlafli_data(c).ok();
    let vf = c.vertex_figure(f.vertex)?;
    rec.vertex_figure_shape = Some(if coplanar(&vf.nodes) { "planar" } else { "skew" }.into());
    rec.vertex_figure = vertex_figure_name(&vf);
    rec.vertex_set = detect_vertex_set(c);
    let group = IsometryGroup::from_iter(o.symmetries.iter().cloned());
    if !group.generators().is_empty() {
        rec.special_group = Some(special_group(&group)?.name().to_string());
    }
    if o.count() == 1 {
        rec.mirror_vector = mirror_vector_from(&chk, &o).ok();
        rec.g2 = Some(g2_census(&chk, &f)?);
    }
    if o.count() == 2 && c.is_polyhedron() {
        rec.two_orbit_class = Some(two_orbit_label(c, &o)?);
    }
    if c.is_polyhedron() {
        rec.fine_lengths = fine_lengths(c).ok();
    }
    rec.face_mirrors = Some(face_mirrors_at(&chk, &f)?.0);
    Ok((rec, o))
}
