//! Orbit expansion of a vertex-transitive complex from local data.

use std::collections::{HashMap, VecDeque};

use crate::geometry::{Isometry, Scalar, Vec3, MAX_FINITE_PERIOD};
use crate::groups::{closure, translation_subgroup, IsometryGroup};
use crate::incidence::{build_complex, ComplexData, Face, InfiniteRule, PolygonalComplex};

use super::ConstructionError;

/// Cap on stabilizer closures.
const STABILIZER_BOUND: usize = 240;
/// Cap on materialized vertices.
pub const VERTEX_BOUND: usize = 60_000;

/// Local description of a complex whose symmetry group is transitive on
/// vertices.
///
/// The base vertex is fixed by every stabilizer generator, `edge` maps it to
/// the other end of a base edge, and the base face is the sequence
/// `F₀·stepᵏ`.
#[derive(Debug, Clone)]
pub struct AssemblyData {
    pub base_vertex: Vec3,
    pub edge: Isometry,
    pub stabilizer: Vec<Isometry>,
    pub step: Isometry,
    /// Generators of the whole group, used for the periodicity lattice.
    pub generators: Vec<Isometry>,
}

/// Radii derived from the requested window.
#[derive(Debug, Clone)]
pub(crate) struct Radii {
    pub interior: Scalar,
    pub expand: Scalar,
    pub faces: Scalar,
}

fn radii(window: &Scalar, edge_len: f64) -> Radii {
    let l = Scalar::int(edge_len.ceil().max(1.0) as i64);
    let expand = window + &(&l * &Scalar::int(2));
    let faces = &expand + &(&l * &Scalar::int(3));
    Radii { interior: window.clone(), expand, faces }
}

fn within(p: &Vec3, r: Option<&Scalar>) -> bool {
    r.is_none_or(|r| p.within(&r.square()))
}

/// Builds the complex generated by `data`, materialized in the ball of
/// radius `window` about the origin. With `window = None` the vertex orbit
/// and all faces must be finite.
pub fn assemble(data: &AssemblyData, window: Option<&Scalar>) -> Result<PolygonalComplex, ConstructionError> {
    let f0 = &data.base_vertex;
    let stab = closure(&data.stabilizer, STABILIZER_BOUND)?;
    if let Some(g) = stab.iter().find(|g| &g.apply(f0) != f0) {
        return Err(ConstructionError::InvariantViolation(format!("stabilizer element {g:?} moves the base vertex")));
    }
    let n0 = data.edge.apply(f0);
    if &n0 == f0 {
        return Err(ConstructionError::DegenerateEdge);
    }
    let step_period = data.step.order(MAX_FINITE_PERIOD);
    let s1 = data.step.apply(f0);
    if &s1 == f0 {
        return Err(ConstructionError::DegenerateFace);
    }
    let s2 = data.step.apply(&s1);
    if step_period.is_some_and(|p| p < 3) || &s2 == f0 {
        return Err(ConstructionError::DegenerateFace);
    }
    if step_period.is_none() && data.step.linear_part().order(MAX_FINITE_PERIOD).is_none() {
        return Err(ConstructionError::InvariantViolation("face step rotates by an irrational angle".into()));
    }
    // neighbour elements, one per distinct neighbour
    let mut nbr_elems: Vec<Isometry> = Vec::new();
    let mut nbr_pts: Vec<Vec3> = Vec::new();
    for h in &stab {
        let e = data.edge.then(h);
        let p = e.apply(f0);
        if !nbr_pts.contains(&p) {
            nbr_pts.push(p);
            nbr_elems.push(e);
        }
    }
    // distinct faces at the base vertex
    let inv = data.step.inverse();
    let mut face_elems: Vec<Isometry> = Vec::new();
    let mut face_keys: Vec<[Vec3; 4]> = Vec::new();
    for h in &stab {
        let k = [h.apply(&inv.apply(f0)), f0.clone(), h.apply(&s1), h.apply(&s2)];
        let r = [k[3].clone(), k[2].clone(), k[1].clone(), k[0].clone()];
        if !face_keys.contains(&k) && !face_keys.contains(&r) {
            face_keys.push(k);
            face_elems.push(h.clone());
        }
    }
    let edge_len = f0.dist2(&n0).to_f64().sqrt();
    let rad = window.map(|w| radii(w, edge_len));

    let mut ids: HashMap<Vec3, usize> = HashMap::new();
    let mut pts: Vec<Vec3> = Vec::new();
    let mut edges: Vec<[usize; 2]> = Vec::new();
    let mut faces: Vec<Face> = Vec::new();
    let mut seq_index: HashMap<[usize; 4], usize> = HashMap::new();
    let mut elem: HashMap<usize, Isometry> = HashMap::new();
    let mut expanded: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    let root = intern(f0.clone(), &mut ids, &mut pts)?;
    elem.insert(root, Isometry::identity());
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        let gx = elem[&x].clone();
        let px = pts[x].clone();
        expanded.push(x);
        for e in &nbr_elems {
            let gy = e.then(&gx);
            let py = gx.apply(&e.apply(f0));
            let y = intern(py.clone(), &mut ids, &mut pts)?;
            edges.push([x, y]);
            if let std::collections::hash_map::Entry::Vacant(v) = elem.entry(y) {
                v.insert(gy);
                if within(&py, rad.as_ref().map(|r| &r.expand)) {
                    queue.push_back(y);
                }
            }
        }
        for h in &face_elems {
            let g = h.then(&gx);
            let st = data.step.conjugate_by(&g);
            let a = st.inverse().apply(&px);
            let b = st.apply(&px);
            let c = st.apply(&b);
            let key = [intern(a, &mut ids, &mut pts)?, x, intern(b, &mut ids, &mut pts)?, intern(c, &mut ids, &mut pts)?];
            if seq_index.contains_key(&key) {
                continue;
            }
            let face = match step_period {
                Some(p) => {
                    let mut vs = Vec::with_capacity(p as usize);
                    let mut q = px.clone();
                    for _ in 0..p {
                        vs.push(intern(q.clone(), &mut ids, &mut pts)?);
                        q = st.apply(&q);
                    }
                    Face::cycle(vs)
                }
                None => {
                    let r = rad.as_ref().ok_or(ConstructionError::InfiniteWithoutWindow)?;
                    let rule = InfiniteRule::new(px.clone(), st.clone());
                    let (lo, hi) = rule.index_range_within(&r.faces)?.expect("face meets the window");
                    let lo = lo.min(-1);
                    let hi = hi.max(2);
                    let mut vs = Vec::new();
                    for q in rule.vertices(lo, hi) {
                        vs.push(intern(q, &mut ids, &mut pts)?);
                    }
                    Face::path(vs, Some(InfiniteRule::new(rule.vertex(lo), st)))
                }
            };
            let fi = faces.len();
            let vs = &face.vertices;
            let n = vs.len();
            let windows = if face.closed { n } else { n.saturating_sub(3) };
            for i in 0..windows {
                let s = [vs[i], vs[(i + 1) % n], vs[(i + 2) % n], vs[(i + 3) % n]];
                seq_index.insert(s, fi);
                seq_index.insert([s[3], s[2], s[1], s[0]], fi);
            }
            for (a, b) in face.edge_pairs() {
                edges.push([a, b]);
            }
            faces.push(face);
        }
    }
    let finite = rad.is_none();
    if !finite && expanded.len() == pts.len() && step_period.is_some() {
        // the whole orbit fits; present it as a finite complex
        return finish(pts, edges, faces, None, None, data);
    }
    let interior: Vec<usize> = match &rad {
        None => (0..pts.len()).collect(),
        Some(r) => expanded.iter().copied().filter(|&v| pts[v].within(&r.interior.square())).collect(),
    };
    if interior.is_empty() {
        return Err(ConstructionError::WindowTooSmall);
    }
    finish(pts, edges, faces, window.cloned(), Some(interior), data)
}

fn intern(p: Vec3, ids: &mut HashMap<Vec3, usize>, pts: &mut Vec<Vec3>) -> Result<usize, ConstructionError> {
    if let Some(&i) = ids.get(&p) {
        return Ok(i);
    }
    if pts.len() >= VERTEX_BOUND {
        return Err(ConstructionError::TooLarge(VERTEX_BOUND));
    }
    ids.insert(p.clone(), pts.len());
    pts.push(p);
    Ok(pts.len() - 1)
}

fn finish(
    vertices: Vec<Vec3>,
    edges: Vec<[usize; 2]>,
    faces: Vec<Face>,
    window: Option<Scalar>,
    interior: Option<Vec<usize>>,
    data: &AssemblyData,
) -> Result<PolygonalComplex, ConstructionError> {
    let lattice = if window.is_some() {
        IsometryGroup::new(data.generators.clone()).ok().and_then(|g| translation_subgroup(&g).ok()).map(|l| l.with_identification())
    } else {
        None
    };
    let interior = if window.is_some() { interior } else { None };
    let c = build_complex(ComplexData { vertices, edges, faces, window, lattice: lattice.clone(), interior })?;
    Ok(c)
}
