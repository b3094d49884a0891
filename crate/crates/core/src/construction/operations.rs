use std::collections::{HashMap, HashSet};

use crate::geometry::Vec3;
use crate::incidence::{build_complex, canonical_cycle, solve_step, ComplexData, Face, Flag, InfiniteRule, PolygonalComplex};

use super::ConstructionError;

/// Cap on walk repetitions.
const WALK_LIMIT: usize = 400;

/// Vertices of the walk repeating the flag operations `ops` through `start`,
/// in both directions while the flags stay interior. The flag is returned
/// to `true` when the walk closes; the vertices then form a cycle.
pub fn walk_path(c: &PolygonalComplex, start: &Flag, ops: &[u8]) -> Result<(Vec<usize>, bool), ConstructionError> {
    let (fwd, closed) = c.walk_vertices(start, ops, WALK_LIMIT)?;
    if closed {
        return Ok((fwd, true));
    }
    // walking the reversed word from the 0-adjacent flag retraces the edge
    // just before `start`
    let rev: Vec<u8> = ops.iter().rev().copied().collect();
    let mut back = Vec::new();
    let mut f = *start;
    'outer: for _ in 0..WALK_LIMIT {
        for &op in &rev {
            if !c.is_interior_flag(&f) {
                break 'outer;
            }
            f = c.step_flag(&f, op)?;
            if op == 0 {
                back.push(f.vertex);
            }
        }
    }
    back.reverse();
    // the reversed word ends on a 0-step back to the start vertex when the
    // word starts with 0
    if back.last() == Some(&start.vertex) {
        back.pop();
    }
    back.extend(fwd);
    Ok((back, false))
}

/// Replaces the faces of a polyhedron by the closed or infinite walks of the
/// flag word `ops`.
fn faces_from_walks(c: &PolygonalComplex, ops: &[u8]) -> Result<PolygonalComplex, ConstructionError> {
    if !c.is_polyhedron() {
        return Err(ConstructionError::NotAPolyhedron);
    }
    let interior: Vec<usize> = if c.is_finite() {
        (0..c.vertices().len()).collect()
    } else {
        c.interior_vertices().filter(|&v| c.neighbours(v).iter().all(|&u| c.is_interior_vertex(u))).collect()
    };
    let mut strict = vec![false; c.vertices().len()];
    for &v in &interior {
        strict[v] = true;
    }
    // vertices whose edges all start walks keep their full star
    let interior: Vec<usize> = interior.into_iter().filter(|&v| c.neighbours(v).iter().all(|&u| strict[u])).collect();
    let mut seen: HashSet<(Vec<usize>, bool)> = HashSet::new();
    let mut faces = Vec::new();
    for f in c.interior_flags() {
        let [a, b] = c.edges()[f.edge];
        if !(strict[a] && strict[b]) {
            continue;
        }
        let (path, closed) = walk_path(c, &f, ops)?;
        if closed {
            let key = (canonical_cycle(&path), true);
            if seen.insert(key.clone()) {
                faces.push(Face::cycle(key.0));
            }
            continue;
        }
        let (path, rule) = extend_path(c, path)?;
        let mut rev = path.clone();
        rev.reverse();
        let key = (path.clone().min(rev), false);
        if seen.insert(key) {
            faces.push(Face::path(path, Some(rule)));
        }
    }
    if interior.is_empty() {
        return Err(ConstructionError::WindowTooSmall);
    }
    let data = ComplexData {
        vertices: c.vertices().to_vec(),
        edges: c.edges().to_vec(),
        faces,
        window: c.window().cloned(),
        lattice: c.lattice().cloned(),
        interior: (!c.is_finite()).then_some(interior),
    };
    Ok(build_complex(data)?)
}

/// Extends an open walk along its own step as far as the complex has the
/// vertices and edges.
fn extend_path(c: &PolygonalComplex, path: Vec<usize>) -> Result<(Vec<usize>, InfiniteRule), ConstructionError> {
    let pts: Vec<Vec3> = path.iter().map(|&v| c.vertices()[v].clone()).collect();
    if pts.len() < 4 {
        return Err(ConstructionError::WindowTooSmall);
    }
    let step = solve_step(&pts).ok_or(ConstructionError::WindowTooSmall)?;
    let inv = step.inverse();
    let mut out = path;
    for (s, front) in [(&step, false), (&inv, true)] {
        loop {
            let end = if front { out[0] } else { out[out.len() - 1] };
            let next = s.apply(&c.vertices()[end]);
            match c.vertex_id(&next) {
                Some(n) if c.edge_id(end, n).is_some() && !out.contains(&n) => {
                    if front {
                        out.insert(0, n);
                    } else {
                        out.push(n);
                    }
                }
                _ => break,
            }
        }
    }
    let rule = InfiniteRule::new(c.vertices()[out[0]].clone(), step);
    Ok((out, rule))
}

/// Faces replaced by Petrie polygons.
pub fn petrie_dual(c: &PolygonalComplex) -> Result<PolygonalComplex, ConstructionError> {
    faces_from_walks(c, &[0, 1, 2])
}

/// Faces replaced by holes, which take the second exit at each vertex.
pub fn facetting(c: &PolygonalComplex) -> Result<PolygonalComplex, ConstructionError> {
    faces_from_walks(c, &[0, 1, 2, 1])
}

/// Dual with vertices at the given face centers. Only faces whose vertices
/// are all interior contribute a vertex.
pub fn dual(c: &PolygonalComplex, centers: &dyn Fn(usize) -> Option<Vec3>) -> Result<PolygonalComplex, ConstructionError> {
    if !c.is_polyhedron() {
        return Err(ConstructionError::NotAPolyhedron);
    }
    let n_faces = c.faces().len();
    let mut new_id: HashMap<usize, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut interior = Vec::new();
    let mut id_of = |f: usize, vertices: &mut Vec<Vec3>| -> Result<usize, ConstructionError> {
        if let Some(&i) = new_id.get(&f) {
            return Ok(i);
        }
        let face = &c.faces()[f];
        if !face.closed {
            return Err(ConstructionError::CentersRequired);
        }
        let p = centers(f).ok_or(ConstructionError::CentersRequired)?;
        new_id.insert(f, vertices.len());
        vertices.push(p);
        Ok(vertices.len() - 1)
    };
    let mut faces = Vec::new();
    let mut edges = Vec::new();
    for v in c.interior_vertices() {
        if !c.neighbours(v).iter().all(|&u| c.is_interior_vertex(u)) {
            continue;
        }
        let start = c.flags_at(v).into_iter().next().ok_or(ConstructionError::WindowTooSmall)?;
        let mut cyc = Vec::new();
        let mut f = start;
        loop {
            cyc.push(id_of(f.face, &mut vertices)?);
            f = c.step_flag(&c.step_flag(&f, 1)?, 2)?;
            if f == start {
                break;
            }
            if cyc.len() > n_faces {
                return Err(ConstructionError::WindowTooSmall);
            }
        }
        for i in 0..cyc.len() {
            edges.push([cyc[i], cyc[(i + 1) % cyc.len()]]);
        }
        faces.push(Face::cycle(cyc));
    }
    for (f, &i) in &new_id {
        if c.faces()[*f].vertices.iter().all(|&v| c.is_interior_vertex(v) && c.neighbours(v).iter().all(|&u| c.is_interior_vertex(u))) {
            interior.push(i);
        }
    }
    if vertices.is_empty() {
        return Err(ConstructionError::WindowTooSmall);
    }
    let data = ComplexData {
        vertices,
        edges,
        faces,
        window: c.window().cloned(),
        lattice: c.lattice().cloned(),
        interior: (!c.is_finite()).then_some(interior),
    };
    Ok(build_complex(data)?)
}
