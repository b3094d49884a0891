use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::geometry::{Scalar, Vec3};
use crate::groups::Lattice;

use super::graph::GeometricGraph;
use super::polygon::{classify_polygon, solve_step, FaceKind, InfiniteRule, Polygon};
use super::IncidenceError;

/// A face as a path of vertex ids. Closed paths are finite polygons; open
/// paths are the materialized part of an infinite polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub closed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<InfiniteRule>,
}

impl Face {
    pub fn cycle(vertices: Vec<usize>) -> Self {
        Face { vertices, closed: true, rule: None }
    }

    pub fn path(vertices: Vec<usize>, rule: Option<InfiniteRule>) -> Self {
        Face { vertices, closed: false, rule }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs, including the closing pair of a cycle.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        let m = if self.closed { n } else { n.saturating_sub(1) };
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The neighbours of the vertex at position `i` along the face.
    pub fn neighbours_at(&self, i: usize) -> (Option<usize>, Option<usize>) {
        let n = self.vertices.len();
        if self.closed {
            (Some(self.vertices[(i + n - 1) % n]), Some(self.vertices[(i + 1) % n]))
        } else {
            (i.checked_sub(1).map(|j| self.vertices[j]), self.vertices.get(i + 1).copied())
        }
    }
}

/// Vertex-edge-face triple by ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flag {
    pub vertex: usize,
    pub edge: usize,
    pub face: usize,
}

/// Raw element lists accepted by [`build_complex`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexData {
    pub vertices: Vec<Vec3>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Face>,
    /// Radius of the window the elements were materialized in; `None` for a
    /// finite complex given in full.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Lattice>,
    /// Ids of vertices whose full star is present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<Vec<usize>>,
}

/// A validated polygonal complex, possibly a finite window of an infinite one.
#[derive(Debug, Clone)]
pub struct PolygonalComplex {
    vertices: Vec<Vec3>,
    vertex_ids: HashMap<Vec3, usize>,
    edges: Vec<[usize; 2]>,
    edge_ids: HashMap<[usize; 2], usize>,
    faces: Vec<Face>,
    window: Option<Scalar>,
    lattice: Option<Lattice>,
    interior: Vec<bool>,
    vertex_edges: Vec<Vec<usize>>,
    vertex_faces: Vec<Vec<usize>>,
    edge_faces: Vec<Vec<usize>>,
    warnings: Vec<String>,
    sequences: OnceLock<HashMap<[usize; 4], usize>>,
}

impl PartialEq for PolygonalComplex {
    fn eq(&self, o: &Self) -> bool {
        self.vertices == o.vertices
            && self.edges == o.edges
            && self.faces == o.faces
            && self.window == o.window
            && self.lattice == o.lattice
            && self.interior == o.interior
    }
}

fn key(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

/// Rotation and direction of a cycle that is lexicographically least.
pub(crate) fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    let m = (0..n).min_by_key(|&i| c[i]).unwrap_or(0);
    let fwd: Vec<usize> = (0..n).map(|i| c[(m + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| c[(m + n - i) % n]).collect();
    fwd.min(bwd)
}

/// Face with ids in canonical orientation, keeping the rule in step.
fn canonical_face(f: Face) -> Face {
    if f.closed {
        return Face::cycle(canonical_cycle(&f.vertices));
    }
    let mut rev = f.vertices.clone();
    rev.reverse();
    if rev < f.vertices {
        let rule = f.rule.map(|r| reverse_rule(&r, f.vertices.len()));
        Face::path(rev, rule)
    } else {
        f
    }
}

/// The same vertex sequence read backwards, starting at `v_{len−1}`.
fn reverse_rule(r: &InfiniteRule, len: usize) -> InfiniteRule {
    if r.base.len() == 1 {
        InfiniteRule::new(r.vertex(len as i64 - 1), r.step.inverse())
    } else {
        let last = r.vertex(len as i64 - 1);
        let prev = r.vertex(len as i64 - 2);
        InfiniteRule { base: vec![last, prev], step: r.step.inverse() }
    }
}

impl PolygonalComplex {
    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn window(&self) -> Option<&Scalar> {
        self.window.as_ref()
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        self.lattice.as_ref()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn vertex_id(&self, p: &Vec3) -> Option<usize> {
        self.vertex_ids.get(p).copied()
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_ids.get(&key(a, b)).copied()
    }

    pub fn edges_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn faces_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    pub fn faces_at_edge(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.vertex_edges[v].iter().map(|&e| self.other_end(e, v)).collect()
    }

    pub fn is_interior_vertex(&self, v: usize) -> bool {
        self.interior[v]
    }

    pub fn is_interior_edge(&self, e: usize) -> bool {
        let [a, b] = self.edges[e];
        self.interior[a] && self.interior[b]
    }

    pub fn is_interior_flag(&self, f: &Flag) -> bool {
        self.is_interior_edge(f.edge)
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.interior[v])
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.is_interior_edge(e))
    }

    /// Whether every element is interior (a complete finite complex).
    pub fn is_finite(&self) -> bool {
        self.window.is_none()
    }

    pub fn face_points(&self, f: usize) -> Vec<Vec3> {
        self.faces[f].vertices.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// The face as a polygon; infinite faces without a stored rule get one
    /// solved from their vertices.
    pub fn face_polygon(&self, f: usize) -> Result<Polygon, IncidenceError> {
        let face = &self.faces[f];
        if face.closed {
            return Ok(Polygon::Finite(self.face_points(f)));
        }
        if let Some(r) = &face.rule {
            return Ok(Polygon::Infinite(r.clone()));
        }
        let pts = self.face_points(f);
        let step = solve_step(&pts).ok_or(IncidenceError::InvalidRule("cannot recover the face step"))?;
        Ok(Polygon::Infinite(InfiniteRule::new(pts[0].clone(), step)))
    }

    pub fn face_kind(&self, f: usize) -> Result<FaceKind, IncidenceError> {
        classify_polygon(&self.face_polygon(f)?)
    }

    /// All flags, ordered.
    pub fn flags(&self) -> Vec<Flag> {
        let mut out = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for (a, b) in face.edge_pairs() {
                let e = self.edge_ids[&key(a, b)];
                out.push(Flag { vertex: a, edge: e, face: fi });
                out.push(Flag { vertex: b, edge: e, face: fi });
            }
        }
        out.sort();
        out
    }

    /// Flags whose vertex is `v`.
    pub fn flags_at(&self, v: usize) -> Vec<Flag> {
        let mut out = Vec::new();
        for &e in &self.vertex_edges[v] {
            for &f in &self.edge_faces[e] {
                out.push(Flag { vertex: v, edge: e, face: f });
            }
        }
        out.sort();
        out
    }

    pub fn interior_flags(&self) -> Vec<Flag> {
        self.flags().into_iter().filter(|f| self.is_interior_flag(f)).collect()
    }

    /// Flags differing from `f` exactly in the element of rank `i`.
    pub fn i_adjacent(&self, f: &Flag, i: u8) -> Result<Vec<Flag>, IncidenceError> {
        if !self.is_interior_flag(f) {
            return Err(IncidenceError::BoundaryContact);
        }
        self.adjacent_unchecked(f, i)
    }

    pub(crate) fn adjacent_unchecked(&self, f: &Flag, i: u8) -> Result<Vec<Flag>, IncidenceError> {
        match i {
            0 => Ok(vec![Flag { vertex: self.other_end(f.edge, f.vertex), ..*f }]),
            1 => {
                let face = &self.faces[f.face];
                let pos = face.position(f.vertex).ok_or(IncidenceError::BoundaryContact)?;
                let u = self.other_end(f.edge, f.vertex);
                let (p, n) = face.neighbours_at(pos);
                let w = if p == Some(u) { n } else { p };
                let w = w.ok_or(IncidenceError::BoundaryContact)?;
                Ok(vec![Flag { edge: self.edge_ids[&key(f.vertex, w)], ..*f }])
            }
            2 => Ok(self.edge_faces[f.edge].iter().filter(|&&g| g != f.face).map(|&g| Flag { face: g, ..*f }).collect()),
            _ => Err(IncidenceError::InvalidIndex),
        }
    }

    /// The unique `i`-adjacent flag for `i ∈ {0, 1}`, or for `i = 2` on a
    /// polyhedron.
    pub fn step_flag(&self, f: &Flag, i: u8) -> Result<Flag, IncidenceError> {
        let v = self.adjacent_unchecked(f, i)?;
        match v.as_slice() {
            [g] => Ok(*g),
            [] => Err(IncidenceError::BoundaryContact),
            _ => Err(IncidenceError::NotAPolyhedron),
        }
    }

    /// Faces at each edge over interior edges.
    pub fn faces_per_edge(&self) -> BTreeSet<usize> {
        self.interior_edges().map(|e| self.edge_faces[e].len()).collect()
    }

    pub fn is_polyhedron(&self) -> bool {
        self.faces_per_edge().iter().all(|&r| r == 2)
    }

    /// Graph on the neighbours of `v` with a link per face corner at `v`,
    /// positioned relative to `v`.
    pub fn vertex_figure(&self, v: usize) -> Result<GeometricGraph, IncidenceError> {
        if !self.interior[v] {
            return Err(IncidenceError::BoundaryContact);
        }
        Ok(self.vertex_figure_unchecked(v))
    }

    fn vertex_figure_unchecked(&self, v: usize) -> GeometricGraph {
        let mut nb = self.neighbours(v);
        nb.sort();
        let idx: HashMap<usize, usize> = nb.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut links = Vec::new();
        for &f in &self.vertex_faces[v] {
            let face = &self.faces[f];
            let pos = face.position(v).expect("face lists vertex");
            if let (Some(a), Some(b)) = face.neighbours_at(pos) {
                links.push((idx[&a], idx[&b]));
            }
        }
        let c = &self.vertices[v];
        GeometricGraph::new(nb.iter().map(|&u| &self.vertices[u] - c).collect(), links)
    }

    /// Directed runs of four consecutive face vertices, mapped to their face.
    pub(crate) fn sequences(&self) -> &HashMap<[usize; 4], usize> {
        self.sequences.get_or_init(|| {
            let mut m = HashMap::new();
            for (fi, face) in self.faces.iter().enumerate() {
                let vs = &face.vertices;
                let n = vs.len();
                if face.closed {
                    for i in 0..n {
                        let s = [vs[i], vs[(i + 1) % n], vs[(i + 2) % n], vs[(i + 3) % n]];
                        m.insert(s, fi);
                        m.insert([s[3], s[2], s[1], s[0]], fi);
                    }
                } else {
                    for w in vs.windows(4) {
                        m.insert([w[0], w[1], w[2], w[3]], fi);
                        m.insert([w[3], w[2], w[1], w[0]], fi);
                    }
                }
            }
            m
        })
    }

    /// Face through the four consecutive vertices, in either direction.
    pub fn face_through(&self, seq: [usize; 4]) -> Option<usize> {
        self.sequences().get(&seq).copied()
    }

    /// Raw element lists (the inverse of [`build_complex`]).
    pub fn to_data(&self) -> ComplexData {
        ComplexData {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            faces: self.faces.clone(),
            window: self.window.clone(),
            lattice: self.lattice.clone(),
            interior: if self.window.is_some() { Some(self.interior_vertices().collect()) } else { None },
        }
    }

    pub fn with_lattice(mut self, lattice: Option<Lattice>) -> Self {
        self.lattice = lattice;
        self
    }

    /// Length of the closed walk obtained by repeating the flag operations
    /// `ops` from `start`, counted in edges; `None` if it reaches the
    /// boundary before closing.
    pub fn walk_length(&self, start: &Flag, ops: &[u8], limit: usize) -> Result<Option<usize>, IncidenceError> {
        let zeros = ops.iter().filter(|&&o| o == 0).count();
        let mut f = *start;
        for n in 1..=limit {
            for &op in ops {
                if !self.is_interior_flag(&f) {
                    return Ok(None);
                }
                f = self.step_flag(&f, op)?;
            }
            if f == *start {
                return Ok(Some(n * zeros));
            }
        }
        Ok(None)
    }

    /// Vertices visited by the walk from `start` until it closes or meets
    /// the boundary (at most `limit` repetitions). The second value tells
    /// whether the walk closed up.
    pub fn walk_vertices(&self, start: &Flag, ops: &[u8], limit: usize) -> Result<(Vec<usize>, bool), IncidenceError> {
        let mut out = vec![start.vertex];
        let mut f = *start;
        for _ in 0..limit {
            for &op in ops {
                if !self.is_interior_flag(&f) {
                    return Ok((out, false));
                }
                f = self.step_flag(&f, op)?;
                if op == 0 {
                    out.push(f.vertex);
                }
            }
            if f == *start {
                out.pop();
                return Ok((out, true));
            }
        }
        Ok((out, false))
    }
}

/// Validates raw element lists and marks interior elements.
///
/// Without explicit interior data, a vertex counts as interior when it lies
/// at least the largest finite face diameter, and at least three edge
/// lengths, inside the window.
pub fn build_complex(data: ComplexData) -> Result<PolygonalComplex, IncidenceError> {
    let c = assemble(data)?;
    validate(&c)?;
    Ok(c.collect_warnings())
}

/// Canonical ordering and incidence tables, without the axiom checks.
pub(crate) fn assemble(data: ComplexData) -> Result<PolygonalComplex, IncidenceError> {
    let ComplexData { vertices, edges, faces, window, lattice, interior } = data;
    let n = vertices.len();
    // canonical vertex order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut new_id = vec![0; n];
    for (i, &o) in order.iter().enumerate() {
        new_id[o] = i;
    }
    let verts: Vec<Vec3> = order.iter().map(|&o| vertices[o].clone()).collect();
    let mut vertex_ids = HashMap::with_capacity(n);
    for (i, v) in verts.iter().enumerate() {
        if vertex_ids.insert(v.clone(), i).is_some() {
            return Err(IncidenceError::DuplicateVertex(v.clone()));
        }
    }
    let remap = |i: usize| new_id.get(i).copied().ok_or(IncidenceError::InvalidIndex);
    let mut edge_set = BTreeSet::new();
    for [a, b] in edges {
        let (a, b) = (remap(a)?, remap(b)?);
        if a == b {
            return Err(IncidenceError::DegenerateEdge(verts[a].clone()));
        }
        edge_set.insert(key(a, b));
    }
    let edges: Vec<[usize; 2]> = edge_set.into_iter().collect();
    let edge_ids: HashMap<[usize; 2], usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut face_set = BTreeSet::new();
    let mut face_list = Vec::new();
    for f in faces {
        let vs = f.vertices.iter().map(|&v| remap(v)).collect::<Result<Vec<_>, _>>()?;
        let f = canonical_face(Face { vertices: vs, ..f });
        if f.vertices.len() < if f.closed { 3 } else { 2 } {
            return Err(IncidenceError::DegenerateFace);
        }
        if f.vertices.iter().collect::<HashSet<_>>().len() != f.vertices.len() {
            return Err(IncidenceError::DegenerateFace);
        }
        if face_set.insert((f.vertices.clone(), f.closed)) {
            face_list.push(f);
        }
    }
    face_list.sort_by(|a, b| (a.closed, &a.vertices).cmp(&(b.closed, &b.vertices)));
    let mut vertex_edges = vec![Vec::new(); n];
    for (i, &[a, b]) in edges.iter().enumerate() {
        vertex_edges[a].push(i);
        vertex_edges[b].push(i);
    }
    let mut vertex_faces = vec![Vec::new(); n];
    let mut edge_faces = vec![Vec::new(); edges.len()];
    for (fi, f) in face_list.iter().enumerate() {
        for &v in &f.vertices {
            vertex_faces[v].push(fi);
        }
        for (a, b) in f.edge_pairs() {
            let e = *edge_ids.get(&key(a, b)).ok_or_else(|| IncidenceError::MissingEdge(verts[a].clone(), verts[b].clone()))?;
            edge_faces[e].push(fi);
        }
    }
    let interior = match (&window, interior) {
        (None, _) => vec![true; n],
        (Some(_), Some(ids)) => {
            let mut m = vec![false; n];
            for i in ids {
                m[remap(i)?] = true;
            }
            m
        }
        (Some(w), None) => fallback_interior(&verts, &edges, &face_list, w),
    };
    Ok(PolygonalComplex {
        vertices: verts,
        vertex_ids,
        edges,
        edge_ids,
        faces: face_list,
        window,
        lattice,
        interior,
        vertex_edges,
        vertex_faces,
        edge_faces,
        warnings: Vec::new(),
        sequences: OnceLock::new(),
    })
}

fn fallback_interior(verts: &[Vec3], edges: &[[usize; 2]], faces: &[Face], w: &Scalar) -> Vec<bool> {
    let longest_edge = edges.iter().map(|&[a, b]| verts[a].dist2(&verts[b]).to_f64().sqrt()).fold(0.0, f64::max);
    let mut diam: f64 = 0.0;
    for f in faces.iter().filter(|f| f.closed) {
        for &a in &f.vertices {
            for &b in &f.vertices {
                diam = diam.max(verts[a].dist2(&verts[b]).to_f64().sqrt());
            }
        }
    }
    let rho = diam.max(3.0 * longest_edge);
    let inner = w.to_f64() - rho;
    verts.iter().map(|v| v.norm2().to_f64().sqrt() <= inner + 1e-9).collect()
}

/// Checks the complex axioms on interior elements.
pub(crate) fn validate(c: &PolygonalComplex) -> Result<(), IncidenceError> {
    let n = c.vertices.len();
    // discreteness: no two vertices closer than an eighth of the shortest edge
    if let Some(min_edge) = c.edges.iter().map(|&[a, b]| c.vertices[a].dist2(&c.vertices[b])).min() {
        let sep = (min_edge.to_f64().sqrt() / 8.0).max(1e-9);
        let mut grid: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
        let limit = &min_edge / &Scalar::int(64);
        for (i, v) in c.vertices.iter().enumerate() {
            let k = v.to_f64().map(|x| (x / sep).floor() as i64);
            for dx in -1..=1 {
                for dy in -1..=1 {
                    for dz in -1..=1 {
                        if let Some(ids) = grid.get(&[k[0] + dx, k[1] + dy, k[2] + dz]) {
                            for &j in ids {
                                if c.vertices[j].dist2(v) < limit {
                                    return Err(IncidenceError::NonDiscrete(c.vertices[j].clone(), v.clone()));
                                }
                            }
                        }
                    }
                }
            }
            grid.entry(k).or_default().push(i);
        }
    }
    // edge graph: all interior vertices in one component
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(v) = stack.pop() {
            for u in c.neighbours(v) {
                if comp[u] == usize::MAX {
                    comp[u] = ncomp;
                    stack.push(u);
                }
            }
        }
        ncomp += 1;
    }
    let interior_comps: BTreeSet<usize> = c.interior_vertices().map(|v| comp[v]).collect();
    if interior_comps.len() > 1 {
        return Err(IncidenceError::DisconnectedEdgeGraph);
    }
    let deficit: Vec<[Vec3; 2]> = c
        .interior_edges()
        .filter(|&e| c.edge_faces[e].len() < 2)
        .map(|e| [c.vertices[c.edges[e][0]].clone(), c.vertices[c.edges[e][1]].clone()])
        .collect();
    if !deficit.is_empty() {
        return Err(IncidenceError::EdgeFaceDeficit(deficit));
    }
    for v in c.interior_vertices() {
        if !c.vertex_figure_unchecked(v).is_connected() {
            return Err(IncidenceError::DisconnectedVertexFigure(c.vertices[v].clone()));
        }
    }
    Ok(())
}

impl PolygonalComplex {
    /// Records validation warnings, such as vertex-figure links of
    /// multiplicity above two.
    pub(crate) fn collect_warnings(mut self) -> Self {
        let mut w = Vec::new();
        for v in self.interior_vertices() {
            let m = self.vertex_figure_unchecked(v).max_multiplicity();
            if m > 2 {
                w.push(format!("vertex-figure at {} has a link of multiplicity {m}", self.vertices[v]));
                break;
            }
        }
        self.warnings = w;
        self
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cube_data() -> ComplexData {
        let mut vertices = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    vertices.push(Vec3::ints(x, y, z));
                }
            }
        }
        let id = |x: usize, y: usize, z: usize| 4 * x + 2 * y + z;
        let mut edges = Vec::new();
        for a in 0..8usize {
            for b in a + 1..8 {
                if (a ^ b).count_ones() == 1 {
                    edges.push([a, b]);
                }
            }
        }
        let faces = vec![
            Face::cycle(vec![id(0, 0, 0), id(0, 0, 1), id(0, 1, 1), id(0, 1, 0)]),
            Face::cycle(vec![id(1, 0, 0), id(1, 0, 1), id(1, 1, 1), id(1, 1, 0)]),
            Face::cycle(vec![id(0, 0, 0), id(0, 0, 1), id(1, 0, 1), id(1, 0, 0)]),
            Face::cycle(vec![id(0, 1, 0), id(0, 1, 1), id(1, 1, 1), id(1, 1, 0)]),
            Face::cycle(vec![id(0, 0, 0), id(0, 1, 0), id(1, 1, 0), id(1, 0, 0)]),
            Face::cycle(vec![id(0, 0, 1), id(0, 1, 1), id(1, 1, 1), id(1, 0, 1)]),
        ];
        ComplexData { vertices, edges, faces, ..Default::default() }
    }

    #[test]
    fn cube_is_a_polyhedron() {
        let c = build_complex(cube_data()).unwrap();
        assert_eq!((c.vertices().len(), c.edges().len(), c.faces().len()), (8, 12, 6));
        assert!(c.is_polyhedron());
        let flags = c.flags();
        assert_eq!(flags.len(), 48);
        for f in &flags {
            for i in 0..3u8 {
                let adj = c.i_adjacent(f, i).unwrap();
                assert_eq!(adj.len(), 1);
                assert_eq!(c.i_adjacent(&adj[0], i).unwrap(), vec![*f]);
            }
        }
        let vf = c.vertex_figure(0).unwrap();
        assert_eq!(vf.nodes.len(), 3);
        assert_eq!(vf.links.len(), 3);
        assert!(c.warnings().is_empty());
    }

    #[test]
    fn open_cube_has_deficit() {
        let mut d = cube_data();
        d.faces.remove(5);
        match build_complex(d) {
            Err(IncidenceError::EdgeFaceDeficit(e)) => assert_eq!(e.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn walks_on_the_cube() {
        let c = build_complex(cube_data()).unwrap();
        let f = c.flags()[0];
        assert_eq!(c.walk_length(&f, &[0, 1, 2], 20).unwrap(), Some(6));
        assert_eq!(c.walk_length(&f, &[0, 1], 20).unwrap(), Some(4));
        let (vs, closed) = c.walk_vertices(&f, &[0, 1, 2], 20).unwrap();
        assert!(closed);
        assert_eq!(vs.len(), 6);
    }

    #[test]
    fn disconnected_edge_graph() {
        let mut d = cube_data();
        let n = d.vertices.len();
        let mut e = cube_data();
        for v in &mut e.vertices {
            *v = v.clone() + Vec3::ints(5, 0, 0);
        }
        d.vertices.extend(e.vertices);
        d.edges.extend(e.edges.iter().map(|[a, b]| [a + n, b + n]));
        d.faces.extend(e.faces.into_iter().map(|f| Face::cycle(f.vertices.iter().map(|v| v + n).collect())));
        assert_eq!(build_complex(d).unwrap_err(), IncidenceError::DisconnectedEdgeGraph);
    }
}
