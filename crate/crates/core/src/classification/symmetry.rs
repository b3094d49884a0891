//! Isometries between flags, verified against the materialized complex.

use crate::geometry::{Isometry, Mat3, Scalar, Vec3};
use crate::incidence::{Flag, PolygonalComplex};

use super::ClassificationError;

/// Four points fixing a flag: its vertex `v`, the other end `u` of its edge,
/// and the face neighbours `w` of `v` and `z` of `u` away from the edge.
pub(crate) fn frame(c: &PolygonalComplex, f: &Flag) -> Result<[usize; 4], ClassificationError> {
    let v = f.vertex;
    let u = c.other_end(f.edge, v);
    let face = &c.faces()[f.face];
    let other = |x: usize, y: usize| -> Option<usize> {
        let i = face.position(x)?;
        let (p, n) = face.neighbours_at(i);
        if p == Some(y) {
            n
        } else {
            p
        }
    };
    let w = other(v, u).ok_or(ClassificationError::BoundaryContact)?;
    let z = other(u, v).ok_or(ClassificationError::BoundaryContact)?;
    Ok([v, u, w, z])
}

fn points(c: &PolygonalComplex, ids: &[usize; 4]) -> [Vec3; 4] {
    ids.map(|i| c.vertices()[i].clone())
}

/// Similarities `x ↦ (k·x)·L + t` that carry the frame `a` onto the frame
/// `b` (`k` given). At most two: a planar frame leaves the side of its
/// plane free.
pub(crate) fn frame_maps(a: &[Vec3; 4], b: &[Vec3; 4], k: &Scalar) -> Vec<Isometry> {
    let da: Vec<Vec3> = a[1..].iter().map(|p| (p - &a[0]).scale(k)).collect();
    let db: Vec<Vec3> = b[1..].iter().map(|p| p - &b[0]).collect();
    let mut rows: Vec<(Vec3, Vec3)> = Vec::new();
    for (x, y) in da.iter().zip(&db) {
        let m = match rows.len() {
            0 => !x.is_zero(),
            1 => !rows[0].0.cross(x).is_zero(),
            2 => !rows[0].0.cross(&rows[1].0).dot(x).is_zero(),
            _ => false,
        };
        if m {
            rows.push((x.clone(), y.clone()));
        }
    }
    let mut lin: Vec<(Mat3, Mat3)> = Vec::new();
    match rows.len() {
        3 => lin.push((
            Mat3::from_rows(rows[0].0.clone(), rows[1].0.clone(), rows[2].0.clone()),
            Mat3::from_rows(rows[0].1.clone(), rows[1].1.clone(), rows[2].1.clone()),
        )),
        2 => {
            let n = rows[0].0.cross(&rows[1].0);
            let nb = rows[0].1.cross(&rows[1].1);
            for s in [nb.clone(), -&nb] {
                lin.push((
                    Mat3::from_rows(rows[0].0.clone(), rows[1].0.clone(), n.clone()),
                    Mat3::from_rows(rows[0].1.clone(), rows[1].1.clone(), s),
                ));
            }
        }
        _ => {}
    }
    let mut out = Vec::new();
    for (ma, mb) in lin {
        let Some(inv) = ma.inverse() else { continue };
        let l = &inv * &mb;
        if !l.is_orthogonal() {
            continue;
        }
        // every difference must map, not just the independent ones
        if da.iter().zip(&db).any(|(x, y)| &(x * &l) != y) {
            continue;
        }
        let t = &b[0] - &(&a[0].scale(k) * &l);
        if let Ok(g) = Isometry::new(l, t) {
            out.push(g);
        }
    }
    out
}

/// Precomputed element lists for testing whether an isometry preserves a
/// complex on the part of it that is fully materialized.
pub struct SymmetryChecker<'a> {
    c: &'a PolygonalComplex,
    window2: Option<Scalar>,
    vertices: Vec<usize>,
    edges: Vec<[usize; 2]>,
    seqs: Vec<[usize; 4]>,
}

impl<'a> SymmetryChecker<'a> {
    pub fn new(c: &'a PolygonalComplex) -> Self {
        let vertices: Vec<usize> = c.interior_vertices().collect();
        let edges: Vec<[usize; 2]> = c.interior_edges().map(|e| c.edges()[e]).collect();
        let mut seqs: Vec<[usize; 4]> = c.sequences().keys().filter(|s| s.iter().all(|&v| c.is_interior_vertex(v))).copied().collect();
        seqs.sort();
        SymmetryChecker { c, window2: c.window().map(|w| w.square()), vertices, edges, seqs }
    }

    pub fn complex(&self) -> &PolygonalComplex {
        self.c
    }

    /// Id of the vertex at `p`; `Err` if `p` lies where the complex is
    /// complete but holds no vertex, `Ok(None)` if `p` lies outside.
    fn vertex_at(&self, p: &Vec3) -> Result<Option<usize>, ()> {
        match self.c.vertex_id(p) {
            Some(i) => Ok(Some(i)),
            None => match &self.window2 {
                Some(w2) if !p.within(w2) => Ok(None),
                _ => Err(()),
            },
        }
    }

    fn interior_id(&self, p: &Vec3) -> Option<usize> {
        self.c.vertex_id(p).filter(|&i| self.c.is_interior_vertex(i))
    }

    /// Whether `map` sends the checked elements of this complex into
    /// `target` wherever `target` is complete.
    fn maps_into(&self, map: &dyn Fn(&Vec3) -> Vec3, target: &SymmetryChecker) -> bool {
        let pts = self.c.vertices();
        let mut image: std::collections::HashMap<usize, Option<usize>> = std::collections::HashMap::new();
        for &v in &self.vertices {
            match target.vertex_at(&map(&pts[v])) {
                Err(()) => return false,
                Ok(i) => {
                    image.insert(v, i.filter(|&i| target.c.is_interior_vertex(i)));
                }
            }
        }
        let img = |v: usize| -> Option<usize> {
            match image.get(&v) {
                Some(x) => *x,
                None => target.interior_id(&map(&pts[v])),
            }
        };
        for &[a, b] in &self.edges {
            if let (Some(x), Some(y)) = (img(a), img(b)) {
                if target.c.edge_id(x, y).is_none() {
                    return false;
                }
            }
        }
        for s in &self.seqs {
            if let (Some(a), Some(b), Some(x), Some(y)) = (img(s[0]), img(s[1]), img(s[2]), img(s[3])) {
                if target.c.face_through([a, b, x, y]).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `g` is a symmetry of the materialized part.
    pub fn is_symmetry(&self, g: &Isometry) -> bool {
        let inv = g.inverse();
        self.maps_into(&|p| g.apply(p), self) && self.maps_into(&|p| inv.apply(p), self)
    }

    /// All symmetries taking flag `a` to flag `b`.
    pub fn between_flags(&self, a: &Flag, b: &Flag) -> Result<Vec<Isometry>, ClassificationError> {
        let fa = points(self.c, &frame(self.c, a)?);
        let fb = points(self.c, &frame(self.c, b)?);
        Ok(frame_maps(&fa, &fb, &Scalar::one()).into_iter().filter(|g| self.is_symmetry(g)).collect())
    }

    /// Symmetries of the complex that map flag `a` of `self` onto flag `b`
    /// of `other` after scaling by `k`.
    pub(crate) fn similarities_to(&self, other: &SymmetryChecker, a: &Flag, b: &Flag, k: &Scalar) -> Result<Vec<Isometry>, ClassificationError> {
        let fa = points(self.c, &frame(self.c, a)?);
        let fb = points(other.c, &frame(other.c, b)?);
        let kinv = Scalar::one().checked_div(k).map_err(|_| ClassificationError::Degenerate)?;
        let mut out = Vec::new();
        for g in frame_maps(&fa, &fb, k) {
            let inv = g.inverse();
            if self.maps_into(&|p| g.apply(&p.scale(k)), other) && other.maps_into(&|p| inv.apply(p).scale(&kinv), self) {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// All isometries of `c` mapping `f1` to `f2`, checked on the interior.
pub fn symmetries_between_flags(c: &PolygonalComplex, f1: &Flag, f2: &Flag) -> Result<Vec<Isometry>, ClassificationError> {
    if !c.is_interior_flag(f1) || !c.is_interior_flag(f2) {
        return Err(ClassificationError::BoundaryContact);
    }
    if c.interior_vertices().next().is_none() {
        return Err(ClassificationError::WindowTooSmall);
    }
    SymmetryChecker::new(c).between_flags(f1, f2)
}

/// A flag near the origin whose surroundings are interior, preferring one
/// at the vertex nearest the origin.
pub fn base_flag(c: &PolygonalComplex) -> Result<Flag, ClassificationError> {
    let mut vs: Vec<usize> = c.interior_vertices().collect();
    vs.sort_by(|&a, &b| c.vertices()[a].norm2().cmp(&c.vertices()[b].norm2()).then(a.cmp(&b)));
    for v in vs {
        for f in c.flags_at(v) {
            if deep_flag(c, &f) {
                return Ok(f);
            }
        }
    }
    Err(ClassificationError::WindowTooSmall)
}

/// Whether the flag and all flags within two adjacency steps are interior
/// and have frames.
pub(crate) fn deep_flag(c: &PolygonalComplex, f: &Flag) -> bool {
    let ok = |g: &Flag| c.is_interior_flag(g) && frame(c, g).is_ok();
    if !ok(f) {
        return false;
    }
    for i in 0..3u8 {
        let Ok(n1) = c.i_adjacent(f, i) else { return false };
        for g in n1 {
            if !ok(&g) {
                return false;
            }
            for j in 0..3u8 {
                let Ok(n2) = c.i_adjacent(&g, j) else { return false };
                if !n2.iter().all(ok) {
                    return false;
                }
            }
        }
    }
    true
}
