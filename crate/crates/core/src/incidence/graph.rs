use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geometry::{Scalar, Vec3};

use super::IncidenceError;

/// Largest graph accepted by [`graph_isomorphic`].
pub const MAX_GRAPH_NODES: usize = 16;

/// A finite graph with positioned nodes and links of multiplicity 1 or more.
/// Positions are relative to a centre at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricGraph {
    pub nodes: Vec<Vec3>,
    /// `(i, j, multiplicity)` with `i < j`.
    pub links: Vec<(usize, usize, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphMode {
    Abstract,
    Similarity,
}

impl GeometricGraph {
    /// Builds a graph, merging repeated links into multiplicities.
    pub fn new(nodes: Vec<Vec3>, links: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (a, b) in links {
            *m.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        GeometricGraph { nodes, links: m.into_iter().map(|((a, b), k)| (a, b, k)).collect() }
    }

    pub fn doubled(&self) -> Self {
        GeometricGraph { nodes: self.nodes.clone(), links: self.links.iter().map(|&(a, b, k)| (a, b, 2 * k)).collect() }
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.links.iter().map(|l| l.2).max().unwrap_or(0)
    }

    fn matrix(&self) -> Vec<Vec<u32>> {
        let n = self.nodes.len();
        let mut m = vec![vec![0; n]; n];
        for &(a, b, k) in &self.links {
            m[a][b] += k;
            m[b][a] += k;
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return true;
        }
        let m = self.matrix();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if m[i][j] > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Isomorphism test by backtracking. In similarity mode the bijection must
/// also scale all squared distances (between nodes and to the centre) by
/// one common factor.
pub fn graph_isomorphic(g1: &GeometricGraph, g2: &GeometricGraph, mode: GraphMode) -> Result<bool, IncidenceError> {
    let n = g1.nodes.len();
    if n > MAX_GRAPH_NODES || g2.nodes.len() > MAX_GRAPH_NODES {
        return Err(IncidenceError::SizeLimit(MAX_GRAPH_NODES));
    }
    if n != g2.nodes.len() || g1.links.len() != g2.links.len() {
        return Ok(false);
    }
    let (m1, m2) = (g1.matrix(), g2.matrix());
    let sig = |m: &Vec<Vec<u32>>| {
        let mut s: Vec<Vec<u32>> = m.iter().map(|r| {
            let mut r: Vec<u32> = r.iter().copied().filter(|&k| k > 0).collect();
            r.sort();
            r
        }).collect();
        s.sort();
        s
    };
    if sig(&m1) != sig(&m2) {
        return Ok(false);
    }
    let geo = mode == GraphMode::Similarity;
    let mut ctx = Search { g1, g2, m1, m2, geo, ratio: None, map: vec![usize::MAX; n], used: vec![false; n] };
    Ok(ctx.extend(0))
}

struct Search<'a> {
    g1: &'a GeometricGraph,
    g2: &'a GeometricGraph,
    m1: Vec<Vec<u32>>,
    m2: Vec<Vec<u32>>,
    geo: bool,
    /// (numerator, denominator) of the common squared scale factor.
    ratio: Option<(Scalar, Scalar)>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn scaled_equal(&mut self, d1: &Scalar, d2: &Scalar) -> bool {
        match &self.ratio {
            None => {
                if d1.is_zero() != d2.is_zero() {
                    return false;
                }
                if !d1.is_zero() {
                    self.ratio = Some((d2.clone(), d1.clone()));
                }
                true
            }
            // d2 / d1 = n / d  ⇔  d2·d = n·d1
            Some((num, den)) => match (d2.checked_mul(den), d1.checked_mul(num)) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            },
        }
    }

    fn extend(&mut self, i: usize) -> bool {
        let n = self.map.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if self.used[j] || self.m1[i][i] != self.m2[j][j] {
                continue;
            }
            if (0..i).any(|k| self.m1[i][k] != self.m2[j][self.map[k]]) {
                continue;
            }
            let saved = self.ratio.clone();
            if self.geo {
                let mut ok = self.scaled_equal(&self.g1.nodes[i].norm2(), &self.g2.nodes[j].norm2());
                for k in 0..i {
                    if !ok {
                        break;
                    }
                    let d1 = self.g1.nodes[i].dist2(&self.g1.nodes[k]);
                    let d2 = self.g2.nodes[j].dist2(&self.g2.nodes[self.map[k]]);
                    ok = self.scaled_equal(&d1, &d2);
                }
                if !ok {
                    self.ratio = saved;
                    continue;
                }
            }
            self.map[i] = j;
            self.used[j] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[j] = false;
            self.ratio = saved;
        }
        false
    }
}

/// Named vertex-figure graphs in their standard positions.
pub mod reference {
    use super::*;

    fn by_distance(nodes: Vec<Vec3>, d2: i64) -> GeometricGraph {
        let mut links = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i].dist2(&nodes[j]) == Scalar::int(d2) {
                    links.push((i, j));
                }
            }
        }
        GeometricGraph::new(nodes, links)
    }

    pub fn tetrahedron() -> GeometricGraph {
        by_distance(vec![Vec3::ints(1, 1, 1), Vec3::ints(1, -1, -1), Vec3::ints(-1, 1, -1), Vec3::ints(-1, -1, 1)], 8)
    }

    pub fn octahedron() -> GeometricGraph {
        let mut v = Vec::new();
        for i in 0..3 {
            for s in [1, -1] {
                let mut c = [0; 3];
                c[i] = s;
                v.push(Vec3::ints(c[0], c[1], c[2]));
            }
        }
        by_distance(v, 2)
    }

    pub fn cube() -> GeometricGraph {
        let mut v = Vec::new();
        for x in [1, -1] {
            for y in [1, -1] {
                for z in [1, -1] {
                    v.push(Vec3::ints(x, y, z));
                }
            }
        }
        by_distance(v, 4)
    }

    pub fn cuboctahedron() -> GeometricGraph {
        let mut v = Vec::new();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for s in [1, -1] {
                for t in [1, -1] {
                    let mut c = [0; 3];
                    c[i] = s;
                    c[j] = t;
                    v.push(Vec3::ints(c[0], c[1], c[2]));
                }
            }
        }
        by_distance(v, 2)
    }

    pub fn square() -> GeometricGraph {
        by_distance(vec![Vec3::ints(1, 0, 0), Vec3::ints(0, 1, 0), Vec3::ints(-1, 0, 0), Vec3::ints(0, -1, 0)], 2)
    }

    pub fn triangle() -> GeometricGraph {
        by_distance(vec![Vec3::ints(1, 0, 0), Vec3::ints(0, 1, 0), Vec3::ints(0, 0, 1)], 2)
    }

    /// The vertex-figure of the complex with mirror vector (0,1): an
    /// abstract cuboctahedron whose squares are not planar.
    pub fn ns_cuboctahedron() -> GeometricGraph {
        let pts = [
            (-1, -1, 0),
            (-1, 0, -1),
            (-1, 0, 1),
            (-1, 1, 0),
            (0, -1, -1),
            (0, -1, 1),
            (0, 1, -1),
            (0, 1, 1),
            (1, -1, 0),
            (1, 0, -1),
            (1, 0, 1),
            (1, 1, 0),
        ];
        let nodes: Vec<Vec3> = pts.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect();
        GeometricGraph::new(nodes, NS_CUBOCTAHEDRON_LINKS.iter().copied())
    }

    /// Links of [`ns_cuboctahedron`], recorded from the computed vertex-figure.
    pub(crate) const NS_CUBOCTAHEDRON_LINKS: [(usize, usize); 24] = [
        (0, 6), (0, 7), (0, 9), (0, 10), (1, 5), (1, 7), (1, 8), (1, 11), (2, 4), (2, 6), (2, 8), (2, 11),
        (3, 4), (3, 5), (3, 9), (3, 10), (4, 10), (4, 11), (5, 9), (5, 11), (6, 8), (6, 10), (7, 8), (7, 9),
    ];

    /// All named graphs, most specific first.
    pub fn all() -> Vec<(&'static str, GeometricGraph)> {
        vec![
            ("tetrahedron", tetrahedron()),
            ("double tetrahedron", tetrahedron().doubled()),
            ("octahedron", octahedron()),
            ("double octahedron", octahedron().doubled()),
            ("cube", cube()),
            ("double cube", cube().doubled()),
            ("cuboctahedron", cuboctahedron()),
            ("ns-cuboctahedron", ns_cuboctahedron()),
            ("square", square()),
            ("double square", square().doubled()),
            ("triangle", triangle()),
        ]
    }

    /// Name of the reference graph similar to `g`, if any.
    pub fn name_of(g: &GeometricGraph) -> Option<&'static str> {
        all().into_iter().find_map(|(name, r)| graph_isomorphic(g, &r, GraphMode::Similarity).ok()?.then_some(name))
    }

    /// Name of a reference graph abstractly isomorphic to `g`, if any.
    pub fn abstract_name_of(g: &GeometricGraph) -> Option<&'static str> {
        all().into_iter().find_map(|(name, r)| graph_isomorphic(g, &r, GraphMode::Abstract).ok()?.then_some(name))
    }
}

#[cfg(test)]
mod tests {
    use super::reference::*;
    use super::*;

    #[test]
    fn basic_isomorphisms() {
        assert!(!graph_isomorphic(&triangle(), &square(), GraphMode::Abstract).unwrap());
        assert!(!graph_isomorphic(&square().doubled(), &square(), GraphMode::Abstract).unwrap());
        assert!(graph_isomorphic(&cube(), &cube(), GraphMode::Similarity).unwrap());
        assert!(!graph_isomorphic(&cube(), &cuboctahedron(), GraphMode::Abstract).unwrap());
    }

    #[test]
    fn similarity_needs_shape() {
        // a rectangle is abstractly a square but not similar to one
        let rect = GeometricGraph::new(
            vec![Vec3::ints(2, 1, 0), Vec3::ints(-2, 1, 0), Vec3::ints(-2, -1, 0), Vec3::ints(2, -1, 0)],
            [(0, 1), (1, 2), (2, 3), (3, 0)],
        );
        assert!(graph_isomorphic(&rect, &square(), GraphMode::Abstract).unwrap());
        assert!(!graph_isomorphic(&rect, &square(), GraphMode::Similarity).unwrap());
        let big = GeometricGraph { nodes: square().nodes.iter().map(|v| v.scale(&Scalar::int(3))).collect(), links: square().links };
        assert!(graph_isomorphic(&big, &square(), GraphMode::Similarity).unwrap());
    }

    #[test]
    fn size_limit() {
        let nodes: Vec<Vec3> = (0..17).map(|i| Vec3::ints(i, 0, 0)).collect();
        let g = GeometricGraph::new(nodes, []);
        assert_eq!(graph_isomorphic(&g, &g, GraphMode::Abstract), Err(IncidenceError::SizeLimit(16)));
    }
}
