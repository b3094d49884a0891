use std::collections::{HashMap, HashSet, VecDeque};

use crate::geometry::{Scalar, Vec3};

use super::{GroupError, IsometryGroup, DEFAULT_ELEMENT_BOUND};

#[derive(Debug, Clone)]
pub struct OrbitOptions {
    /// Two distinct orbit points closer than this make the orbit non-discrete.
    pub min_separation: Scalar,
    /// Extra radius explored beyond the window so that points reached by
    /// paths leaving the window are still found. Derived from the generators
    /// when `None`.
    pub margin: Option<Scalar>,
    /// Cap on the number of points explored.
    pub point_bound: usize,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { min_separation: Scalar::ratio(1, 8), margin: None, point_bound: 20 * DEFAULT_ELEMENT_BOUND }
    }
}

/// Grid of cells of side `cell` used to find close pairs among exact points.
pub(crate) struct SpatialHash {
    cell: f64,
    sep2: Scalar,
    cells: HashMap<[i64; 3], Vec<usize>>,
}

impl SpatialHash {
    pub(crate) fn new(sep: &Scalar) -> Self {
        SpatialHash { cell: sep.to_f64().max(1e-9), sep2: sep.square(), cells: HashMap::new() }
    }

    fn key(&self, p: &Vec3) -> [i64; 3] {
        p.to_f64().map(|c| (c / self.cell).floor() as i64)
    }

    /// Index of a stored point strictly closer than the separation, if any.
    pub(crate) fn close_to(&self, p: &Vec3, pts: &[Vec3]) -> Option<usize> {
        let k = self.key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(ids) = self.cells.get(&[k[0] + dx, k[1] + dy, k[2] + dz]) {
                        for &i in ids {
                            if pts[i].dist2(p) < self.sep2 {
                                return Some(i);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub(crate) fn insert(&mut self, p: &Vec3, id: usize) {
        self.cells.entry(self.key(p)).or_default().push(id);
    }
}

/// Integer upper bound for twice the longest generator translation, plus one.
pub(crate) fn default_margin(group: &IsometryGroup) -> Scalar {
    let m = group
        .generators()
        .iter()
        .map(|g| g.translation_part().norm2().to_f64().sqrt())
        .fold(0.0, f64::max);
    Scalar::int((2.0 * m).ceil() as i64 + 1)
}

/// Orbit of `seed` under `group`, restricted to the closed ball of radius
/// `radius` about the origin. Sorted.
pub fn orbit(seed: &Vec3, group: &IsometryGroup, radius: &Scalar, opts: &OrbitOptions) -> Result<Vec<Vec3>, GroupError> {
    let margin = opts.margin.clone().unwrap_or_else(|| default_margin(group));
    let outer2 = (radius + &margin).square();
    let r2 = radius.square();
    let gens = group.symmetric_generators();
    let mut pts = vec![seed.clone()];
    let mut seen: HashSet<Vec3> = HashSet::from([seed.clone()]);
    let mut grid = SpatialHash::new(&opts.min_separation);
    grid.insert(seed, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let p = pts[i].clone();
        for g in &gens {
            let q = g.apply(&p);
            if q.norm2() > outer2 || seen.contains(&q) {
                continue;
            }
            if let Some(j) = grid.close_to(&q, &pts) {
                return Err(GroupError::NonDiscrete(pts[j].clone(), q));
            }
            seen.insert(q.clone());
            grid.insert(&q, pts.len());
            pts.push(q);
            queue.push_back(pts.len() - 1);
            if pts.len() > opts.point_bound {
                return Err(GroupError::NotCrystallographic(opts.point_bound));
            }
        }
    }
    let mut out: Vec<Vec3> = pts.into_iter().filter(|p| p.norm2() <= r2).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Isometry;

    #[test]
    fn trivial_group() {
        let o = orbit(&Vec3::zero(), &IsometryGroup::trivial(), &Scalar::int(5), &OrbitOptions::default()).unwrap();
        assert_eq!(o, vec![Vec3::zero()]);
    }

    #[test]
    fn dense_orbit_detected() {
        let g = IsometryGroup::new(vec![
            Isometry::translation(Vec3::ints(1, 0, 0)),
            Isometry::translation(Vec3::new(Scalar::sqrt_of(2).unwrap(), Scalar::zero(), Scalar::zero())),
        ])
        .unwrap();
        let r = orbit(&Vec3::zero(), &g, &Scalar::int(3), &OrbitOptions::default());
        assert!(matches!(r, Err(GroupError::NonDiscrete(..))));
    }
}
