//! Flag orbits from local symmetry tests.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::geometry::Isometry;
use crate::incidence::{Flag, PolygonalComplex};

use super::symmetry::{base_flag, deep_flag, SymmetryChecker};
use super::ClassificationError;

/// Cap on the number of flag orbits explored.
const MAX_ORBITS: usize = 12;

/// Orbits of the symmetry group on flags.
#[derive(Debug, Clone)]
pub struct FlagOrbits {
    pub base: Flag,
    /// One flag per orbit, the first being `base`.
    pub representatives: Vec<Flag>,
    /// For each representative and `i`, the orbits of its `i`-adjacent
    /// flags.
    pub adjacency: Vec<[BTreeSet<usize>; 3]>,
    /// Symmetries found along the way (including the base stabilizer).
    pub symmetries: Vec<Isometry>,
    pub stabilizer: Vec<Isometry>,
}

impl FlagOrbits {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }

    /// The indices `i` such that `i`-adjacent flags always share an orbit.
    pub fn adjacency_class(&self) -> BTreeSet<u8> {
        (0..3u8)
            .filter(|&i| self.adjacency.iter().enumerate().all(|(k, a)| a[i as usize].iter().all(|&j| j == k)))
            .collect()
    }

    /// Orbit label of every interior flag, when adjacency determines it.
    pub fn partition(&self, c: &PolygonalComplex) -> Option<HashMap<Flag, usize>> {
        if self.count() > 1 && self.adjacency.iter().any(|a| a[2].len() > 1) {
            return None;
        }
        let mut label = HashMap::new();
        let mut queue = VecDeque::new();
        label.insert(self.base, 0);
        queue.push_back(self.base);
        while let Some(f) = queue.pop_front() {
            let k = label[&f];
            for i in 0..3u8 {
                let Ok(adj) = c.i_adjacent(&f, i) else { continue };
                for g in adj {
                    if label.contains_key(&g) {
                        continue;
                    }
                    let l = if self.count() == 1 { 0 } else { *self.adjacency[k][i as usize].iter().next()? };
                    label.insert(g, l);
                    queue.push_back(g);
                }
            }
        }
        Some(label)
    }
}

/// Flag orbits explored from the flag nearest the origin.
pub fn flag_orbits(c: &PolygonalComplex) -> Result<FlagOrbits, ClassificationError> {
    let base = base_flag(c)?;
    flag_orbits_from(&SymmetryChecker::new(c), base)
}

pub(crate) fn flag_orbits_from(chk: &SymmetryChecker, base: Flag) -> Result<FlagOrbits, ClassificationError> {
    let c = chk.complex();
    // the reflection in the plane of a planar complex fixes everything and
    // is not counted
    let mut stabilizer = chk.between_flags(&base, &base)?;
    stabilizer.retain(|g| g.is_identity() || c.vertices().iter().any(|p| &g.apply(p) != p));
    let mut reps = vec![base];
    let mut adjacency: Vec<[BTreeSet<usize>; 3]> = Vec::new();
    let mut symmetries = stabilizer.clone();
    let mut k = 0;
    while k < reps.len() {
        let rep = reps[k];
        let mut adj: [BTreeSet<usize>; 3] = Default::default();
        for i in 0..3u8 {
            for g in c.i_adjacent(&rep, i)? {
                let mut found = None;
                for (j, r) in reps.iter().enumerate() {
                    let syms = chk.between_flags(r, &g)?;
                    if !syms.is_empty() {
                        symmetries.extend(syms);
                        found = Some(j);
                        break;
                    }
                }
                let j = match found {
                    Some(j) => j,
                    None => {
                        if reps.len() >= MAX_ORBITS || !deep_flag(c, &g) {
                            return Err(ClassificationError::WindowTooSmall);
                        }
                        reps.push(g);
                        reps.len() - 1
                    }
                };
                adj[i as usize].insert(j);
            }
        }
        adjacency.push(adj);
        k += 1;
    }
    symmetries.retain(|g| !g.is_identity());
    symmetries.sort();
    symmetries.dedup();
    Ok(FlagOrbits { base, representatives: reps, adjacency, symmetries, stabilizer })
}

pub fn is_regular(c: &PolygonalComplex) -> Result<bool, ClassificationError> {
    Ok(flag_orbits(c)?.count() == 1)
}

pub fn is_simply_flag_transitive(c: &PolygonalComplex) -> Result<bool, ClassificationError> {
    let o = flag_orbits(c)?;
    Ok(o.count() == 1 && o.stabilizer_order() == 1)
}

pub fn flag_stabilizer_order(c: &PolygonalComplex) -> Result<usize, ClassificationError> {
    Ok(flag_orbits(c)?.stabilizer_order())
}

/// `2_I` label of a two-orbit polyhedron, e.g. `2_{0,1}` or `2_{}` for a
/// chiral one.
pub fn two_orbit_class(c: &PolygonalComplex) -> Result<String, ClassificationError> {
    let o = flag_orbits(c)?;
    two_orbit_label(c, &o)
}

pub(crate) fn two_orbit_label(c: &PolygonalComplex, o: &FlagOrbits) -> Result<String, ClassificationError> {
    if o.count() != 2 || !c.is_polyhedron() {
        return Err(ClassificationError::NotTwoOrbit(o.count()));
    }
    let i: Vec<String> = o.adjacency_class().iter().map(|i| i.to_string()).collect();
    Ok(format!("2_{{{}}}", i.join(",")))
}
