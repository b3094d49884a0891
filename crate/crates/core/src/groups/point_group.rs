use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{Isometry, IsometryKind, Mat3};

use super::{GroupError, IsometryGroup, DEFAULT_ELEMENT_BOUND};

/// A finite group of linear isometries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointGroup {
    elements: Vec<Mat3>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PointGroupName {
    /// Full octahedral group.
    Octahedral,
    OctahedralRotations,
    Tetrahedral,
    TetrahedralRotations,
    /// Pyritohedral group, tetrahedral rotations times the central inversion.
    TetrahedralRotationsInversion,
    Icosahedral,
    IcosahedralRotations,
    /// Groups with a unique principal axis, in Schoenflies notation.
    Axial(String),
    Unknown,
}

impl fmt::Display for PointGroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PointGroupName::Octahedral => "[3,4]",
            PointGroupName::OctahedralRotations => "[3,4]+",
            PointGroupName::Tetrahedral => "[3,3]",
            PointGroupName::TetrahedralRotations => "[3,3]+",
            PointGroupName::TetrahedralRotationsInversion => "[3,3]+x<-I>",
            PointGroupName::Icosahedral => "[3,5]",
            PointGroupName::IcosahedralRotations => "[3,5]+",
            PointGroupName::Axial(s) => s,
            PointGroupName::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

impl From<PointGroupName> for String {
    fn from(n: PointGroupName) -> String {
        n.to_string()
    }
}

impl TryFrom<String> for PointGroupName {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        Ok(match s.as_str() {
            "[3,4]" => PointGroupName::Octahedral,
            "[3,4]+" => PointGroupName::OctahedralRotations,
            "[3,3]" => PointGroupName::Tetrahedral,
            "[3,3]+" => PointGroupName::TetrahedralRotations,
            "[3,3]+x<-I>" => PointGroupName::TetrahedralRotationsInversion,
            "[3,5]" => PointGroupName::Icosahedral,
            "[3,5]+" => PointGroupName::IcosahedralRotations,
            "unknown" => PointGroupName::Unknown,
            _ if s.starts_with(['C', 'D', 'S']) => PointGroupName::Axial(s),
            _ => return Err(format!("unknown point group name {s:?}")),
        })
    }
}

impl PointGroup {
    /// Closure of the given orthogonal matrices.
    pub fn generated_by(gens: &[Mat3], bound: usize) -> Result<Self, GroupError> {
        let mut index = HashMap::new();
        let mut elements = vec![Mat3::identity()];
        index.insert(Mat3::identity(), 0usize);
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let y = &elements[i] * g;
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    if elements.len() > bound {
                        return Err(GroupError::NotCrystallographic(bound));
                    }
                }
            }
            i += 1;
        }
        Ok(PointGroup { elements })
    }

    /// The cubic point groups in their standard position, as signed
    /// permutation matrices.
    pub fn standard(name: &PointGroupName) -> Option<Self> {
        let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let (nperm, sign_rule): (usize, fn(i64) -> bool) = match name {
            PointGroupName::Octahedral => (6, |_| true),
            PointGroupName::OctahedralRotations => (6, |_| true),
            PointGroupName::Tetrahedral => (6, |s| s == 1),
            PointGroupName::TetrahedralRotations => (3, |s| s == 1),
            PointGroupName::TetrahedralRotationsInversion => (3, |_| true),
            _ => return None,
        };
        let proper_only = matches!(name, PointGroupName::OctahedralRotations | PointGroupName::TetrahedralRotations);
        let mut elements = Vec::new();
        for p in &perms[..nperm] {
            for signs in 0..8 {
                let sg = |i: usize| if signs >> i & 1 == 1 { -1 } else { 1 };
                if !sign_rule(sg(0) * sg(1) * sg(2)) {
                    continue;
                }
                let mut rows = [[0i64; 3]; 3];
                for i in 0..3 {
                    rows[i][p[i]] = sg(i);
                }
                let m = Mat3::from_ints(rows);
                if proper_only && m.det().signum() < 0 {
                    continue;
                }
                elements.push(m);
            }
        }
        elements.sort();
        Some(PointGroup { elements })
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat3) -> bool {
        self.elements.contains(m)
    }

    pub fn kinds(&self) -> Vec<IsometryKind> {
        self.elements.iter().map(|m| Isometry::linear(m.clone()).expect("orthogonal").classify()).collect()
    }

    pub fn name(&self) -> PointGroupName {
        identify_point_group(self)
    }
}

/// Linear parts of `group` together with one element of `group` per linear
/// part, in breadth-first order.
pub(crate) fn coset_representatives(group: &IsometryGroup, bound: usize) -> Result<Vec<(Mat3, Isometry)>, GroupError> {
    let gens = group.symmetric_generators();
    let mut index: HashMap<Mat3, usize> = HashMap::new();
    let mut reps = vec![(Mat3::identity(), Isometry::identity())];
    index.insert(Mat3::identity(), 0);
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i].1.clone();
        for g in &gens {
            let y = r.then(g);
            if !index.contains_key(y.linear_part()) {
                index.insert(y.linear_part().clone(), reps.len());
                reps.push((y.linear_part().clone(), y));
                if reps.len() > bound {
                    return Err(GroupError::NotCrystallographic(bound));
                }
            }
        }
        i += 1;
    }
    Ok(reps)
}

/// The group of linear parts of `group`.
pub fn special_group(group: &IsometryGroup) -> Result<PointGroup, GroupError> {
    let reps = coset_representatives(group, DEFAULT_ELEMENT_BOUND)?;
    Ok(PointGroup { elements: reps.into_iter().map(|(m, _)| m).collect() })
}

#[derive(Default)]
struct Census {
    rotations: usize,
    threefold: usize,
    fourfold: usize,
    fivefold: usize,
    plane_reflections: usize,
    central_inversion: bool,
    improper: usize,
}

/// Names a finite point group from its order and the kinds of its elements.
pub fn identify_point_group(pg: &PointGroup) -> PointGroupName {
    let mut c = Census::default();
    let mut axes: Vec<crate::geometry::Vec3> = Vec::new();
    for k in pg.kinds() {
        match &k {
            IsometryKind::Rotation { period, axis } | IsometryKind::Screw { rotation_period: period, axis, .. } => {
                c.rotations += 1;
                match period {
                    Some(3) => c.threefold += 1,
                    Some(4) => c.fourfold += 1,
                    Some(5) => c.fivefold += 1,
                    _ => {}
                }
                push_axis(&mut axes, &axis.direction);
            }
            IsometryKind::LineReflection { axis } => {
                c.rotations += 1;
                push_axis(&mut axes, &axis.direction);
            }
            IsometryKind::PlaneReflection { .. } => {
                c.plane_reflections += 1;
                c.improper += 1;
            }
            IsometryKind::PointReflection { .. } => {
                c.central_inversion = true;
                c.improper += 1;
            }
            IsometryKind::RotatoryReflection { .. } | IsometryKind::Glide { .. } => c.improper += 1,
            IsometryKind::Identity | IsometryKind::Translation { .. } => {}
        }
    }
    let n = pg.order();
    let polyhedral = c.threefold >= 8;
    use PointGroupName::*;
    match (n, polyhedral) {
        (48, true) if c.plane_reflections == 9 => return Octahedral,
        (24, true) if c.improper == 0 && c.fourfold == 6 => return OctahedralRotations,
        (24, true) if c.plane_reflections == 6 && !c.central_inversion => return Tetrahedral,
        (24, true) if c.central_inversion && c.plane_reflections == 3 => return TetrahedralRotationsInversion,
        (12, true) if c.improper == 0 => return TetrahedralRotations,
        (120, true) if c.plane_reflections == 15 => return Icosahedral,
        (60, true) if c.improper == 0 && c.fivefold == 24 => return IcosahedralRotations,
        (_, true) => return Unknown,
        _ => {}
    }
    axial_name(n, &c, axes.len())
}

fn push_axis(axes: &mut Vec<crate::geometry::Vec3>, d: &crate::geometry::Vec3) {
    if !axes.iter().any(|a| a.cross(d).is_zero()) {
        axes.push(d.clone());
    }
}

fn axial_name(n: usize, c: &Census, rotation_axes: usize) -> PointGroupName {
    let proper = n - c.improper;
    let s = match (c.improper, rotation_axes) {
        (0, 0 | 1) => format!("C{n}"),
        (0, _) => format!("D{}", n / 2),
        (_, _) if n == 2 && c.central_inversion => "Ci".to_string(),
        (_, _) if n == 2 && c.plane_reflections == 1 => "Cs".to_string(),
        (_, 0 | 1) if c.plane_reflections == 0 => format!("S{n}"),
        (_, 0 | 1) if c.plane_reflections == 1 => format!("C{proper}h"),
        (_, 0 | 1) => format!("C{proper}v"),
        (_, _) if c.plane_reflections == proper / 2 + 1 || (proper == 4 && c.plane_reflections == 3) => {
            format!("D{}h", proper / 2)
        }
        (_, _) => format!("D{}d", proper / 2),
    };
    PointGroupName::Axial(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3::from_ints(rows)
    }

    fn full_octahedral() -> PointGroup {
        PointGroup::generated_by(
            &[m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), m([[1, 0, 0], [0, 0, 1], [0, 1, 0]]), m([[1, 0, 0], [0, 1, 0], [0, 0, -1]])],
            1000,
        )
        .unwrap()
    }

    #[test]
    fn cubic_groups() {
        let g = full_octahedral();
        assert_eq!(g.order(), 48);
        assert_eq!(g.name(), PointGroupName::Octahedral);
        let rot: Vec<Mat3> = g.elements().iter().filter(|e| e.det().signum() > 0).cloned().collect();
        let r = PointGroup::generated_by(&rot, 1000).unwrap();
        assert_eq!((r.order(), r.name()), (24, PointGroupName::OctahedralRotations));
        let minus = m([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        let th = PointGroup::generated_by(&[m([[0, 1, 0], [0, 0, 1], [1, 0, 0]]), m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), minus], 1000).unwrap();
        assert_eq!((th.order(), th.name()), (24, PointGroupName::TetrahedralRotationsInversion));
        let td = PointGroup::generated_by(&[m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), m([[1, 0, 0], [0, 0, 1], [0, 1, 0]]), m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])], 1000).unwrap();
        assert_eq!((td.order(), td.name()), (24, PointGroupName::Tetrahedral));
    }

    #[test]
    fn axial_groups() {
        let c4 = PointGroup::generated_by(&[m([[0, 1, 0], [-1, 0, 0], [0, 0, 1]])], 100).unwrap();
        assert_eq!(c4.name().to_string(), "C4");
        let d2 = PointGroup::generated_by(&[m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]), m([[1, 0, 0], [0, -1, 0], [0, 0, -1]])], 100).unwrap();
        assert_eq!(d2.name().to_string(), "D2");
        let d4h = PointGroup::generated_by(&[m([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]), m([[1, 0, 0], [0, -1, 0], [0, 0, 1]]), m([[1, 0, 0], [0, 1, 0], [0, 0, -1]])], 100).unwrap();
        assert_eq!(d4h.name().to_string(), "D4h");
    }
}
