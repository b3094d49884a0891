use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{Mat3, Scalar, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeName {
    /// aℤ³
    Cubic,
    /// Λ(a,a,0), face-centered cubic.
    FaceCentered,
    /// Λ(a,a,a), body-centered cubic.
    BodyCentered,
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeName::Cubic => "aZ3",
            LatticeName::FaceCentered => "L(a,a,0)",
            LatticeName::BodyCentered => "L(a,a,a)",
        })
    }
}

/// A lattice of rank at most 3 given by a basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    basis: Vec<Vec3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<LatticeName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<Scalar>,
}

impl Lattice {
    /// Panics if the basis vectors are dependent or more than three.
    pub fn from_basis(basis: Vec<Vec3>) -> Self {
        assert!(basis.len() <= 3 && independent(&basis), "lattice basis must be independent");
        Lattice { basis, name: None, scale: None }
    }

    pub fn named(name: LatticeName, a: Scalar) -> Self {
        let z = Scalar::zero;
        let basis = match name {
            LatticeName::Cubic => vec![
                Vec3::new(a.clone(), z(), z()),
                Vec3::new(z(), a.clone(), z()),
                Vec3::new(z(), z(), a.clone()),
            ],
            LatticeName::FaceCentered => vec![
                Vec3::new(a.clone(), a.clone(), z()),
                Vec3::new(a.clone(), z(), a.clone()),
                Vec3::new(z(), a.clone(), a.clone()),
            ],
            LatticeName::BodyCentered => vec![
                Vec3::new(a.clone(), a.clone(), a.clone()),
                Vec3::new(a.clone(), a.clone(), -&a),
                Vec3::new(a.clone(), -&a, a.clone()),
            ],
        };
        Lattice { basis, name: Some(name), scale: Some(a) }
    }

    pub fn basis(&self) -> &[Vec3] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p` in the basis, if `p` lies in its real span.
    fn coordinates(&self, p: &Vec3) -> Option<[Scalar; 3]> {
        if self.basis.len() != 3 {
            return None;
        }
        let m = Mat3::from_rows(self.basis[0].clone(), self.basis[1].clone(), self.basis[2].clone());
        let c = p * &m.inverse()?;
        Some(c.0)
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        if p.is_zero() {
            return true;
        }
        match self.coordinates(p) {
            Some(c) => c.iter().all(|x| x.is_rational() && x.rational_part().is_integer()),
            None => false,
        }
    }

    /// Same set of points.
    pub fn same_as(&self, o: &Lattice) -> bool {
        self.rank() == o.rank() && self.basis.iter().all(|b| o.contains(b)) && o.basis.iter().all(|b| self.contains(b))
    }

    /// Whether the two lattices have a common sublattice of finite index in both.
    pub fn commensurate_with(&self, o: &Lattice) -> bool {
        if self.rank() != 3 || o.rank() != 3 {
            return false;
        }
        let rational_coords = |l: &Lattice, v: &Vec3| l.coordinates(v).is_some_and(|c| c.iter().all(Scalar::is_rational));
        self.basis.iter().all(|b| rational_coords(o, b)) && o.basis.iter().all(|b| rational_coords(self, b))
    }

    /// Matches the lattice against aℤ³, Λ(a,a,0) and Λ(a,a,a) for the scale
    /// suggested by its shortest vector.
    pub fn identify(&self) -> Option<(LatticeName, Scalar)> {
        if self.rank() != 3 {
            return None;
        }
        let m = self.basis.iter().map(Vec3::norm2).min()?;
        for (name, k) in [(LatticeName::Cubic, 1), (LatticeName::FaceCentered, 2), (LatticeName::BodyCentered, 3)] {
            if let Some(a) = (&m / &Scalar::int(k)).sqrt_exact() {
                if self.same_as(&Lattice::named(name, a.clone())) {
                    return Some((name, a));
                }
            }
        }
        None
    }

    /// Copy with `name` and `scale` filled in when recognised.
    pub fn with_identification(mut self) -> Self {
        if let Some((n, a)) = self.identify() {
            self.name = Some(n);
            self.scale = Some(a);
        }
        self
    }
}

pub(crate) fn independent(vs: &[Vec3]) -> bool {
    match vs {
        [] => true,
        [a] => !a.is_zero(),
        [a, b] => !a.cross(b).is_zero(),
        [a, b, c] => !a.dot(&b.cross(c)).is_zero(),
        _ => false,
    }
}

/// Sets of points used as vertex sets of catalog structures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexSetPredicate {
    Lattice { lattice: Lattice },
    /// aℤ³ with the coset (0,0,a)+Λ(a,a,a) removed.
    V { a: Scalar },
    /// 2Λ(a,a,0) together with its translate by (a,−a,a).
    W { a: Scalar },
}

impl VertexSetPredicate {
    pub fn cubic(a: Scalar) -> Self {
        VertexSetPredicate::Lattice { lattice: Lattice::named(LatticeName::Cubic, a) }
    }

    pub fn face_centered(a: Scalar) -> Self {
        VertexSetPredicate::Lattice { lattice: Lattice::named(LatticeName::FaceCentered, a) }
    }

    pub fn body_centered(a: Scalar) -> Self {
        VertexSetPredicate::Lattice { lattice: Lattice::named(LatticeName::BodyCentered, a) }
    }

    /// Short label such as `L(a,a,0)`, `V_a`, `W_a`.
    pub fn label(&self) -> String {
        match self {
            VertexSetPredicate::Lattice { lattice } => match lattice.name {
                Some(n) => n.to_string(),
                None => "lattice".into(),
            },
            VertexSetPredicate::V { .. } => "V_a".into(),
            VertexSetPredicate::W { .. } => "W_a".into(),
        }
    }

    pub fn from_label(label: &str, a: Scalar) -> Option<Self> {
        Some(match label {
            "aZ3" => Self::cubic(a),
            "L(a,a,0)" => Self::face_centered(a),
            "L(a,a,a)" => Self::body_centered(a),
            "V_a" => VertexSetPredicate::V { a },
            "W_a" => VertexSetPredicate::W { a },
            _ => return None,
        })
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        vertex_set_member(p, self)
    }
}

/// `p / a` as integer coordinates, if `p ∈ aℤ³`.
fn integer_coords(p: &Vec3, a: &Scalar) -> Option<[i64; 3]> {
    let mut out = [0i64; 3];
    for (o, x) in out.iter_mut().zip(&p.0) {
        let q = x / a;
        if !q.is_rational() || !q.rational_part().is_integer() {
            return None;
        }
        *o = i64::try_from(q.rational_part().numer()).ok()?;
    }
    Some(out)
}

fn fcc(c: [i64; 3]) -> bool {
    (c[0] + c[1] + c[2]).rem_euclid(2) == 0
}

/// Exact membership test.
pub fn vertex_set_member(p: &Vec3, pred: &VertexSetPredicate) -> bool {
    match pred {
        VertexSetPredicate::Lattice { lattice } => lattice.contains(p),
        VertexSetPredicate::V { a } => match integer_coords(p, a) {
            // removed coset: x ≡ y ≡ z − 1 (mod 2)
            Some([x, y, z]) => !(x.rem_euclid(2) == y.rem_euclid(2) && y.rem_euclid(2) != z.rem_euclid(2)),
            None => false,
        },
        VertexSetPredicate::W { a } => match integer_coords(p, a) {
            Some(c) => {
                let even = |c: [i64; 3]| c.iter().all(|x| x % 2 == 0) && fcc(c.map(|x| x / 2));
                even(c) || even([c[0] - 1, c[1] + 1, c[2] - 1])
            }
            None => false,
        },
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_membership() {
        let a = Scalar::int(2);
        assert!(!vertex_set_member(&Vec3::ints(0, 0, 2), &VertexSetPredicate::V { a: a.clone() }));
        assert!(vertex_set_member(&Vec3::ints(2, -2, 2), &VertexSetPredicate::W { a: a.clone() }));
        let f = VertexSetPredicate::face_centered(Scalar::one());
        assert!(f.contains(&Vec3::ints(1, 1, 0)));
        assert!(!f.contains(&Vec3::ints(1, 0, 0)));
    }

    #[test]
    fn identification() {
        let l = Lattice::from_basis(vec![Vec3::ints(2, 0, 0), Vec3::ints(1, 1, 0), Vec3::ints(0, 1, 1)]);
        assert_eq!(l.identify(), Some((LatticeName::FaceCentered, Scalar::one())));
        let b = Lattice::from_basis(vec![Vec3::ints(2, 0, 0), Vec3::ints(0, 2, 0), Vec3::ints(1, 1, 1)]);
        assert_eq!(b.identify(), Some((LatticeName::BodyCentered, Scalar::one())));
        assert!(b.commensurate_with(&Lattice::named(LatticeName::Cubic, Scalar::int(3))));
    }
}
