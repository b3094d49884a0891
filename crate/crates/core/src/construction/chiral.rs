use serde::{Deserialize, Serialize};

use crate::geometry::{Isometry, Mat3, Scalar, Vec3};
use crate::groups::{PointGroup, PointGroupName};
use crate::incidence::PolygonalComplex;

use super::{assemble, AssemblyData, ConstructionError};

/// Whether faces are finite polygons or helices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceMode {
    Finite,
    Helical,
}

/// Input of [`solve_chiral_family`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralSpec {
    /// Face length; `None` for helical faces.
    pub p: Option<u32>,
    pub q: u32,
    pub special: PointGroupName,
    /// Gonality of the polygon a helical face winds over.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub helix_over: Option<u32>,
}

impl ChiralSpec {
    pub fn mode(&self) -> FaceMode {
        if self.p.is_some() {
            FaceMode::Finite
        } else {
            FaceMode::Helical
        }
    }
}

/// Generators `S₁, S₂` with `S₂` fixing the base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralGeneratorPair {
    pub s1: Isometry,
    pub s2: Isometry,
    pub base_vertex: Vec3,
    pub params: Vec<Scalar>,
}

/// A two-parameter family: `S₂ = L₂` and `S₁ = (L₁, c·e₁ + d·e₂)` with the
/// base vertex at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralFamily {
    pub spec: ChiralSpec,
    pub l1: Mat3,
    pub l2: Mat3,
    pub basis: [Vec3; 2],
}

impl ChiralFamily {
    pub fn instance(&self, c: &Scalar, d: &Scalar) -> Result<ChiralGeneratorPair, ConstructionError> {
        let t = &self.basis[0].scale(c) + &self.basis[1].scale(d);
        if t.is_zero() {
            return Err(ConstructionError::NoSolution);
        }
        Ok(ChiralGeneratorPair {
            s1: Isometry::new(self.l1.clone(), t)?,
            s2: Isometry::linear(self.l2.clone())?,
            base_vertex: Vec3::zero(),
            params: vec![c.clone(), d.clone()],
        })
    }

    /// The plane of admissible translation parts.
    pub fn plane_normal(&self) -> Vec3 {
        self.basis[0].cross(&self.basis[1])
    }

    /// Same family with a new parameter basis, which must span the same
    /// plane.
    pub fn with_basis(&self, basis: [Vec3; 2]) -> Result<ChiralFamily, ConstructionError> {
        let n = self.plane_normal();
        if !basis[0].dot(&n).is_zero() || !basis[1].dot(&n).is_zero() || basis[0].cross(&basis[1]).is_zero() {
            return Err(ConstructionError::InvariantViolation("basis leaves the solution plane".into()));
        }
        Ok(ChiralFamily { basis, ..self.clone() })
    }
}

impl ChiralGeneratorPair {
    /// Face length `p` or `None` for infinite faces, and `q`.
    pub fn schlafli(&self) -> (Option<u32>, Option<u32>) {
        (self.s1.order(crate::geometry::MAX_FINITE_PERIOD), self.s2.order(crate::geometry::MAX_FINITE_PERIOD))
    }

    /// Checks `S₁ᵖ = S₂^q = (S₁S₂)² = I` exactly.
    pub fn check_relations(&self, p: Option<u32>, q: u32) -> Result<(), ConstructionError> {
        if let Some(p) = p {
            if !self.s1.pow(p).is_identity() {
                return Err(ConstructionError::RelationViolation(format!("S1^{p} is not the identity")));
            }
        } else if self.s1.order(crate::geometry::MAX_FINITE_PERIOD).is_some() {
            return Err(ConstructionError::RelationViolation("S1 has finite order".into()));
        }
        if !self.s2.pow(q).is_identity() {
            return Err(ConstructionError::RelationViolation(format!("S2^{q} is not the identity")));
        }
        if self.s2.apply(&self.base_vertex) != self.base_vertex {
            return Err(ConstructionError::RelationViolation("S2 moves the base vertex".into()));
        }
        if !self.t().is_involution() {
            return Err(ConstructionError::RelationViolation("(S1 S2)^2 is not the identity".into()));
        }
        Ok(())
    }

    /// `T = S₁S₂` as a composition of maps, so `S₂` acts first; it swaps
    /// the base vertex with its image under `S₁`.
    pub fn t(&self) -> Isometry {
        self.s2.then(&self.s1)
    }

    pub fn assembly(&self) -> AssemblyData {
        AssemblyData {
            base_vertex: self.base_vertex.clone(),
            edge: self.s1.clone(),
            stabilizer: vec![self.s2.clone()],
            step: self.s1.clone(),
            generators: vec![self.s1.clone(), self.s2.clone()],
        }
    }
}

/// All linear parts admissible for `spec`, each with the plane of
/// translation parts solving the relations.
pub fn chiral_candidates(spec: &ChiralSpec) -> Result<Vec<ChiralFamily>, ConstructionError> {
    let group = PointGroup::standard(&spec.special).ok_or_else(|| ConstructionError::UnknownFamily(spec.special.to_string()))?;
    let (order1, proper) = match (spec.p, spec.helix_over) {
        (Some(p), _) => (p, false),
        (None, Some(k)) => (k, true),
        (None, None) => return Err(ConstructionError::UnknownFamily("helical family without gonality".into())),
    };
    let det_ok = |m: &Mat3| (m.det().signum() > 0) == proper;
    let elems = group.elements();
    let mut out = Vec::new();
    for l1 in elems.iter().filter(|m| det_ok(m) && m.order(24) == Some(order1)) {
        for l2 in elems.iter().filter(|m| det_ok(m) && m.order(24) == Some(spec.q)) {
            let m = l1 * l2;
            if m.order(24) != Some(2) || m.det().signum() < 0 {
                continue;
            }
            if PointGroup::generated_by(&[l1.clone(), l2.clone()], 200)?.order() != group.order() {
                continue;
            }
            // T = (L₁L₂, t·L₂) is an involution iff t·L₂ lies in the
            // (−1)-eigenspace of the half-turn L₁L₂
            let proj = Mat3::identity().sub(&m);
            let l2inv = l2.transpose();
            let rows: Vec<Vec3> = (0..3).map(|i| &proj.row(i) * &l2inv).filter(|v| !v.is_zero()).collect();
            let basis = plane_basis(&rows).ok_or(ConstructionError::NoSolution)?;
            out.push(ChiralFamily { spec: spec.clone(), l1: l1.clone(), l2: l2.clone(), basis });
        }
    }
    if out.is_empty() {
        return Err(ConstructionError::NoSolution);
    }
    Ok(out)
}

fn plane_basis(rows: &[Vec3]) -> Option<[Vec3; 2]> {
    let a = rows.first()?.clone();
    let b = rows.iter().find(|r| !r.cross(&a).is_zero())?.clone();
    let r = crate::groups::reduce_basis(vec![a, b]);
    Some([r[0].clone(), r[1].clone()])
}

/// The first admissible family for `spec`.
pub fn solve_chiral_family(spec: &ChiralSpec) -> Result<ChiralFamily, ConstructionError> {
    Ok(chiral_candidates(spec)?.remove(0))
}

/// Wythoff-type construction from `S₁, S₂`: base face `F₀⟨S₁⟩`, all other
/// elements by the group.
pub fn generate_from_chiral(pair: &ChiralGeneratorPair, window: &Scalar) -> Result<PolygonalComplex, ConstructionError> {
    let q = pair.s2.order(crate::geometry::MAX_FINITE_PERIOD).ok_or_else(|| ConstructionError::RelationViolation("S2 has infinite order".into()))?;
    let p = pair.s1.order(crate::geometry::MAX_FINITE_PERIOD);
    pair.check_relations(p, q)?;
    assemble(&pair.assembly(), Some(window))
}
