use serde::{Deserialize, Serialize};

use crate::geometry::{Isometry, Mat3, Scalar, Vec3};
use crate::incidence::PolygonalComplex;

use super::{assemble, AssemblyData, ConstructionError};

/// Distinguished generators `R₀, R₁` and the generators of `G₂`, with the
/// base vertex. A polyhedron has `G₂ = ⟨R₂⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTriple {
    pub r0: Isometry,
    pub r1: Isometry,
    pub g2: Vec<Isometry>,
    pub base_vertex: Vec3,
}

/// Distinguished generators `T₀, …, T₃` of a rank 4 apeirotope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank4Generators {
    pub t: [Isometry; 4],
    pub base_vertex: Vec3,
}

/// Second component of a blend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "height", rename_all = "kebab-case")]
pub enum BlendComponent {
    Segment(Scalar),
    Apeirogon(Scalar),
}

impl GeneratorTriple {
    pub fn polyhedron(r0: Isometry, r1: Isometry, r2: Isometry, base_vertex: Vec3) -> Self {
        GeneratorTriple { r0, r1, g2: vec![r2], base_vertex }
    }

    pub fn is_polyhedral(&self) -> bool {
        self.g2.len() == 1 && self.g2[0].is_involution()
    }

    /// `R₂` of a polyhedron.
    pub fn r2(&self) -> Option<&Isometry> {
        self.is_polyhedral().then(|| &self.g2[0])
    }

    pub fn generators(&self) -> Vec<Isometry> {
        let mut g = vec![self.r0.clone(), self.r1.clone()];
        g.extend(self.g2.iter().cloned());
        g
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |s: &str| Err(ConstructionError::InvariantViolation(s.into()));
        if !self.r0.is_involution() || !self.r1.is_involution() {
            return bad("R0 and R1 must be involutions");
        }
        if self.r1.apply(&self.base_vertex) != self.base_vertex {
            return bad("R1 moves the base vertex");
        }
        if self.g2.iter().any(|g| g.apply(&self.base_vertex) != self.base_vertex) {
            return bad("G2 moves the base vertex");
        }
        if let Some(r2) = self.r2() {
            if !self.r0.then(r2).is_involution() {
                return bad("(R0 R2)^2 is not the identity");
            }
        }
        Ok(())
    }

    pub fn assembly(&self) -> AssemblyData {
        let mut stabilizer = vec![self.r1.clone()];
        stabilizer.extend(self.g2.iter().cloned());
        AssemblyData {
            base_vertex: self.base_vertex.clone(),
            edge: self.r0.clone(),
            stabilizer,
            step: self.r1.then(&self.r0),
            generators: self.generators(),
        }
    }

    /// Generators `(R₀R₂, R₁, R₂)` of the Petrie dual.
    pub fn petrie(&self) -> Result<GeneratorTriple, ConstructionError> {
        let r2 = self.r2().ok_or(ConstructionError::NotAPolyhedron)?;
        Ok(GeneratorTriple::polyhedron(self.r0.then(r2), self.r1.clone(), r2.clone(), self.base_vertex.clone()))
    }

    /// Conjugate data under `g` (the image of the complex under `g`).
    pub fn transformed(&self, g: &Isometry) -> GeneratorTriple {
        GeneratorTriple {
            r0: self.r0.conjugate_by(g),
            r1: self.r1.conjugate_by(g),
            g2: self.g2.iter().map(|x| x.conjugate_by(g)).collect(),
            base_vertex: g.apply(&self.base_vertex),
        }
    }

    /// Data for the complex scaled by `s` about the origin.
    pub fn scaled(&self, s: &Scalar) -> GeneratorTriple {
        GeneratorTriple {
            r0: self.r0.scaled(s),
            r1: self.r1.scaled(s),
            g2: self.g2.iter().map(|x| x.scaled(s)).collect(),
            base_vertex: self.base_vertex.scale(s),
        }
    }

    /// Blend of a planar apeirohedron in `z = 0` with a segment or a linear
    /// apeirogon along the `z` axis.
    pub fn blend(&self, component: &BlendComponent) -> Result<GeneratorTriple, ConstructionError> {
        let r2 = self.r2().ok_or(ConstructionError::NotAPolyhedron)?;
        let e3 = Vec3::ints(0, 0, 1);
        for g in [&self.r0, &self.r1, r2] {
            if g.apply_linear(&e3) != e3 || !g.translation_part().z().is_zero() {
                return Err(ConstructionError::NotPlanar);
            }
        }
        if !self.base_vertex.z().is_zero() {
            return Err(ConstructionError::NotPlanar);
        }
        let flip = Mat3::diag(Scalar::one(), Scalar::one(), -Scalar::one());
        let (BlendComponent::Segment(h) | BlendComponent::Apeirogon(h)) = component;
        if h.is_zero() {
            return Err(ConstructionError::ZeroScale);
        }
        let lift = Isometry::new(flip.clone(), Vec3::new(Scalar::zero(), Scalar::zero(), h.clone()))?;
        let r0 = self.r0.then(&lift);
        let r1 = match component {
            BlendComponent::Segment(_) => self.r1.clone(),
            BlendComponent::Apeirogon(_) => self.r1.then(&Isometry::linear(flip)?),
        };
        Ok(GeneratorTriple::polyhedron(r0, r1, r2.clone(), self.base_vertex.clone()))
    }
}

impl Rank4Generators {
    pub fn validate(&self) -> Result<(), ConstructionError> {
        for (i, t) in self.t.iter().enumerate() {
            if !t.is_involution() {
                return Err(ConstructionError::InvariantViolation(format!("T{i} is not an involution")));
            }
        }
        for (i, j) in [(0, 2), (0, 3), (1, 3)] {
            if !self.t[i].then(&self.t[j]).is_involution() {
                return Err(ConstructionError::InvariantViolation(format!("T{i} and T{j} do not commute")));
            }
        }
        for i in 1..4 {
            if self.t[i].apply(&self.base_vertex) != self.base_vertex {
                return Err(ConstructionError::InvariantViolation(format!("T{i} moves the base vertex")));
            }
        }
        Ok(())
    }

    pub fn assembly(&self) -> AssemblyData {
        AssemblyData {
            base_vertex: self.base_vertex.clone(),
            edge: self.t[0].clone(),
            stabilizer: self.t[1..].to_vec(),
            step: self.t[1].then(&self.t[0]),
            generators: self.t.to_vec(),
        }
    }

    pub fn scaled(&self, s: &Scalar) -> Rank4Generators {
        Rank4Generators { t: self.t.clone().map(|x| x.scaled(s)), base_vertex: self.base_vertex.scale(s) }
    }
}

/// Wythoff's construction: base edge `{F₀, F₀R₀}`, base face the orbit of
/// `F₀` under `⟨R₀, R₁⟩`, everything else by the group.
pub fn wythoff(gen: &GeneratorTriple, window: Option<&Scalar>) -> Result<PolygonalComplex, ConstructionError> {
    gen.validate()?;
    assemble(&gen.assembly(), window)
}

/// The complex of vertices, edges and 2-faces of a rank 4 apeirotope.
pub fn two_skeleton(gen: &Rank4Generators, window: &Scalar) -> Result<PolygonalComplex, ConstructionError> {
    gen.validate()?;
    assemble(&gen.assembly(), Some(window))
}

/// `(T₀, T₁T₃, T₂, T₃)`.
pub fn petrie_swap_rank4(gen: &Rank4Generators) -> Result<Rank4Generators, ConstructionError> {
    let t13 = gen.t[1].then(&gen.t[3]);
    if !t13.is_involution() {
        return Err(ConstructionError::InvariantViolation("(T1 T3)^2 is not the identity".into()));
    }
    let out = Rank4Generators {
        t: [gen.t[0].clone(), t13, gen.t[2].clone(), gen.t[3].clone()],
        base_vertex: gen.base_vertex.clone(),
    };
    out.validate()?;
    Ok(out)
}
