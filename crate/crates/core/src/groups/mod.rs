//! Discrete isometry groups given by generators.

mod lattice;
mod orbit;
mod point_group;
mod translations;

pub use lattice::{vertex_set_member, Lattice, LatticeName, VertexSetPredicate};
pub use orbit::{orbit, OrbitOptions};
pub use point_group::{identify_point_group, special_group, PointGroup, PointGroupName};
pub use translations::translation_subgroup;
pub(crate) use translations::reduce as reduce_basis;

use serde::{Deserialize, Serialize};

use crate::geometry::{GeometryError, Isometry, Vec3};

/// Default cap on group elements produced by any closure.
pub const DEFAULT_ELEMENT_BOUND: usize = 10_000;
/// Default cap on generator word length in closures.
pub const DEFAULT_WORD_LENGTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group needs at least one generator")]
    NoGenerators,
    #[error("generator {0} is listed twice")]
    DuplicateGenerator(usize),
    #[error("orbit is not discrete: {0} and {1} are too close")]
    NonDiscrete(Vec3, Vec3),
    #[error("translation subgroup is not discrete")]
    DenseTranslations,
    #[error("closure exceeded {0} elements")]
    NotCrystallographic(usize),
    #[error("only {rank} independent translations")]
    RankDeficient { rank: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A group of isometries presented by an ordered list of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryGroup {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    generators: Vec<Isometry>,
}

impl IsometryGroup {
    pub fn new(generators: Vec<Isometry>) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(GroupError::DuplicateGenerator(i));
            }
        }
        Ok(IsometryGroup { label: None, generators })
    }

    /// Like [`IsometryGroup::new`] but drops identities and repeated generators.
    pub fn from_iter(generators: impl IntoIterator<Item = Isometry>) -> Self {
        let mut gens: Vec<Isometry> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            gens.push(Isometry::identity());
        }
        IsometryGroup { label: None, generators: gens }
    }

    pub fn trivial() -> Self {
        IsometryGroup { label: None, generators: vec![Isometry::identity()] }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn generators(&self) -> &[Isometry] {
        &self.generators
    }

    /// Generators together with the inverses that differ from them.
    pub fn symmetric_generators(&self) -> Vec<Isometry> {
        let mut out = self.generators.clone();
        for g in &self.generators {
            let inv = g.inverse();
            if !out.contains(&inv) {
                out.push(inv);
            }
        }
        out
    }

    pub fn radicand(&self) -> Result<u8, GeometryError> {
        let mut d = 1;
        for g in &self.generators {
            match (d, g.radicand()?) {
                (_, 1) => {}
                (1, e) => d = e,
                (x, e) if x == e => {}
                (x, e) => return Err(GeometryError::IncompatibleRadicand(x, e)),
            }
        }
        Ok(d)
    }

    /// All elements of a finite group, by breadth-first closure.
    pub fn finite_closure(&self, bound: usize) -> Result<Vec<Isometry>, GroupError> {
        closure(&self.generators, bound)
    }
}

/// Breadth-first closure of a set of isometries under composition.
pub fn closure(generators: &[Isometry], bound: usize) -> Result<Vec<Isometry>, GroupError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![Isometry::identity()];
    seen.insert(Isometry::identity());
    let mut i = 0;
    while i < out.len() {
        let x = out[i].clone();
        for g in generators {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                out.push(y);
                if out.len() > bound {
                    return Err(GroupError::NotCrystallographic(bound));
                }
            }
        }
        i += 1;
    }
    Ok(out)
}
