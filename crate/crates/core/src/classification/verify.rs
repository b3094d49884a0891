//! Field-by-field comparison of classification records, congruence tests
//! and the chiral verification.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::construction::{generate_from_chiral, ChiralGeneratorPair};
use crate::geometry::{Isometry, Scalar};
use crate::groups::VertexSetPredicate;
use crate::incidence::PolygonalComplex;

use super::orbits::flag_orbits_from;
use super::record::{classify, vertex_figure_matches, vertex_set_matches, ClassificationRecord};
use super::symmetry::{base_flag, SymmetryChecker};
use super::ClassificationError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: Value,
    pub computed: Value,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub fields: Vec<FieldCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub windows: Vec<String>,
    #[serde(default)]
    pub seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.fields.iter().all(|f| f.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.fields.iter().filter(|f| !f.matched)
    }
}

/// Record fields by name; nested objects are flattened to `outer.inner`.
fn fields(r: &ClassificationRecord) -> serde_json::Map<String, Value> {
    let mut out = serde_json::Map::new();
    if let Ok(Value::Object(m)) = serde_json::to_value(r) {
        for (k, v) in m {
            match v {
                Value::Object(inner) => {
                    for (k2, v2) in inner {
                        out.insert(format!("{k}.{k2}"), v2);
                    }
                }
                v => {
                    out.insert(k, v);
                }
            }
        }
    }
    out
}

/// One check per field present in `expected`.
pub fn compare(expected: &ClassificationRecord, computed: &ClassificationRecord) -> Vec<FieldCheck> {
    let c = fields(computed);
    fields(expected)
        .into_iter()
        .map(|(k, e)| {
            let v = c.get(&k).cloned().unwrap_or(Value::Null);
            FieldCheck { matched: v == e, field: k, expected: e, computed: v }
        })
        .collect()
}

/// Classifies `c` and compares with `expected`. The vertex figure is
/// matched against the named reference graph and the vertex set against
/// the named predicate at scale `a`, rather than by the detected names.
pub fn verify_complex(c: &PolygonalComplex, expected: &ClassificationRecord, a: &Scalar) -> Result<Vec<FieldCheck>, ClassificationError> {
    let (mut rec, _) = classify(c)?;
    if let Some(name) = &expected.vertex_figure {
        let f = base_flag(c)?;
        if vertex_figure_matches(&c.vertex_figure(f.vertex)?, name) {
            rec.vertex_figure = Some(name.clone());
        }
    }
    if let Some(label) = &expected.vertex_set {
        if let Some(p) = VertexSetPredicate::from_label(label, a.clone()) {
            if vertex_set_matches(c, &p, a) {
                rec.vertex_set = Some(label.clone());
            }
        }
    }
    Ok(compare(expected, &rec))
}

/// Similarities `x ↦ (k·x)·g` carrying `a` onto `b`, searched from the
/// base flag of `a` to the flags at the base vertex of `b`.
pub fn similar(a: &PolygonalComplex, b: &PolygonalComplex, k: &Scalar) -> Result<Option<Isometry>, ClassificationError> {
    let ca = SymmetryChecker::new(a);
    let cb = SymmetryChecker::new(b);
    let fa = base_flag(a)?;
    let fb = base_flag(b)?;
    for g in b.flags_at(fb.vertex) {
        if !b.is_interior_flag(&g) {
            continue;
        }
        if let Some(s) = ca.similarities_to(&cb, &fa, &g, k)?.into_iter().next() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn congruent(a: &PolygonalComplex, b: &PolygonalComplex) -> Result<bool, ClassificationError> {
    Ok(similar(a, b, &Scalar::one())?.is_some())
}

/// Ratio of edge lengths `b / a`, when it lies in the field.
pub fn edge_ratio(a: &PolygonalComplex, b: &PolygonalComplex) -> Option<Scalar> {
    let len2 = |c: &PolygonalComplex| {
        let [x, y] = *c.edges().first()?;
        Some(c.vertices()[x].dist2(&c.vertices()[y]))
    };
    len2(b)?.checked_div(&len2(a)?).ok()?.sqrt_exact()
}

/// Outcome of [`verify_chiral`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralReport {
    pub relations: bool,
    pub flag_orbits: usize,
    pub two_orbit_class: Option<String>,
    /// Every pair of adjacent flags lies in distinct orbits.
    pub chiral: bool,
    pub regular: bool,
    /// `S₁S₂` swaps the ends of the base edge and the two faces on it.
    pub half_turn: bool,
}

pub fn verify_chiral(pair: &ChiralGeneratorPair, window: &Scalar) -> Result<ChiralReport, ClassificationError> {
    let (p, q) = pair.schlafli();
    let relations = match q {
        Some(q) => pair.check_relations(p, q).is_ok(),
        None => false,
    };
    if !relations {
        return Err(crate::construction::ConstructionError::RelationViolation(format!("{p:?}, {q:?}")).into());
    }
    let c = generate_from_chiral(pair, window)?;
    let chk = SymmetryChecker::new(&c);
    let f = base_flag(&c)?;
    let o = flag_orbits_from(&chk, f)?;
    let chiral = o.count() == 2 && o.adjacency.iter().enumerate().all(|(k, a)| a.iter().all(|s| !s.contains(&k)));
    let t = pair.t();
    let v = c.vertex_id(&pair.base_vertex).ok_or(ClassificationError::Degenerate)?;
    let u = c.vertex_id(&pair.s1.apply(&pair.base_vertex)).ok_or(ClassificationError::Degenerate)?;
    let tv = c.vertex_id(&t.apply(&c.vertices()[v]));
    let tu = c.vertex_id(&t.apply(&c.vertices()[u]));
    let mut half_turn = tv == Some(u) && tu == Some(v);
    if half_turn {
        let e = c.edge_id(v, u).ok_or(ClassificationError::Degenerate)?;
        for &fc in c.faces_at_edge(e) {
            let pts: Vec<_> = c.face_points(fc).iter().map(|p| t.apply(p)).collect();
            let ids: Vec<usize> = pts.iter().filter_map(|p| c.vertex_id(p)).collect();
            let moved = ids.len() >= 3 && c.faces_at_edge(e).iter().any(|&g| g != fc && same_face(&c, g, &ids));
            half_turn &= moved;
        }
    }
    Ok(ChiralReport {
        relations,
        flag_orbits: o.count(),
        two_orbit_class: super::orbits::two_orbit_label(&c, &o).ok(),
        chiral,
        regular: o.count() == 1,
        half_turn,
    })
}

/// Whether the vertex ids `ids` (possibly a clipped run) lie along face `g`.
fn same_face(c: &PolygonalComplex, g: usize, ids: &[usize]) -> bool {
    let face = &c.faces()[g];
    ids.iter().all(|i| face.position(*i).is_some())
}
