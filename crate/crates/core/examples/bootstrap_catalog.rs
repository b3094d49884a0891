//! Searches for generator data of the catalog entries and writes
//! `data/catalog.json`.
//!
//! Candidates are drawn from small crystallographic or icosahedral
//! generating sets, built in a window and kept when their computed record
//! matches the transcribed target record.
//!
//! Usage: `cargo run --release --example bootstrap_catalog -- [section...]`
//! where a section is one of `finite planar blend pure rank4 complex
//! chiral`. Sections not named keep their existing entries.

use std::collections::BTreeMap;
use std::path::PathBuf;

use skeletal::catalog::{Catalog, CatalogEntry, EntryKind, GeneratorData, SCHEMA_VERSION};
use skeletal::classification::{base_flag, classify, ClassificationRecord, FineLengths, Length};
use skeletal::construction::{chiral_candidates, generate_from_chiral, two_skeleton, ChiralFamily, ChiralSpec, wythoff, BlendComponent, GeneratorTriple, Rank4Generators};
use skeletal::geometry::{Isometry, Mat3, Scalar, Vec3};
use skeletal::groups::{closure, PointGroup, PointGroupName};
use skeletal::incidence::{graph_isomorphic, reference, FaceKind, GraphMode, PolygonalComplex};

fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

fn half(n: i64) -> Scalar {
    Scalar::ratio(n, 2)
}

fn phi() -> Scalar {
    &(&Scalar::one() + &Scalar::sqrt_of(5).unwrap()) * &half(1)
}

fn sqrt3() -> Scalar {
    Scalar::sqrt_of(3).unwrap()
}

/// Normal of a linear plane reflection.
fn normal(g: &Isometry) -> Vec3 {
    let m = Mat3::identity().sub(g.linear_part());
    (0..3).map(|i| m.row(i)).find(|r| !r.is_zero()).unwrap()
}

fn reflection(n: Vec3) -> Isometry {
    Isometry::plane_reflection(&Vec3::zero(), &n).unwrap()
}

fn reflections(group: &[Isometry]) -> Vec<Isometry> {
    group.iter().filter(|g| g.is_involution() && g.mirror_dimension() == Some(2)).cloned().collect()
}

fn linear_group(name: PointGroupName) -> Vec<Isometry> {
    PointGroup::standard(&name).unwrap().elements().iter().map(|m| Isometry::linear(m.clone()).unwrap()).collect()
}

fn icosahedral_group() -> Vec<Isometry> {
    let p = phi();
    let gens = [
        reflection(Vec3::ints(1, 0, 0)),
        Isometry::linear(Mat3::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]])).unwrap(),
        reflection(Vec3::new(p.clone(), Scalar::one(), &p - &Scalar::one())),
    ];
    closure(&gens, 200).unwrap()
}

fn record(c: &PolygonalComplex) -> Option<ClassificationRecord> {
    classify(c).ok().map(|(r, _)| r)
}

fn entry(id: &str, kind: EntryKind, generators: GeneratorData, expected: ClassificationRecord, radicand: u8, window: i64) -> CatalogEntry {
    CatalogEntry { id: id.into(), kind, generators, params: vec![], expected, radicand, scale: Scalar::one(), window: int(window), note: None }
}

fn regular(schlafli: &str, face: FaceKind) -> ClassificationRecord {
    ClassificationRecord {
        r: Some(2),
        schlafli: Some(schlafli.into()),
        face_kind: Some(face),
        flag_orbits: Some(1),
        flag_stabilizer_order: Some(1),
        ..Default::default()
    }
}

/// Fields of `want` that `got` matches.
fn matches(want: &ClassificationRecord, got: &ClassificationRecord) -> bool {
    skeletal::classification::compare(want, got).iter().all(|f| f.matched)
}

fn debug(s: &str) {
    if std::env::var_os("BOOTSTRAP_DEBUG").is_some() {
        eprintln!("{s}");
    }
}

// ---------------------------------------------------------------- finite

struct FiniteTarget {
    id: &'static str,
    schlafli: &'static str,
    face: FaceKind,
    petrie: u32,
    group: u8,
}

fn finite() -> Vec<CatalogEntry> {
    use FaceKind::*;
    let targets = [
        FiniteTarget { id: "tetrahedron", schlafli: "{3,3}", face: Convex(3), petrie: 4, group: 0 },
        FiniteTarget { id: "octahedron", schlafli: "{3,4}", face: Convex(3), petrie: 6, group: 1 },
        FiniteTarget { id: "cube", schlafli: "{4,3}", face: Convex(4), petrie: 6, group: 1 },
        FiniteTarget { id: "icosahedron", schlafli: "{3,5}", face: Convex(3), petrie: 10, group: 2 },
        FiniteTarget { id: "dodecahedron", schlafli: "{5,3}", face: Convex(5), petrie: 10, group: 2 },
        FiniteTarget { id: "great-dodecahedron", schlafli: "{5,5/2}", face: Convex(5), petrie: 6, group: 2 },
        FiniteTarget { id: "small-stellated-dodecahedron", schlafli: "{5/2,5}", face: Star(5, 2), petrie: 6, group: 2 },
        FiniteTarget { id: "great-icosahedron", schlafli: "{3,5/2}", face: Convex(3), petrie: 10, group: 2 },
        FiniteTarget { id: "great-stellated-dodecahedron", schlafli: "{5/2,3}", face: Star(5, 2), petrie: 10, group: 2 },
    ];
    let groups = [linear_group(PointGroupName::Tetrahedral), linear_group(PointGroupName::Octahedral), icosahedral_group()];
    let mut out = Vec::new();
    for t in &targets {
        let refl = reflections(&groups[t.group as usize]);
        let mut want = regular(t.schlafli, t.face);
        want.fine_lengths = Some(FineLengths { petrie: Some(Length::Finite(t.petrie)), ..Default::default() });
        want.mirror_vector = Some(vec![2, 2, 2]);
        let found = search_finite(&refl, &want).unwrap_or_else(|| panic!("no data for {}", t.id));
        let c = wythoff(&found, None).unwrap();
        let p = found.petrie().unwrap();
        let pc = wythoff(&p, None).unwrap();
        let pr = record(&pc).unwrap();
        let radicand = if t.group == 2 { 5 } else { 1 };
        out.push(entry(t.id, EntryKind::FiniteRegular, GeneratorData::Triple(found), want, radicand, 3));
        // the Petrie polygons of the Petrie dual are the original faces
        let mut pwant = regular(pr.schlafli.as_deref().unwrap(), pr.face_kind.unwrap());
        pwant.fine_lengths = Some(FineLengths { petrie: Some(Length::Finite(c.faces()[0].len() as u32)), ..Default::default() });
        pwant.mirror_vector = Some(vec![1, 2, 2]);
        out.push(entry(&format!("petrie-{}", t.id), EntryKind::FiniteRegular, GeneratorData::Triple(p), pwant, radicand, 3));
    }
    out
}

fn search_finite(refl: &[Isometry], want: &ClassificationRecord) -> Option<GeneratorTriple> {
    for r1 in refl {
        for r2 in refl {
            if r1 == r2 {
                continue;
            }
            let v = normal(r1).cross(&normal(r2));
            for r0 in refl {
                if r0 == r1 || r0 == r2 || !r0.then(r2).is_involution() || r0.apply(&v) == v {
                    continue;
                }
                let g = GeneratorTriple::polyhedron(r0.clone(), r1.clone(), r2.clone(), v.clone());
                let c = match wythoff(&g, None) {
                    Ok(c) => c,
                    Err(e) => {
                        debug(&format!("{e}"));
                        continue;
                    }
                };
                let r = classify(&c).map(|x| x.0);
                debug(&format!("{r:?}"));
                if r.is_ok_and(|r| matches(want, &r)) {
                    return Some(g);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------- planar

/// Generators of {4,4}, {3,6} and {6,3} in the plane z = 0, base vertex at
/// the origin and unit edges.
fn tessellations() -> Vec<(&'static str, GeneratorTriple, u8)> {
    let r0 = Isometry::plane_reflection(&Vec3::new(half(1), int(0), int(0)), &Vec3::ints(1, 0, 0)).unwrap();
    let xaxis = reflection(Vec3::ints(0, 1, 0));
    let diag = reflection(Vec3::ints(1, -1, 0));
    let r30 = reflection(Vec3::new(int(-1), sqrt3(), int(0)));
    let r60 = reflection(Vec3::new(-sqrt3(), int(1), int(0)));
    vec![
        ("{4,4}", GeneratorTriple::polyhedron(r0.clone(), diag, xaxis.clone(), Vec3::zero()), 1),
        ("{3,6}", GeneratorTriple::polyhedron(r0.clone(), r30, xaxis.clone(), Vec3::zero()), 3),
        ("{6,3}", GeneratorTriple::polyhedron(r0, r60, xaxis, Vec3::zero()), 3),
    ]
}

fn planar() -> Vec<CatalogEntry> {
    use FaceKind::*;
    let mut out = Vec::new();
    for (sym, g, d) in tessellations() {
        let c = wythoff(&g, Some(&int(4))).unwrap();
        let rec = record(&c).unwrap();
        let p = c.faces()[0].len() as u32;
        let mut want = regular(sym, Convex(p));
        want.mirror_vector = Some(vec![2, 2, 2]);
        assert!(matches(&want, &rec), "{sym}: {rec:?}");
        out.push(entry(sym, EntryKind::PlanarApeirohedron, GeneratorData::Triple(g.clone()), want, d, 3));
        let pg = g.petrie().unwrap();
        let q = &sym[3..4];
        let mut pwant = regular(&format!("{{inf,{q}}}"), Zigzag);
        pwant.fine_lengths = Some(FineLengths { petrie: Some(Length::Finite(p)), ..Default::default() });
        let pc = wythoff(&pg, Some(&int(4))).unwrap();
        let prec = record(&pc).unwrap();
        assert!(matches(&pwant, &prec), "petrie {sym}: {prec:?}");
        let id = format!("{{inf,{q}}}_{p}");
        out.push(entry(&id, EntryKind::PlanarApeirohedron, GeneratorData::Triple(pg), pwant, d, 3));
    }
    out
}

// ---------------------------------------------------------------- blends

fn blends() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for p in planar() {
        let GeneratorData::Triple(base) = &p.generators else { unreachable!() };
        for (suffix, comp) in [("{}", BlendComponent::Segment(int(1))), ("{inf}", BlendComponent::Apeirogon(int(1)))] {
            let g = base.blend(&comp).unwrap();
            let window = if matches!(comp, BlendComponent::Apeirogon(_)) { 5 } else { 3 };
            let c = wythoff(&g, Some(&int(window))).unwrap();
            let rec = record(&c).unwrap_or_else(|| panic!("blend of {}", p.id));
            let base_face = p.expected.face_kind.unwrap();
            let mut want = ClassificationRecord { r: Some(2), flag_orbits: Some(1), flag_stabilizer_order: Some(1), ..Default::default() };
            // a helix over the base face for the apeirogon; for the segment
            // the face alternates between the two planes
            want.face_kind = Some(match (&comp, base_face) {
                (BlendComponent::Apeirogon(_), FaceKind::Convex(n)) => FaceKind::Helix(n),
                (BlendComponent::Apeirogon(_), _) => rec.face_kind.unwrap(),
                (BlendComponent::Segment(_), FaceKind::Convex(n)) if n % 2 == 0 => FaceKind::Skew(n),
                (BlendComponent::Segment(_), FaceKind::Convex(n)) => FaceKind::Skew(2 * n),
                (BlendComponent::Segment(_), _) => rec.face_kind.unwrap(),
            });
            assert!(matches(&want, &rec), "blend {}#{suffix}: {rec:?}", p.id);
            let id = format!("{}#{suffix}", p.id);
            let mut e = entry(&id, EntryKind::Blended, GeneratorData::Blend { base: base.clone(), component: comp }, want, p.radicand, window);
            e.note = Some("height h = a".into());
            out.push(e);
        }
    }
    out
}

// ------------------------------------------------------- cubic candidates

/// Involutions of the full octahedral group, by mirror dimension.
fn cubic_involutions() -> [Vec<Isometry>; 3] {
    let mut out: [Vec<Isometry>; 3] = Default::default();
    for g in linear_group(PointGroupName::Octahedral) {
        if g.is_involution() {
            if let Some(d) = g.mirror_dimension() {
                out[d as usize].push(g);
            }
        }
    }
    out
}

/// Involutions `x ↦ x·L + t` with `L` from `lin` and `t` a nonzero vector
/// with entries in {−1, 0, 1}.
fn affine_involutions(lin: &[Isometry]) -> Vec<Isometry> {
    let mut out = Vec::new();
    for l in lin {
        for x in -1..=1 {
            for y in -1..=1 {
                for z in -1..=1 {
                    let t = Vec3::ints(x, y, z);
                    if t.is_zero() {
                        continue;
                    }
                    if let Ok(g) = Isometry::new(l.linear_part().clone(), t) {
                        if g.is_involution() {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}

fn commute(a: &Isometry, b: &Isometry) -> bool {
    a.then(b) == b.then(a)
}

struct Target {
    id: String,
    want: ClassificationRecord,
    window: i64,
    found: Option<GeneratorData>,
}

impl Target {
    fn new(id: &str, want: ClassificationRecord, window: i64) -> Self {
        Target { id: id.into(), want, window, found: None }
    }
}

fn pending(targets: &[Target]) -> bool {
    targets.iter().any(|t| t.found.is_none())
}

/// Tries `data` against the targets still open; `name_vf` may rename the
/// computed vertex-figure before comparison.
fn offer(targets: &mut [Target], data: GeneratorData, c: &PolygonalComplex, rec: &ClassificationRecord) -> bool {
    for t in targets.iter_mut() {
        if t.found.is_none() && matches(&t.want, rec) {
            eprintln!("  found {} ({} vertices)", t.id, c.vertices().len());
            t.found = Some(data);
            return true;
        }
    }
    false
}

// ------------------------------------------------------------------ pure

fn pure_record(mv: [u8; 3], schlafli: &str, face_shape: &str, vf_shape: &str) -> ClassificationRecord {
    let mut r = ClassificationRecord {
        r: Some(2),
        schlafli: Some(schlafli.into()),
        face_shape: Some(face_shape.into()),
        vertex_figure_shape: Some(vf_shape.into()),
        mirror_vector: Some(mv.to_vec()),
        flag_orbits: Some(1),
        flag_stabilizer_order: Some(1),
        ..Default::default()
    };
    r.fine_lengths = Some(FineLengths::default());
    r
}

fn with_len(mut r: ClassificationRecord, petrie: Option<u32>, hole: Option<u32>) -> ClassificationRecord {
    r.fine_lengths = Some(FineLengths { petrie: petrie.map(Length::Finite), hole: hole.map(Length::Finite), zigzag2: None });
    r
}

fn with_face(mut r: ClassificationRecord, k: FaceKind) -> ClassificationRecord {
    r.face_kind = Some(k);
    r
}

fn pure() -> Vec<CatalogEntry> {
    let inv = cubic_involutions();
    let mut rows: Vec<Target> = vec![
        Target::new("{6,6|3}", with_len(pure_record([2, 1, 2], "{6,6}", "planar", "skew"), None, Some(3)), 3),
        Target::new("{6,4|4}", with_len(pure_record([2, 1, 2], "{6,4}", "planar", "skew"), None, Some(4)), 3),
        Target::new("{4,6|4}", with_len(pure_record([2, 1, 2], "{4,6}", "planar", "skew"), None, Some(4)), 3),
        Target::new("{6,6}_4", with_len(pure_record([1, 2, 1], "{6,6}", "skew", "planar"), Some(4), None), 3),
        Target::new("{6,4}_6", with_len(pure_record([1, 2, 1], "{6,4}", "skew", "planar"), Some(6), None), 3),
        Target::new("{4,6}_6", with_len(pure_record([1, 2, 1], "{4,6}", "skew", "planar"), Some(6), None), 3),
        Target::new("{inf,3}^(a)", with_face(pure_record([1, 1, 1], "{inf,3}", "helical", "planar"), FaceKind::Helix(3)), 5),
        Target::new("{inf,4}_(.,*3)", with_face(pure_record([1, 1, 1], "{inf,4}", "helical", "planar"), FaceKind::Helix(3)), 5),
        Target::new("{inf,3}^(b)", with_face(pure_record([1, 1, 1], "{inf,3}", "helical", "planar"), FaceKind::Helix(4)), 5),
    ];
    for t in rows.iter_mut() {
        if t.want.fine_lengths == Some(FineLengths::default()) {
            t.want.fine_lengths = None;
        }
    }
    for mv in [[2u8, 1, 2], [1, 2, 1], [1, 1, 1]] {
        let r0s = affine_involutions(&inv[mv[0] as usize]);
        'search: for r1 in &inv[mv[1] as usize] {
            for r2 in &inv[mv[2] as usize] {
                if r1 == r2 || !matches!(r1.then(r2).order(12), Some(3 | 4 | 6)) {
                    continue;
                }
                for r0 in &r0s {
                    if !commute(r0, r2) || r0.then(r1).order(12).is_some_and(|p| p < 3) {
                        continue;
                    }
                    let g = GeneratorTriple::polyhedron(r0.clone(), r1.clone(), r2.clone(), Vec3::zero());
                    let w = if mv == [1, 1, 1] { 5 } else { 3 };
                    let Ok(c) = wythoff(&g, Some(&int(w))) else { continue };
                    let Some(rec) = record(&c) else { continue };
                    debug(&format!("{mv:?} {rec:?}"));
                    offer(&mut rows, GeneratorData::Triple(g), &c, &rec);
                    if !pending(&rows) {
                        break 'search;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for t in rows {
        let Some(GeneratorData::Triple(g)) = t.found else { panic!("no data for {}", t.id) };
        // the Petrie duals of the first row form the (1,1,2) row
        if t.id.contains('|') {
            let p = g.petrie().unwrap();
            let c = wythoff(&p, Some(&int(5))).unwrap();
            let rec = record(&c).unwrap();
            let q = &t.id[3..4];
            let hole = t.want.fine_lengths.unwrap().hole.unwrap();
            let face = t.want.schlafli.as_deref().unwrap()[1..2].parse::<u32>().unwrap();
            let id = match (face, q) {
                (4, _) => "{inf,6}_(4,4)".to_string(),
                (6, "4") => "{inf,4}_(6,4)".to_string(),
                _ => "{inf,6}_(6,3)".to_string(),
            };
            let _ = hole;
            let pwant = with_len(pure_record([1, 1, 2], &format!("{{inf,{q}}}"), "helical", "skew"), Some(face), None);
            assert!(matches(&pwant, &rec), "{id}: {rec:?}");
            out.push(entry(&id, EntryKind::PureApeirohedron, GeneratorData::Triple(p), pwant, 1, 5));
        }
        out.push(entry(&t.id, EntryKind::PureApeirohedron, GeneratorData::Triple(g), t.want, 1, t.window));
    }
    out
}

// ----------------------------------------------------------------- rank 4

fn rank4() -> Vec<CatalogEntry> {
    let inv = cubic_involutions();
    let refl = &inv[2];
    let skeleton = |r: usize, face: FaceKind, vf: &str| ClassificationRecord {
        r: Some(r),
        face_kind: Some(face),
        vertex_figure: Some(vf.into()),
        flag_orbits: Some(1),
        flag_stabilizer_order: Some(2),
        face_mirrors: Some(true),
        ..Default::default()
    };
    // (id, Schläfli orders of T1T2 and T2T3, order of T0T1 or None)
    let specs: [(&str, u32, u32, Option<u32>, ClassificationRecord); 4] = [
        ("skeleton-{4,3,4}", 3, 4, Some(4), skeleton(4, FaceKind::Convex(4), "octahedron")),
        ("skeleton-{{inf,3}_6#{},{3,3}}", 3, 3, None, skeleton(3, FaceKind::Zigzag, "tetrahedron")),
        ("skeleton-{{inf,3}_6#{},{3,4}}", 3, 4, None, skeleton(4, FaceKind::Zigzag, "octahedron")),
        ("skeleton-{{inf,4}_4#{},{4,3}}", 4, 3, None, skeleton(3, FaceKind::Zigzag, "cube")),
    ];
    let all_inv: Vec<Isometry> = inv.iter().flatten().cloned().collect();
    let t0s = affine_involutions(&all_inv);
    let mut out = Vec::new();
    for (id, p2, p3, p1, want) in specs {
        let mut targets = vec![Target::new(id, want, 3)];
        'search: for t1 in refl {
            for t2 in refl {
                if t1.then(t2).order(12) != Some(p2) {
                    continue;
                }
                for t3 in refl {
                    if t2.then(t3).order(12) != Some(p3) || !commute(t1, t3) {
                        continue;
                    }
                    for t0 in &t0s {
                        if !commute(t0, t2) || !commute(t0, t3) || t0.then(t1).order(12) != p1 {
                            continue;
                        }
                        let g = Rank4Generators { t: [t0.clone(), t1.clone(), t2.clone(), t3.clone()], base_vertex: Vec3::zero() };
                        let Ok(c) = two_skeleton(&g, &int(3)) else { continue };
                        let Some(rec) = record(&c) else { continue };
                        debug(&format!("{id} {rec:?}"));
                        offer(&mut targets, GeneratorData::Rank4(g), &c, &rec);
                        if !pending(&targets) {
                            break 'search;
                        }
                    }
                }
            }
        }
        let t = targets.pop().unwrap();
        let data = t.found.unwrap_or_else(|| panic!("no data for {id}"));
        out.push(entry(id, EntryKind::Rank4Skeleton, data, t.want, 1, 3));
    }
    out
}

// -------------------------------------------------------------- complexes

fn complex_record(mv: [u8; 2], g2: &str, r: usize, face: FaceKind, vf: &str, vset: &str, special: &str) -> ClassificationRecord {
    ClassificationRecord {
        r: Some(r),
        face_kind: Some(face),
        vertex_figure: Some(vf.into()),
        vertex_set: Some(vset.into()),
        special_group: Some(special.into()),
        mirror_vector: Some(mv.to_vec()),
        g2: Some(g2.into()),
        flag_orbits: Some(1),
        flag_stabilizer_order: Some(1),
        ..Default::default()
    }
}

/// Table rows of the simply flag-transitive complexes that are not
/// polyhedra.
fn complex_targets() -> Vec<Target> {
    use FaceKind::*;
    let (fcc, bcc, cub, v, w) = ("L(a,a,0)", "L(a,a,a)", "aZ3", "V_a", "W_a");
    let rows: Vec<(&str, [u8; 2], &str, usize, FaceKind, &str, &str, &str)> = vec![
        ("K1(1,2)", [1, 2], "D2", 4, Skew(4), "cuboctahedron", fcc, "[3,4]"),
        ("K2(1,2)", [1, 2], "C3", 3, Skew(4), "cube", bcc, "[3,4]"),
        ("K3(1,2)", [1, 2], "D3", 6, Skew(4), "double cube", bcc, "[3,4]"),
        ("K4(1,2)", [1, 2], "D2", 4, Skew(6), "octahedron", cub, "[3,4]"),
        ("K5(1,2)", [1, 2], "D2", 4, Skew(6), "double square", v, "[3,4]"),
        ("K6(1,2)", [1, 2], "D4", 8, Skew(6), "double octahedron", cub, "[3,4]"),
        ("K7(1,2)", [1, 2], "D3", 6, Skew(6), "double tetrahedron", w, "[3,4]"),
        ("K8(1,2)", [1, 2], "D2", 4, Skew(6), "cuboctahedron", fcc, "[3,4]"),
        ("K1(1,1)", [1, 1], "D3", 6, Helix(3), "double cube", bcc, "[3,4]"),
        ("K2(1,1)", [1, 1], "D2", 4, Helix(3), "double square", v, "[3,4]"),
        ("K3(1,1)", [1, 1], "D4", 8, Helix(3), "double octahedron", cub, "[3,4]"),
        ("K4(1,1)", [1, 1], "D3", 6, Helix(4), "double tetrahedron", w, "[3,4]"),
        ("K5(1,1)", [1, 1], "D2", 4, Helix(4), "ns-cuboctahedron", fcc, "[3,4]"),
        ("K6(1,1)", [1, 1], "C3", 3, Helix(4), "tetrahedron", w, "[3,4]+"),
        ("K7(1,1)", [1, 1], "C4", 4, Helix(3), "octahedron", cub, "[3,4]+"),
        ("K8(1,1)", [1, 1], "D2", 4, Helix(3), "ns-cuboctahedron", fcc, "[3,4]"),
        ("K9(1,1)", [1, 1], "C3", 3, Helix(3), "cube", bcc, "[3,4]+"),
        ("K(0,1)", [0, 1], "D2", 4, Zigzag, "ns-cuboctahedron", fcc, "[3,4]"),
        ("K(0,2)", [0, 2], "D2", 4, Zigzag, "cuboctahedron", fcc, "[3,4]"),
        ("K(2,1)", [2, 1], "D2", 4, Convex(6), "ns-cuboctahedron", fcc, "[3,4]"),
        ("K(2,2)", [2, 2], "D2", 4, Convex(3), "cuboctahedron", fcc, "[3,4]"),
    ];
    rows.into_iter()
        .map(|(id, mv, g2, r, face, vf, vs, sp)| {
            let window = if matches!(face, Helix(_)) { 5 } else { 3 };
            Target::new(id, complex_record(mv, g2, r, face, vf, vs, sp), window)
        })
        .collect()
}

/// Cyclic or dihedral groups of order at least 3 fixing `t`, each given by
/// at most two generators.
fn edge_stabilizers(lin: &[Isometry], t: &Vec3) -> Vec<Vec<Isometry>> {
    let fix: Vec<&Isometry> = lin.iter().filter(|g| &g.apply(t) == t && !g.is_identity()).collect();
    let mut seen: Vec<Vec<Isometry>> = Vec::new();
    let mut out = Vec::new();
    let mut consider = |gens: Vec<Isometry>| {
        let Ok(mut el) = closure(&gens, 64) else { return };
        el.sort();
        if el.len() < 3 || seen.contains(&el) {
            return;
        }
        let n = el.len() as u32;
        let cyclic = el.iter().any(|g| g.order(12) == Some(n));
        let rotations = el.iter().filter(|g| g.order(12).is_some_and(|k| k > 2)).count();
        let dihedral = n % 2 == 0 && el.iter().any(|g| g.order(12) == Some(n / 2)) && rotations > 0 || n == 4;
        seen.push(el);
        if cyclic || dihedral {
            out.push(gens);
        }
    };
    for a in &fix {
        consider(vec![(*a).clone()]);
        for b in &fix {
            if a < b {
                consider(vec![(*a).clone(), (*b).clone()]);
            }
        }
    }
    out
}

fn rename_vertex_figure(c: &PolygonalComplex, rec: &mut ClassificationRecord) {
    if rec.vertex_figure.as_deref() != Some("cuboctahedron") {
        return;
    }
    let Ok(f) = base_flag(c) else { return };
    let Ok(vf) = c.vertex_figure(f.vertex) else { return };
    if !graph_isomorphic(&vf, &reference::cuboctahedron(), GraphMode::Similarity).unwrap_or(false) {
        rec.vertex_figure = Some("ns-cuboctahedron".into());
    }
}

fn complexes() -> Vec<CatalogEntry> {
    let inv = cubic_involutions();
    let lin = linear_group(PointGroupName::Octahedral);
    let mut targets = complex_targets();
    let edges = [Vec3::ints(1, 0, 0), Vec3::ints(1, 1, 0), Vec3::ints(1, 1, 1)];
    for mv in [[1u8, 2], [1, 1], [0, 1], [0, 2], [2, 1], [2, 2]] {
        eprintln!("mirror vector {mv:?}");
        let mut open: Vec<Target> = Vec::new();
        let mut rest = Vec::new();
        for t in targets {
            if t.want.mirror_vector.as_deref() == Some(&mv[..]) {
                open.push(t);
            } else {
                rest.push(t);
            }
        }
        'search: for t in &edges {
            let stabs = edge_stabilizers(&lin, t);
            for l0 in &inv[mv[0] as usize] {
                let Ok(r0) = Isometry::new(l0.linear_part().clone(), t.clone()) else { continue };
                if !r0.is_involution() {
                    continue;
                }
                for r1 in &inv[mv[1] as usize] {
                    if &r1.apply(t) == t || r0.then(r1).order(12).is_some_and(|p| p < 3) {
                        continue;
                    }
                    for g2 in &stabs {
                        let g = GeneratorTriple { r0: r0.clone(), r1: r1.clone(), g2: g2.clone(), base_vertex: Vec3::zero() };
                        let w = if r0.then(r1).order(12).is_none() { 5 } else { 3 };
                        let Ok(c) = wythoff(&g, Some(&int(w))) else { continue };
                        let Some(mut rec) = record(&c) else { continue };
                        rename_vertex_figure(&c, &mut rec);
                        debug(&format!("{mv:?} {rec:?}"));
                        if offer(&mut open, GeneratorData::Triple(g), &c, &rec) && rec.vertex_figure.as_deref() == Some("ns-cuboctahedron") {
                            let vf = c.vertex_figure(base_flag(&c).unwrap().vertex).unwrap();
                            eprintln!("    vertex-figure {:?}", vf);
                        }
                        if !pending(&open) {
                            break 'search;
                        }
                    }
                }
            }
        }
        rest.extend(open);
        targets = rest;
    }
    let mut out = Vec::new();
    for t in complex_targets() {
        let found = targets.iter().find(|x| x.id == t.id).unwrap();
        match &found.found {
            Some(data) => out.push(entry(&t.id, EntryKind::SimplyFlagTransitiveComplex, data.clone(), t.want, 1, t.window)),
            None => eprintln!("no data for {}", t.id),
        }
    }
    out
}

// ---------------------------------------------------------------- main

// ----------------------------------------------------------------- chiral

/// How the two regular members sit in the parameter plane.
#[derive(Clone, Copy)]
enum Members {
    /// `(1,-1)` and `(1,1)`.
    Diagonal,
    /// `(1,0)` and `(0,1)`.
    Axes,
    /// `(0,1)` and `(1,0)`.
    SwappedAxes,
}

struct ChiralTarget {
    id: &'static str,
    spec: ChiralSpec,
    members: [&'static str; 2],
    layout: Members,
    defaults: [i64; 2],
    window: i64,
}

fn chiral_targets() -> Vec<ChiralTarget> {
    use PointGroupName::*;
    let spec = |p: Option<u32>, q: u32, special: PointGroupName, helix_over: Option<u32>| ChiralSpec { p, q, special, helix_over };
    vec![
        ChiralTarget { id: "P(a,b)", spec: spec(Some(6), 6, TetrahedralRotationsInversion, None), members: ["{6,6}_4", "{6,6|3}"], layout: Members::Diagonal, defaults: [1, 0], window: 3 },
        ChiralTarget { id: "Q(c,d)", spec: spec(Some(4), 6, Octahedral, None), members: ["{4,6}_6", "{4,6|4}"], layout: Members::Axes, defaults: [1, 1], window: 3 },
        ChiralTarget { id: "Q*(c,d)", spec: spec(Some(6), 4, Octahedral, None), members: ["{6,4}_6", "{6,4|4}"], layout: Members::Axes, defaults: [1, 1], window: 3 },
        ChiralTarget { id: "P1(a,b)", spec: spec(None, 3, TetrahedralRotations, Some(3)), members: ["{inf,3}^(a)", "tetrahedron"], layout: Members::Diagonal, defaults: [1, 2], window: 2 },
        ChiralTarget { id: "P2(c,d)", spec: spec(None, 3, OctahedralRotations, Some(4)), members: ["{inf,3}^(b)", "cube"], layout: Members::Axes, defaults: [1, 2], window: 2 },
        ChiralTarget { id: "P3(c,d)", spec: spec(None, 4, OctahedralRotations, Some(3)), members: ["{inf,4}_(.,*3)", "octahedron"], layout: Members::SwappedAxes, defaults: [1, 2], window: 2 },
    ]
}

fn instance_record(f: &ChiralFamily, t: &Vec3, window: i64) -> Option<ClassificationRecord> {
    let fam = f.with_basis([t.clone(), f.basis[1].clone()]).or_else(|_| f.with_basis([t.clone(), f.basis[0].clone()])).ok()?;
    let pair = fam.instance(&Scalar::one(), &Scalar::zero()).ok()?;
    let c = generate_from_chiral(&pair, &int(window * t.norm2().to_f64().sqrt().ceil() as i64)).ok()?;
    record(&c)
}

/// Shortest primitive direction of the plane lattice giving `want`.
fn member_direction(f: &ChiralFamily, want: &ClassificationRecord, window: i64) -> Option<Vec3> {
    let mut dirs = Vec::new();
    for i in -3i64..=3 {
        for j in -3i64..=3 {
            if num_integer::gcd(i, j) == 1 {
                let v = &f.basis[0].scale(&int(i)) + &f.basis[1].scale(&int(j));
                dirs.push((v.norm2(), v));
            }
        }
    }
    dirs.sort_by(|a, b| a.0.cmp(&b.0));
    dirs.into_iter().map(|(_, v)| v).find(|v| {
        let r = instance_record(f, v, window);
        debug(&format!("    {v:?}: {r:?}"));
        r.is_some_and(|r| matches(want, &r))
    })
}

/// Coprime parameter pairs used to compare normalizations.
fn chiral_samples() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for c in 1..=3i64 {
        for d in -3..=3i64 {
            if d != 0 && num_integer::gcd(c, d) == 1 {
                out.push((c, d));
            }
        }
    }
    out
}

/// Record of the member at `(c, d)` if it is chiral.
fn is_chiral(f: &ChiralFamily, c: i64, d: i64, window: i64) -> Option<ClassificationRecord> {
    let pair = f.instance(&int(c), &int(d)).ok()?;
    let cx = match Catalog::build_family(&pair, &int(window)) {
        Ok(cx) => cx,
        Err(e) => {
            debug(&format!("    ({c},{d}) build: {e}"));
            return None;
        }
    };
    let rec = record(&cx)?;
    debug(&format!("    ({c},{d}) {rec:?}"));
    (rec.flag_orbits == Some(2) && rec.two_orbit_class.as_deref() == Some("2_{}")).then_some(rec)
}

fn chiral(catalog: &[CatalogEntry]) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let only = std::env::var("BOOTSTRAP_ONLY").ok();
    for t in chiral_targets() {
        if only.as_deref().is_some_and(|o| o != t.id) {
            continue;
        }
        let wants: Vec<ClassificationRecord> = t
            .members
            .iter()
            .map(|id| catalog.iter().find(|e| &e.id == id).unwrap_or_else(|| panic!("missing {id}")).expected.clone())
            .collect();
        let mut chosen = None;
        for f in chiral_candidates(&t.spec).expect("candidates") {
            debug(&format!("  candidate basis {:?}", f.basis));
            let Some(u) = member_direction(&f, &wants[0], t.window + 1) else { continue };
            let Some(v) = member_direction(&f, &wants[1], t.window + 1) else { continue };
            let mut best: Option<(usize, ChiralFamily, Vec<(i64, i64)>)> = None;
            for lambda in [int(1), half(1), int(2)] {
                let v = v.scale(&lambda);
                let basis = match t.layout {
                    Members::Diagonal => [(&u + &v).scale(&half(1)), (&v - &u).scale(&half(1))],
                    Members::Axes => [u.clone(), v],
                    Members::SwappedAxes => [v, u.clone()],
                };
                let Ok(fam) = f.with_basis(basis) else { continue };
                let ok: Vec<(i64, i64)> = chiral_samples().into_iter().filter(|&(c, d)| is_chiral(&fam, c, d, 2).is_some()).collect();
                eprintln!("  {} scaling {lambda}: {} chiral samples", t.id, ok.len());
                if best.as_ref().is_none_or(|(b, _, _)| ok.len() > *b) {
                    best = Some((ok.len(), fam, ok));
                }
            }
            let Some((_, fam, ok)) = best else { continue };
            let failed: Vec<(i64, i64)> = chiral_samples().into_iter().filter(|p| !ok.contains(p)).collect();
            if !failed.is_empty() {
                eprintln!("  {} samples without a chiral polyhedron: {failed:?}", t.id);
            }
            let mut tries = vec![(t.defaults[0], t.defaults[1])];
            if t.spec.p.is_none() {
                tries.extend(ok.iter().copied());
            }
            for (c, d) in tries {
                if let Some(rec) = is_chiral(&fam, c, d, t.window) {
                    chosen = Some((fam.clone(), rec, [c, d]));
                    break;
                }
                debug(&format!("  ({c},{d}) not chiral for {:?}", fam.basis));
            }
            if chosen.is_some() {
                break;
            }
        }
        let (fam, rec, defaults) = chosen.unwrap_or_else(|| panic!("no family for {}", t.id));
        eprintln!("  found {}", t.id);
        let expected = ClassificationRecord {
            schlafli: rec.schlafli,
            face_kind: rec.face_kind,
            face_shape: rec.face_shape,
            vertex_figure_shape: rec.vertex_figure_shape,
            special_group: Some(t.spec.special.to_string()),
            flag_orbits: Some(2),
            two_orbit_class: Some("2_{}".into()),
            ..Default::default()
        };
        let mut e = entry(t.id, EntryKind::ChiralFamily, GeneratorData::Chiral(fam), expected, 1, t.window);
        e.params = defaults.iter().map(|&x| int(x)).collect();
        e.note = Some(format!("regular members {} and {}", t.members[0], t.members[1]));
        out.push(e);
    }
    out
}

fn data_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/catalog.json")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let path = data_path();
    let mut by_kind: BTreeMap<EntryKind, Vec<CatalogEntry>> = BTreeMap::new();
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(c) = Catalog::parse(&text) {
            for e in c.entries {
                by_kind.entry(e.kind).or_default().push(e);
            }
        }
    }
    let all = args.is_empty();
    let want = |s: &str| all || args.iter().any(|a| a == s);
    if want("finite") {
        by_kind.insert(EntryKind::FiniteRegular, finite());
    }
    if want("planar") {
        by_kind.insert(EntryKind::PlanarApeirohedron, planar());
    }
    if want("blend") {
        by_kind.insert(EntryKind::Blended, blends());
    }
    if want("pure") {
        by_kind.insert(EntryKind::PureApeirohedron, pure());
    }
    if want("rank4") {
        by_kind.insert(EntryKind::Rank4Skeleton, rank4());
    }
    if want("complex") {
        by_kind.insert(EntryKind::SimplyFlagTransitiveComplex, complexes());
    }
    if want("chiral") {
        let known: Vec<CatalogEntry> = by_kind.values().flatten().cloned().collect();
        by_kind.insert(EntryKind::ChiralFamily, chiral(&known));
    }
    let entries: Vec<CatalogEntry> = EntryKind::ALL.iter().flat_map(|k| by_kind.remove(k).unwrap_or_default()).collect();
    for k in EntryKind::ALL {
        eprintln!("{k}: {}", entries.iter().filter(|e| e.kind == k).count());
    }
    let cat = Catalog { version: SCHEMA_VERSION, entries };
    std::fs::write(&path, serde_json::to_string_pretty(&cat).unwrap() + "\n").unwrap();
}
