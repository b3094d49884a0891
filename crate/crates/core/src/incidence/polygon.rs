use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::isometry::MAX_FINITE_PERIOD;
use crate::geometry::{Isometry, Mat3, Scalar, Vec3};

use super::IncidenceError;

/// A bi-infinite vertex sequence `v_{kn+j} = base[j]·step^k` where `n` is the
/// number of base vertices (1 or 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InfiniteRule {
    pub base: Vec<Vec3>,
    pub step: Isometry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polygon {
    Finite(Vec<Vec3>),
    Infinite(InfiniteRule),
}

/// Shape of a regular polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FaceKind {
    /// Convex planar p-gon.
    Convex(u32),
    /// Planar star polygon p/q.
    Star(u32, u32),
    /// Non-planar finite p-gon.
    Skew(u32),
    /// Planar zigzag.
    Zigzag,
    /// Helix over a k-gon.
    Helix(u32),
    Linear,
}

impl FaceKind {
    /// Number of vertices, `None` for infinite polygons.
    pub fn gonality(&self) -> Option<u32> {
        match *self {
            FaceKind::Convex(p) | FaceKind::Star(p, _) | FaceKind::Skew(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, FaceKind::Convex(_) | FaceKind::Star(..) | FaceKind::Zigzag | FaceKind::Linear)
    }

    pub fn is_helical(&self) -> bool {
        matches!(self, FaceKind::Helix(_))
    }
}

impl fmt::Display for FaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceKind::Convex(p) => write!(f, "{p}_c"),
            FaceKind::Star(p, q) => write!(f, "{p}/{q}"),
            FaceKind::Skew(p) => write!(f, "{p}_s"),
            FaceKind::Zigzag => write!(f, "inf_2"),
            FaceKind::Helix(k) => write!(f, "inf_{k}"),
            FaceKind::Linear => write!(f, "inf_linear"),
        }
    }
}

impl From<FaceKind> for String {
    fn from(k: FaceKind) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for FaceKind {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        let bad = || format!("unknown face kind {s:?}");
        if s == "inf_2" {
            return Ok(FaceKind::Zigzag);
        }
        if s == "inf_linear" {
            return Ok(FaceKind::Linear);
        }
        if let Some(k) = s.strip_prefix("inf_") {
            return k.parse().map(FaceKind::Helix).map_err(|_| bad());
        }
        if let Some(p) = s.strip_suffix("_c") {
            return p.parse().map(FaceKind::Convex).map_err(|_| bad());
        }
        if let Some(p) = s.strip_suffix("_s") {
            return p.parse().map(FaceKind::Skew).map_err(|_| bad());
        }
        if let Some((p, q)) = s.split_once('/') {
            return Ok(FaceKind::Star(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?));
        }
        Err(bad())
    }
}

impl InfiniteRule {
    pub fn new(base: Vec3, step: Isometry) -> Self {
        InfiniteRule { base: vec![base], step }
    }

    fn period(&self) -> usize {
        self.base.len()
    }

    /// `v_k`.
    pub fn vertex(&self, k: i64) -> Vec3 {
        let n = self.period() as i64;
        let (q, j) = (k.div_euclid(n), k.rem_euclid(n) as usize);
        let s = if q >= 0 { pow(&self.step, q as u64) } else { pow(&self.step.inverse(), (-q) as u64) };
        s.apply(&self.base[j])
    }

    /// `v_lo, …, v_hi`.
    pub fn vertices(&self, lo: i64, hi: i64) -> Vec<Vec3> {
        if self.period() == 1 {
            let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
            let mut p = self.vertex(lo);
            for _ in lo..=hi {
                let next = self.step.apply(&p);
                out.push(p);
                p = next;
            }
            out
        } else {
            (lo..=hi).map(|k| self.vertex(k)).collect()
        }
    }

    pub fn transform(&self, g: &Isometry) -> InfiniteRule {
        InfiniteRule { base: self.base.iter().map(|b| g.apply(b)).collect(), step: self.step.conjugate_by(g) }
    }

    /// The translation `step^m` where `m` is the order of the linear part.
    pub fn period_translation(&self) -> Result<(u32, Vec3), IncidenceError> {
        let m = self
            .step
            .linear_part()
            .order(MAX_FINITE_PERIOD)
            .ok_or(IncidenceError::InvalidRule("step rotates by an irrational angle"))?;
        let t = self.step.pow(m).translation_part().clone();
        if t.is_zero() {
            return Err(IncidenceError::InvalidRule("step has finite order"));
        }
        Ok((m, t))
    }

    /// Smallest and largest `k` with `|v_k| ≤ r`, if any.
    pub fn index_range_within(&self, r: &Scalar) -> Result<Option<(i64, i64)>, IncidenceError> {
        let (m, t) = self.period_translation()?;
        let n = self.period() as i64;
        let tt = t.norm2();
        let (tn, rr) = (tt.to_f64().sqrt(), r.to_f64());
        let r2 = r.square();
        let mut range: Option<(i64, i64)> = None;
        for j in 0..(m as i64 * n) {
            let p = self.vertex(j);
            let pt = p.dot(&t).to_f64();
            // |p + q·t| ≥ |p·t̂ + q|t||, so only these q can land in the ball.
            let lo = ((-rr * tn - pt) / (tn * tn)).floor() as i64 - 1;
            let hi = ((rr * tn - pt) / (tn * tn)).ceil() as i64 + 1;
            for q in lo..=hi {
                let v = &p + &t.scale(&Scalar::int(q));
                if v.norm2() <= r2 {
                    let k = j + q * m as i64 * n;
                    range = Some(match range {
                        None => (k, k),
                        Some((a, b)) => (a.min(k), b.max(k)),
                    });
                }
            }
        }
        Ok(range)
    }
}

fn pow(s: &Isometry, mut e: u64) -> Isometry {
    let mut acc = Isometry::identity();
    let mut b = s.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.then(&b);
        }
        b = b.then(&b);
        e >>= 1;
    }
    acc
}

impl Polygon {
    pub fn transform(&self, g: &Isometry) -> Polygon {
        match self {
            Polygon::Finite(vs) => Polygon::Finite(vs.iter().map(|v| g.apply(v)).collect()),
            Polygon::Infinite(r) => Polygon::Infinite(r.transform(g)),
        }
    }

    /// Vertices used for shape tests: the cycle, or a run of the sequence.
    fn sample(&self, len: i64) -> Vec<Vec3> {
        match self {
            Polygon::Finite(vs) => vs.clone(),
            Polygon::Infinite(r) => r.vertices(-len, len),
        }
    }
}

/// An isometry mapping each point of `pts` to the next one, preferring
/// proper isometries when more than one fits.
pub fn solve_step(pts: &[Vec3]) -> Option<Isometry> {
    if pts.len() < 4 {
        return None;
    }
    let d: Vec<Vec3> = pts.windows(2).map(|w| &w[1] - &w[0]).collect();
    if d.iter().all(|x| x == &d[0]) {
        return Some(Isometry::translation(d[0].clone()));
    }
    let mut best: Option<Isometry> = None;
    for cand in step_candidates(&d[0], &d[1], &d[2], d.get(3)) {
        let Ok(iso) = Isometry::new(cand.clone(), &pts[1] - &(&pts[0] * &cand)) else { continue };
        if pts.windows(2).all(|w| iso.apply(&w[0]) == w[1]) {
            if iso.is_proper() {
                return Some(iso);
            }
            best.get_or_insert(iso);
        }
    }
    best
}

/// Linear maps sending `a ↦ b`, `b ↦ c` (and `c ↦ d` when the three
/// differences are independent).
fn step_candidates(a: &Vec3, b: &Vec3, c: &Vec3, d: Option<&Vec3>) -> Vec<Mat3> {
    let ab = a.cross(b);
    if ab.is_zero() {
        return Vec::new();
    }
    let src = Mat3::from_rows(a.clone(), b.clone(), ab.clone());
    let Some(inv) = src.inverse() else { return Vec::new() };
    let mut out = Vec::new();
    if let (false, Some(d)) = (a.dot(&b.cross(c)).is_zero(), d) {
        let m3 = Mat3::from_rows(a.clone(), b.clone(), c.clone());
        if let Some(i3) = m3.inverse() {
            out.push(&i3 * &Mat3::from_rows(b.clone(), c.clone(), d.clone()));
        }
    }
    let bc = b.cross(c);
    for sign in [1, -1] {
        let dst = Mat3::from_rows(b.clone(), c.clone(), bc.scale(&Scalar::int(sign)));
        out.push(&inv * &dst);
    }
    out
}

fn coplanar(pts: &[Vec3]) -> bool {
    let p0 = &pts[0];
    let mut basis: Vec<Vec3> = Vec::new();
    for p in &pts[1..] {
        let d = p - p0;
        match basis.len() {
            0 if !d.is_zero() => basis.push(d),
            1 if !basis[0].cross(&d).is_zero() => basis.push(d),
            2 if !basis[0].cross(&basis[1]).dot(&d).is_zero() => return false,
            _ => {}
        }
    }
    true
}

fn collinear(pts: &[Vec3]) -> bool {
    let d0 = &pts[1] - &pts[0];
    pts.iter().all(|p| (p - &pts[0]).cross(&d0).is_zero())
}

/// Whether the index reflections `i ↦ −i` and `i ↦ 1−i` preserve all
/// pairwise distances, which for distinct points means the polygon has a
/// dihedral symmetry group transitive on its flags.
pub fn is_regular_polygon(p: &Polygon) -> bool {
    let (pts, n, cyclic) = match p {
        Polygon::Finite(vs) => (vs.clone(), vs.len() as i64, true),
        Polygon::Infinite(r) => {
            if r.period_translation().is_err() {
                return false;
            }
            (r.vertices(-12, 12), 25, false)
        }
    };
    if n < 3 {
        return false;
    }
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    let at = |i: i64| -> Option<&Vec3> {
        if cyclic {
            Some(&pts[i.rem_euclid(n) as usize])
        } else {
            let k = i + 12;
            (0..n).contains(&k).then(|| &pts[k as usize])
        }
    };
    let idx: Vec<i64> = if cyclic { (0..n).collect() } else { (-5..=6).collect() };
    for &i in &idx {
        for &j in &idx {
            let (Some(a), Some(b)) = (at(i), at(j)) else { continue };
            let dab = a.dist2(b);
            for (x, y) in [(-i, -j), (1 - i, 1 - j)] {
                if let (Some(c), Some(d)) = (at(x), at(y)) {
                    if c.dist2(d) != dab {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Shape of a regular polygon.
pub fn classify_polygon(p: &Polygon) -> Result<FaceKind, IncidenceError> {
    if !is_regular_polygon(p) {
        return Err(IncidenceError::NotRegular);
    }
    let pts = p.sample(12);
    match p {
        Polygon::Finite(vs) => {
            let n = vs.len() as u32;
            if !coplanar(vs) {
                return Ok(FaceKind::Skew(n));
            }
            let q = star_density(vs);
            Ok(if q == 1 { FaceKind::Convex(n) } else { FaceKind::Star(n, q) })
        }
        Polygon::Infinite(r) => {
            if collinear(&pts) {
                return Ok(FaceKind::Linear);
            }
            if coplanar(&pts) {
                return Ok(FaceKind::Zigzag);
            }
            let step = if r.base.len() == 1 { r.step.clone() } else { solve_step(&pts).ok_or(IncidenceError::NotRegular)? };
            let k = step.linear_part().order(MAX_FINITE_PERIOD).ok_or(IncidenceError::InvalidRule("irrational helix"))?;
            Ok(FaceKind::Helix(k))
        }
    }
}

/// One more than the number of vertices beyond the chord `v0 v1`, seen
/// from the centroid.
fn star_density(vs: &[Vec3]) -> u32 {
    let n = Scalar::int(vs.len() as i64);
    let mut c = Vec3::zero();
    for v in vs {
        c = &c + v;
    }
    let c = c.scale(&n.recip());
    let (a, b) = (&vs[0], &vs[1]);
    let normal = (b - a).cross(&(&c - a));
    if normal.is_zero() {
        // the chord passes through the centre: a digon-like degenerate case
        return 1;
    }
    // in-plane direction perpendicular to the chord, pointing towards c
    let inward = normal.cross(&(b - a));
    let side = |p: &Vec3| (p - a).dot(&inward).signum();
    let cs = side(&c);
    1 + vs[2..].iter().filter(|p| side(p) == -cs).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular(vs: Vec<Vec3>) -> Polygon {
        Polygon::Finite(vs)
    }

    #[test]
    fn squares_and_rectangles() {
        let sq = regular(vec![Vec3::ints(0, 0, 0), Vec3::ints(1, 0, 0), Vec3::ints(1, 1, 0), Vec3::ints(0, 1, 0)]);
        assert_eq!(classify_polygon(&sq), Ok(FaceKind::Convex(4)));
        let rect = regular(vec![Vec3::ints(0, 0, 0), Vec3::ints(2, 0, 0), Vec3::ints(2, 1, 0), Vec3::ints(0, 1, 0)]);
        assert!(!is_regular_polygon(&rect));
        assert_eq!(classify_polygon(&rect), Err(IncidenceError::NotRegular));
    }

    #[test]
    fn petrie_hexagon_of_cube() {
        let hex = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)];
        let p = regular(hex.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect());
        assert_eq!(classify_polygon(&p), Ok(FaceKind::Skew(6)));
    }

    #[test]
    fn pentagram_density() {
        // the regular pentagon's vertices visited two at a time, in Q(√5)
        let s5 = Scalar::sqrt_of(5).unwrap();
        let half = Scalar::ratio(1, 2);
        let tau = &half + &(&half * &s5);
        // vertices of a regular pentagon inside the plane z = 0 are not all in
        // Q(√5)³, so use the icosahedral pentagon around the vertex (0,1,τ)
        let pent = [
            Vec3::new(Scalar::zero(), -&Scalar::one(), tau.clone()),
            Vec3::new(tau.clone(), Scalar::zero(), Scalar::one()),
            Vec3::new(Scalar::one(), tau.clone(), Scalar::zero()),
            Vec3::new(-&Scalar::one(), tau.clone(), Scalar::zero()),
            Vec3::new(-&tau, Scalar::zero(), Scalar::one()),
        ];
        assert_eq!(classify_polygon(&regular(pent.to_vec())), Ok(FaceKind::Convex(5)));
        let star: Vec<Vec3> = (0..5).map(|i| pent[(2 * i) % 5].clone()).collect();
        assert_eq!(classify_polygon(&regular(star)), Ok(FaceKind::Star(5, 2)));
    }

    #[test]
    fn infinite_kinds() {
        // helix over a square: quarter turn about z and a unit rise
        let screw = Isometry::signed_permutation([[0, 1, 0], [-1, 0, 0], [0, 0, 1]])
            .unwrap()
            .then(&Isometry::translation(Vec3::ints(0, 0, 1)));
        let helix = Polygon::Infinite(InfiniteRule::new(Vec3::ints(1, 0, 0), screw));
        assert_eq!(classify_polygon(&helix), Ok(FaceKind::Helix(4)));
        // zigzag: half-turn about the x-axis followed by a unit shift along it
        let half = Isometry::signed_permutation([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
            .unwrap()
            .then(&Isometry::translation(Vec3::ints(1, 0, 0)));
        let zz = Polygon::Infinite(InfiniteRule::new(Vec3::ints(0, 1, 0), half));
        assert_eq!(classify_polygon(&zz), Ok(FaceKind::Zigzag));
    }

    #[test]
    fn zigzag_from_points_is_regular() {
        let pts: Vec<Vec3> = (0..8).map(|i| Vec3::ints(i, i % 2, 0)).collect();
        let step = solve_step(&pts).unwrap();
        // independent check: a half-turn swapping v0, v1 and the mirror x = 1
        // through v1 compose to the step
        let h = Scalar::ratio(1, 2);
        let r0 = Isometry::half_turn(&Vec3::new(h.clone(), h, Scalar::zero()), &Vec3::ints(0, 0, 1)).unwrap();
        let r1 = Isometry::plane_reflection(&Vec3::ints(1, 0, 0), &Vec3::ints(1, 0, 0)).unwrap();
        for p in &pts[..7] {
            assert_eq!(r1.apply(&r0.apply(p)), step.apply(p));
        }
        assert!(is_regular_polygon(&Polygon::Infinite(InfiniteRule::new(pts[0].clone(), step))));
    }

    #[test]
    fn index_range() {
        let t = Isometry::translation(Vec3::ints(1, 0, 0));
        let r = InfiniteRule::new(Vec3::ints(0, 1, 0), t);
        // |(k, 1, 0)|² ≤ 9 ⇔ |k| ≤ 2
        let r2 = Scalar::int(3);
        assert_eq!(r.index_range_within(&r2).unwrap(), Some((-2, 2)));
    }
}
