use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use super::vector::{Mat3, Vec3};
use super::GeometryError;

/// Rotation orders realizable with entries in a real quadratic field all
/// divide one of 8, 10, 12, so searching up to 12 decides finiteness.
pub const MAX_FINITE_PERIOD: u32 = 12;

/// The isometry `x ↦ x·linear + translation`, acting on row vectors.
///
/// Composition follows the same left-to-right convention: `f.then(&g)` first
/// applies `f`, then `g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIsometry")]
pub struct Isometry {
    linear: Mat3,
    translation: Vec3,
}

#[derive(Deserialize)]
struct RawIsometry {
    linear: Mat3,
    translation: Vec3,
}

impl TryFrom<RawIsometry> for Isometry {
    type Error = GeometryError;
    fn try_from(r: RawIsometry) -> Result<Self, Self::Error> {
        Isometry::new(r.linear, r.translation)
    }
}

impl Isometry {
    /// Validates that `linear` is orthogonal and that all entries share a radicand.
    pub fn new(linear: Mat3, translation: Vec3) -> Result<Self, GeometryError> {
        linear.radicand()?;
        translation.radicand()?;
        if !linear.is_orthogonal() {
            return Err(GeometryError::NotOrthogonal);
        }
        let iso = Isometry { linear, translation };
        iso.radicand()?;
        Ok(iso)
    }

    pub fn identity() -> Self {
        Isometry { linear: Mat3::identity(), translation: Vec3::zero() }
    }

    pub fn translation(v: Vec3) -> Self {
        Isometry { linear: Mat3::identity(), translation: v }
    }

    pub fn linear(m: Mat3) -> Result<Self, GeometryError> {
        Isometry::new(m, Vec3::zero())
    }

    /// Linear isometry from a signed permutation given as integer rows.
    pub fn signed_permutation(rows: [[i64; 3]; 3]) -> Result<Self, GeometryError> {
        Isometry::linear(Mat3::from_ints(rows))
    }

    /// Reflection in the plane through `point` with normal `normal`.
    pub fn plane_reflection(point: &Vec3, normal: &Vec3) -> Result<Self, GeometryError> {
        let nn = normal.norm2();
        if nn.is_zero() {
            return Err(GeometryError::Degenerate("zero plane normal"));
        }
        let two = Scalar::int(2);
        let proj = outer(normal, normal).scale(&(&two / &nn));
        let linear = Mat3::identity().sub(&proj);
        let t = normal.scale(&(&(&two * &point.dot(normal)) / &nn));
        Isometry::new(linear, t)
    }

    /// Half-turn about the line through `point` with direction `dir`.
    pub fn half_turn(point: &Vec3, dir: &Vec3) -> Result<Self, GeometryError> {
        let uu = dir.norm2();
        if uu.is_zero() {
            return Err(GeometryError::Degenerate("zero axis direction"));
        }
        let linear = outer(dir, dir).scale(&(&Scalar::int(2) / &uu)).sub(&Mat3::identity());
        let t = point - &(point * &linear);
        Isometry::new(linear, t)
    }

    pub fn point_reflection(center: &Vec3) -> Self {
        let m = Mat3::identity().scale(&Scalar::int(-1));
        Isometry { linear: m, translation: center.scale(&Scalar::int(2)) }
    }

    pub fn linear_part(&self) -> &Mat3 {
        &self.linear
    }

    pub fn translation_part(&self) -> &Vec3 {
        &self.translation
    }

    pub fn radicand(&self) -> Result<u8, GeometryError> {
        let a = self.linear.radicand()?;
        let b = self.translation.radicand()?;
        match (a, b) {
            (1, x) | (x, 1) => Ok(x),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(GeometryError::IncompatibleRadicand(x, y)),
        }
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        &(p * &self.linear) + &self.translation
    }

    /// Applies only the linear part (for direction vectors).
    pub fn apply_linear(&self, v: &Vec3) -> Vec3 {
        v * &self.linear
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Isometry) -> Isometry {
        Isometry {
            linear: &self.linear * &g.linear,
            translation: &(&self.translation * &g.linear) + &g.translation,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let lt = self.linear.transpose();
        let t = -(&self.translation * &lt);
        Isometry { linear: lt, translation: t }
    }

    /// `g⁻¹ · self · g` (apply `g⁻¹`, then `self`, then `g`).
    pub fn conjugate_by(&self, g: &Isometry) -> Isometry {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, k: u32) -> Isometry {
        let mut acc = Isometry::identity();
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.linear.is_identity()
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.then(self).is_identity()
    }

    /// Smallest `k ≥ 1` with `self^k = I`, or `None` if there is none up to `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.then(self);
        }
        None
    }

    pub fn det(&self) -> Scalar {
        self.linear.det()
    }

    pub fn is_proper(&self) -> bool {
        self.det().signum() > 0
    }

    pub fn classify(&self) -> IsometryKind {
        classify(self)
    }

    pub fn mirror_dimension(&self) -> Option<u8> {
        self.classify().mirror_dimension()
    }

    /// Applies the same uniform scaling to the translation part, giving the
    /// conjugate of `self` by the similarity `x ↦ s·x`.
    pub fn scaled(&self, s: &Scalar) -> Isometry {
        Isometry { linear: self.linear.clone(), translation: self.translation.scale(s) }
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Isometry {{ linear: {:?}, translation: {:?} }}", self.linear, self.translation)
    }
}

/// `uᵀ·v` as a matrix.
pub(crate) fn outer(u: &Vec3, v: &Vec3) -> Mat3 {
    Mat3([0, 1, 2].map(|i| [0, 1, 2].map(|j| &u.0[i] * &v.0[j])))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub point: Vec3,
    pub direction: Vec3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plane {
    pub point: Vec3,
    pub normal: Vec3,
}

impl Plane {
    pub fn contains(&self, p: &Vec3) -> bool {
        (p - &self.point).dot(&self.normal).is_zero()
    }

    /// Same plane as a point set.
    pub fn same_as(&self, o: &Plane) -> bool {
        self.normal.cross(&o.normal).is_zero() && self.contains(&o.point)
    }
}

/// Geometric type of an isometry of 3-space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IsometryKind {
    Identity,
    Translation { vector: Vec3 },
    /// Rotation other than a half-turn; `period` is `None` for infinite order.
    Rotation { period: Option<u32>, axis: Line },
    PointReflection { center: Vec3 },
    /// Half-turn about a line.
    LineReflection { axis: Line },
    PlaneReflection { mirror: Plane },
    RotatoryReflection { period: Option<u32>, center: Vec3, axis: Vec3 },
    Screw { rotation_period: Option<u32>, axis: Line, shift: Vec3 },
    Glide { mirror: Plane, shift: Vec3 },
}

impl IsometryKind {
    pub fn tag(&self) -> &'static str {
        match self {
            IsometryKind::Identity => "identity",
            IsometryKind::Translation { .. } => "translation",
            IsometryKind::Rotation { .. } => "rotation",
            IsometryKind::PointReflection { .. } => "point-reflection",
            IsometryKind::LineReflection { .. } => "line-reflection",
            IsometryKind::PlaneReflection { .. } => "plane-reflection",
            IsometryKind::RotatoryReflection { .. } => "rotatory-reflection",
            IsometryKind::Screw { .. } => "screw",
            IsometryKind::Glide { .. } => "glide",
        }
    }

    /// Period of the isometry itself (`None` for infinite order).
    pub fn period(&self) -> Option<u32> {
        match self {
            IsometryKind::Identity => Some(1),
            IsometryKind::Translation { .. } | IsometryKind::Screw { .. } | IsometryKind::Glide { .. } => None,
            IsometryKind::Rotation { period, .. } | IsometryKind::RotatoryReflection { period, .. } => *period,
            IsometryKind::PointReflection { .. }
            | IsometryKind::LineReflection { .. }
            | IsometryKind::PlaneReflection { .. } => Some(2),
        }
    }

    pub fn mirror_dimension(&self) -> Option<u8> {
        match self {
            IsometryKind::PointReflection { .. } => Some(0),
            IsometryKind::LineReflection { .. } => Some(1),
            IsometryKind::PlaneReflection { .. } => Some(2),
            _ => None,
        }
    }

    pub fn is_reflection(&self) -> bool {
        self.mirror_dimension().is_some()
    }
}

/// A nonzero vector orthogonal to every column of `m` (rank 2 expected).
fn left_kernel(m: &Mat3) -> Option<Vec3> {
    let cols = [m.col(0), m.col(1), m.col(2)];
    for i in 0..3 {
        for j in i + 1..3 {
            let c = cols[i].cross(&cols[j]);
            if !c.is_zero() {
                return Some(c);
            }
        }
    }
    None
}

/// Solves `x·m = rhs` for invertible `m`.
fn solve_row(m: &Mat3, rhs: &Vec3) -> Option<Vec3> {
    m.inverse().map(|inv| rhs * &inv)
}

fn project(v: &Vec3, onto: &Vec3) -> Vec3 {
    onto.scale(&(&v.dot(onto) / &onto.norm2()))
}

fn classify(f: &Isometry) -> IsometryKind {
    let l = &f.linear;
    let t = &f.translation;
    let id = Mat3::identity();
    if f.det().signum() > 0 {
        if l.is_identity() {
            return if t.is_zero() {
                IsometryKind::Identity
            } else {
                IsometryKind::Translation { vector: t.clone() }
            };
        }
        let lm = l.sub(&id);
        let u = left_kernel(&lm).expect("rotation has an axis");
        let shift = project(t, &u);
        let rest = t - &shift;
        // (L − I) + projector onto u is invertible and agrees with L − I on u⊥.
        let m = lm.add(&outer(&u, &u).scale(&u.norm2().recip()));
        let point = solve_row(&m, &(-&rest)).expect("invertible on the axis complement");
        let axis = Line { point, direction: u };
        let period = l.order(MAX_FINITE_PERIOD);
        if !shift.is_zero() {
            return IsometryKind::Screw { rotation_period: period, axis, shift };
        }
        if period == Some(2) {
            return IsometryKind::LineReflection { axis };
        }
        return IsometryKind::Rotation { period, axis };
    }
    let minus_id = id.scale(&Scalar::int(-1));
    if *l == minus_id {
        return IsometryKind::PointReflection { center: t.scale(&Scalar::ratio(1, 2)) };
    }
    let lp = l.add(&id);
    let is_reflection = (l * l).is_identity() && l.trace() == Scalar::one();
    if is_reflection {
        let n = left_kernel(&lp).expect("reflection has a normal");
        let tn = project(t, &n);
        let tp = t - &tn;
        let mirror = Plane { point: tn.scale(&Scalar::ratio(1, 2)), normal: n };
        if tp.is_zero() {
            return IsometryKind::PlaneReflection { mirror };
        }
        return IsometryKind::Glide { mirror, shift: tp };
    }
    let lm = l.sub(&id);
    let center = solve_row(&lm, &(-t)).expect("rotatory reflection has a unique fixed point");
    let axis = left_kernel(&lp).expect("rotatory reflection has an axis");
    IsometryKind::RotatoryReflection { period: l.order(MAX_FINITE_PERIOD), center, axis }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot_z() -> Isometry {
        Isometry::signed_permutation([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]).unwrap()
    }

    fn flip_z() -> Isometry {
        Isometry::signed_permutation([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap()
    }

    #[test]
    fn action_convention() {
        assert_eq!(Isometry::identity().apply(&Vec3::ints(1, 2, 3)), Vec3::ints(1, 2, 3));
        assert!(flip_z().then(&flip_z()).is_identity());
        let f = Isometry::translation(Vec3::ints(1, 0, 0)).then(&rot_z());
        assert_eq!(f.apply(&Vec3::zero()), Vec3::ints(0, 1, 0));
        assert!(f.inverse().then(&f).is_identity());
    }

    #[test]
    fn kinds() {
        let minus = Isometry::signed_permutation([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]).unwrap();
        assert_eq!(minus.classify().tag(), "point-reflection");
        assert_eq!(minus.mirror_dimension(), Some(0));
        let half = Isometry::signed_permutation([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(half.classify().tag(), "line-reflection");
        assert_eq!(half.mirror_dimension(), Some(1));
        assert_eq!(flip_z().mirror_dimension(), Some(2));
        let rr = rot_z().then(&flip_z());
        let k = rr.classify();
        assert_eq!(k.tag(), "rotatory-reflection");
        assert_eq!(k.period(), Some(4));
        // independent check by matrix powers
        assert!(rr.pow(4).is_identity());
        assert!(!rr.pow(2).is_identity());
        let screw = rot_z().then(&Isometry::translation(Vec3::ints(0, 0, 1)));
        assert_eq!(screw.classify().tag(), "screw");
        assert_eq!(screw.mirror_dimension(), None);
        let glide = flip_z().then(&Isometry::translation(Vec3::ints(1, 0, 0)));
        assert_eq!(glide.classify().tag(), "glide");
    }

    #[test]
    fn axis_and_mirror_data() {
        let p = Vec3::ints(1, 2, 0);
        let h = Isometry::half_turn(&p, &Vec3::ints(0, 0, 1)).unwrap();
        match h.classify() {
            IsometryKind::LineReflection { axis } => {
                assert_eq!(axis.point, p);
            }
            k => panic!("unexpected {k:?}"),
        }
        let r = Isometry::plane_reflection(&Vec3::ints(0, 0, 3), &Vec3::ints(0, 0, 2)).unwrap();
        assert_eq!(r.apply(&Vec3::zero()), Vec3::ints(0, 0, 6));
        match r.classify() {
            IsometryKind::PlaneReflection { mirror } => assert!(mirror.contains(&Vec3::ints(5, 5, 3))),
            k => panic!("unexpected {k:?}"),
        }
    }

    #[test]
    fn rejects_non_orthogonal() {
        assert_eq!(
            Isometry::new(Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), Vec3::zero()),
            Err(GeometryError::NotOrthogonal)
        );
    }
}
