use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use super::GeometryError;

/// A point or vector of 3-space with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Vec3(pub [Scalar; 3]);

impl Vec3 {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Vec3([x, y, z])
    }

    /// Integer coordinates.
    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3([Scalar::int(x), Scalar::int(y), Scalar::int(z)])
    }

    pub fn zero() -> Self {
        Vec3::ints(0, 0, 0)
    }

    pub fn x(&self) -> &Scalar {
        &self.0[0]
    }

    pub fn y(&self) -> &Scalar {
        &self.0[1]
    }

    pub fn z(&self) -> &Scalar {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn dot(&self, o: &Vec3) -> Scalar {
        &(&(&self.0[0] * &o.0[0]) + &(&self.0[1] * &o.0[1])) + &(&self.0[2] * &o.0[2])
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist2(&self, o: &Vec3) -> Scalar {
        (self - o).norm2()
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let [a, b, c] = &self.0;
        let [x, y, z] = &o.0;
        Vec3([&(b * z) - &(c * y), &(c * x) - &(a * z), &(a * y) - &(b * x)])
    }

    pub fn scale(&self, s: &Scalar) -> Vec3 {
        Vec3([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    /// Radicand shared by the coordinates, or an error when two irrational
    /// coordinates disagree.
    pub fn radicand(&self) -> Result<u8, GeometryError> {
        common_radicand(self.0.iter())
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.0[0].to_f64(), self.0[1].to_f64(), self.0[2].to_f64()]
    }

    /// Whether `self` lies in the closed ball of squared radius `r2` about the origin.
    pub fn within(&self, r2: &Scalar) -> bool {
        self.norm2() <= *r2
    }
}

pub(crate) fn common_radicand<'a>(it: impl Iterator<Item = &'a Scalar>) -> Result<u8, GeometryError> {
    let mut d = 1u8;
    for s in it {
        let e = s.radicand();
        if e != 1 {
            if d == 1 {
                d = e;
            } else if d != e {
                return Err(GeometryError::IncompatibleRadicand(d, e));
            }
        }
    }
    Ok(d)
}

impl<'a> Add<&'a Vec3> for &'a Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl<'a> Sub<&'a Vec3> for &'a Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        &self + &o
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        &self - &o
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        -&self
    }
}

/// Row vector times matrix.
impl<'a> Mul<&'a Mat3> for &'a Vec3 {
    type Output = Vec3;
    fn mul(self, m: &Mat3) -> Vec3 {
        let v = &self.0;
        let col = |j: usize| {
            let mut acc = Scalar::zero();
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() && !m.0[i][j].is_zero() {
                    acc = &acc + &(vi * &m.0[i][j]);
                }
            }
            acc
        };
        Vec3([col(0), col(1), col(2)])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A 3×3 matrix acting on row vectors from the right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3::diag(Scalar::one(), Scalar::one(), Scalar::one())
    }

    pub fn diag(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let z = Scalar::zero;
        Mat3([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(Scalar::int)))
    }

    pub fn from_rows(r0: Vec3, r1: Vec3, r2: Vec3) -> Self {
        Mat3([r0.0, r1.0, r2.0])
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3(self.0[i].clone())
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_rows(self.col(0), self.col(1), self.col(2))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn det(&self) -> Scalar {
        self.row(0).dot(&self.row(1).cross(&self.row(2)))
    }

    pub fn trace(&self) -> Scalar {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn scale(&self, s: &Scalar) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|x| &x * s)))
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = &self.0[i][j] + &o.0[i][j];
            }
        }
        out
    }

    pub fn sub(&self, o: &Mat3) -> Mat3 {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        // rows of the inverse transpose are cross products of the rows
        let (r0, r1, r2) = (self.row(0), self.row(1), self.row(2));
        let c0 = r1.cross(&r2);
        let c1 = r2.cross(&r0);
        let c2 = r0.cross(&r1);
        let inv_t = Mat3::from_rows(c0, c1, c2).scale(&det.recip());
        Some(inv_t.transpose())
    }

    pub fn pow(&self, k: u32) -> Mat3 {
        let mut acc = Mat3::identity();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest `k ≥ 1` with `self^k = I`, searched up to `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    pub fn is_orthogonal(&self) -> bool {
        (self * &self.transpose()).is_identity()
    }

    /// Rank over the field.
    pub fn rank(&self) -> usize {
        let rows = [self.row(0), self.row(1), self.row(2)];
        if rows.iter().all(Vec3::is_zero) {
            return 0;
        }
        if !self.det().is_zero() {
            return 3;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if !rows[i].cross(&rows[j]).is_zero() {
                    return 2;
                }
            }
        }
        1
    }

    pub fn radicand(&self) -> Result<u8, GeometryError> {
        common_radicand(self.0.iter().flatten())
    }
}

impl<'a> Mul<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        Mat3([0, 1, 2].map(|i| (&self.row(i) * o).0))
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}; {:?}; {:?}]", self.row(0), self.row(1), self.row(2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let m = Mat3::from_ints([[1, 2, 0], [0, 1, 0], [3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(m.rank(), 3);
        assert_eq!(Mat3::from_ints([[1, 1, 0], [2, 2, 0], [0, 0, 0]]).rank(), 1);
        assert_eq!(Mat3::from_ints([[1, 0, 0], [0, 1, 0], [1, 1, 0]]).rank(), 2);
        assert!(Mat3::from_ints([[1, 1, 0], [2, 2, 0], [0, 0, 1]]).inverse().is_none());
    }

    #[test]
    fn cross_and_orders() {
        assert_eq!(Vec3::ints(1, 0, 0).cross(&Vec3::ints(0, 1, 0)), Vec3::ints(0, 0, 1));
        let rot = Mat3::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]);
        assert_eq!(rot.order(12), Some(4));
        assert_eq!(&Vec3::ints(1, 0, 0) * &rot, Vec3::ints(0, 1, 0));
    }
}
