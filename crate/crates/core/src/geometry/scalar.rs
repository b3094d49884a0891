//! Elements `a + b√d` of the real quadratic fields Q(√d), d ∈ {1, 2, 3, 5}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::GeometryError;

/// Radicands supported by [`Scalar`].
pub const RADICANDS: [u8; 4] = [1, 2, 3, 5];

/// An exact real number `a + b√d`.
///
/// Values with `b = 0` are canonically stored with `d = 1`, so a rational
/// combines with a scalar of any radicand. Two irrational scalars with
/// different radicands cannot be combined; the operator impls panic on that
/// and the `checked_*` methods return [`GeometryError::IncompatibleRadicand`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    d: u8,
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub fn new(d: u8, a: Rational, b: Rational) -> Result<Self, GeometryError> {
        if !RADICANDS.contains(&d) {
            return Err(GeometryError::UnsupportedRadicand(d as i64));
        }
        if d == 1 {
            return Ok(Scalar::from(&a + &b));
        }
        Ok(Self::canonical(d, a, b))
    }

    fn canonical(d: u8, a: Rational, b: Rational) -> Self {
        if b.is_zero() {
            Scalar { d: 1, a, b }
        } else {
            Scalar { d, a, b }
        }
    }

    pub fn zero() -> Self {
        Scalar { d: 1, a: Rational::ZERO, b: Rational::ZERO }
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar { d: 1, a: Rational::from_int(n), b: Rational::ZERO }
    }

    pub fn ratio(n: i64, den: i64) -> Self {
        Scalar { d: 1, a: Rational::new(n, den), b: Rational::ZERO }
    }

    /// `√d` for a supported radicand.
    pub fn sqrt_of(d: u8) -> Result<Self, GeometryError> {
        Scalar::new(d, Rational::ZERO, Rational::ONE)
    }

    /// Radicand of the field the value lives in (1 for rationals).
    pub fn radicand(&self) -> u8 {
        self.d
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of `√d`.
    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign, decided from the signs of `a`, `b` and a comparison of
    /// `a²` with `b²d`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let a2 = &self.a * &self.a;
        let b2d = &(&self.b * &self.b) * &Rational::from_int(self.d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Scalar { d: self.d, a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² − d b²`.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(self.d as i64))
    }

    fn join(&self, other: &Self) -> Result<u8, GeometryError> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(GeometryError::IncompatibleRadicand(x, y)),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, GeometryError> {
        let d = self.join(rhs)?;
        Ok(Self::canonical(d, &self.a + &rhs.a, &self.b + &rhs.b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, GeometryError> {
        let d = self.join(rhs)?;
        Ok(Self::canonical(d, &self.a - &rhs.a, &self.b - &rhs.b))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, GeometryError> {
        let d = self.join(rhs)?;
        if self.b.is_zero() && rhs.b.is_zero() {
            return Ok(Scalar { d: 1, a: &self.a * &rhs.a, b: Rational::ZERO });
        }
        if self.b.is_zero() {
            return Ok(Self::canonical(d, &self.a * &rhs.a, &self.a * &rhs.b));
        }
        if rhs.b.is_zero() {
            return Ok(Self::canonical(d, &self.a * &rhs.a, &self.b * &rhs.a));
        }
        let dd = Rational::from_int(d as i64);
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &dd);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(Self::canonical(d, a, b))
    }

    pub fn checked_recip(&self) -> Result<Self, GeometryError> {
        if self.is_zero() {
            return Err(GeometryError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar { d: 1, a: self.a.recip(), b: Rational::ZERO });
        }
        // 1/(a + b√d) = (a − b√d)/(a² − d b²); the norm is nonzero since √d is irrational.
        let n = self.norm();
        Ok(Self::canonical(self.d, &self.a / &n, &(-&self.b) / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, GeometryError> {
        self.checked_mul(&rhs.checked_recip()?)
    }

    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    pub fn checked_cmp(&self, rhs: &Self) -> Result<Ordering, GeometryError> {
        Ok(self.checked_sub(rhs)?.signum().cmp(&0))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root within the same field, if one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt_exact() {
                return Some(Scalar::from(r));
            }
            // a = d·s² for some radicand d gives s√d.
            for d in [2u8, 3, 5] {
                let q = &self.a / &Rational::from_int(d as i64);
                if let Some(s) = q.sqrt_exact() {
                    return Some(Self::canonical(d, Rational::ZERO, s));
                }
            }
            return None;
        }
        // (x + y√d)² = x² + d y² + 2xy√d. Then x² and d y² are the roots of
        // t² − a t + (b²d/4) = 0.
        let d = Rational::from_int(self.d as i64);
        let disc = self.norm();
        let root = disc.sqrt_exact()?;
        let two = Rational::from_int(2);
        for x2 in [&(&self.a + &root) / &two, &(&self.a - &root) / &two] {
            if let Some(x) = x2.sqrt_exact() {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / &(&two * &x);
                let cand = Self::canonical(self.d, x, y);
                if cand.signum() >= 0 && &cand * &cand == *self {
                    return Some(cand);
                }
                let neg = -&cand;
                if neg.signum() >= 0 && &neg * &neg == *self {
                    return Some(neg);
                }
            }
        }
        let _ = d;
        None
    }

    pub fn to_f64(&self) -> f64 {
        let root = (self.d as f64).sqrt();
        self.a.to_f64() + self.b.to_f64() * root
    }

    /// Decimal rendering rounded half up at `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal::render(self, digits)
    }
}

mod decimal {
    use super::Scalar;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    /// Rounds to the nearest multiple of 10^-digits using exact integer
    /// square roots for the surd part.
    pub(super) fn render(x: &Scalar, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        // value·10^k = a·10^k + b·√(d·10^{2k}); compute floor of 2·that to round.
        let a = x.rational_part();
        let b = x.surd_part();
        let k2 = &scale * &scale * BigInt::from(4);
        let an = a.numer() * &scale * 2;
        let ad = a.denom();
        let bn = b.numer();
        let bd = b.denom();
        // 2·value·10^k = an/ad + (bn/bd)·√(4 d 10^{2k})
        let den = &ad * &bd;
        let rad = &k2 * BigInt::from(x.radicand()) * &bn * &bn * &ad * &ad;
        // floor(sqrt(rad)) with the sign of bn; together with an·bd gives
        // floor of 2·value·10^k·den up to one unit.
        let root = rad.sqrt();
        let surd = if bn.is_negative() {
            let exact = &root * &root == rad;
            if exact {
                -root
            } else {
                -root - 1
            }
        } else {
            root
        };
        let total = an * &bd + surd;
        let twice = floor_div(&total, &den);
        // round half up: floor((2v + 1)/2)
        let rounded = floor_div(&(twice + 1), &BigInt::from(2));
        format_fixed(&rounded, digits)
    }

    fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
        use num_integer::Integer;
        n.div_floor(d)
    }

    fn format_fixed(n: &BigInt, digits: usize) -> String {
        let neg = n.is_negative();
        let s = n.abs().to_string();
        let body = if digits == 0 {
            s
        } else {
            let padded = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
            let (i, f) = padded.split_at(padded.len() - digits);
            format!("{i}.{f}")
        };
        if neg && !n.is_zero() {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl From<Rational> for Scalar {
    fn from(a: Rational) -> Self {
        Scalar { d: 1, a, b: Rational::ZERO }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.checked_cmp(other).expect("comparison of scalars with incompatible radicands")
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! scalar_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

scalar_op!(Add, add, checked_add);
scalar_op!(Sub, sub, checked_sub);
scalar_op!(Mul, mul, checked_mul);
scalar_op!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { d: self.d, a: -&self.a, b: -&self.b }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b == Rational::ONE {
            format!("sqrt({})", self.d)
        } else if self.b == -Rational::ONE {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if self.b.signum() < 0 {
            write!(f, "{}{}", self.a, surd)
        } else {
            write!(f, "{}+{}", self.a, surd)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = GeometryError;

    /// Parses `r`, `r*sqrt(d)`, `sqrt(d)`, `r+s*sqrt(d)` and `r-s*sqrt(d)`,
    /// where `r`, `s` are rational literals. `√d` is accepted for `sqrt(d)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeometryError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('√', "sqrt");
        let Some(pos) = t.find("sqrt") else {
            let r: Rational = t.parse().map_err(|_| bad())?;
            return Ok(Scalar::from(r));
        };
        let tail = &t[pos + 4..];
        let radicand: u8 = tail
            .trim_start_matches('(')
            .trim_end_matches(')')
            .parse()
            .map_err(|_| bad())?;
        let head = &t[..pos];
        let head = head.strip_suffix('*').unwrap_or(head);
        // split head into rational part and coefficient at the last sign that
        // is not at position 0
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-') && !head[..i].ends_with(['/', 'e']))
            .map(|(i, _)| i)
            .last();
        let (a, coeff) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("0", head),
        };
        let coeff = match coeff {
            "" | "+" => "1",
            "-" => "-1",
            c => c.strip_prefix('+').unwrap_or(c),
        };
        let a: Rational = a.parse().map_err(|_| bad())?;
        let b: Rational = coeff.parse().map_err(|_| bad())?;
        Scalar::new(radicand, a, b)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Text(String),
}

fn rational_to_pair(r: &Rational) -> [IntRepr; 2] {
    let to = |n: num_bigint::BigInt| match n.to_i64() {
        Some(v) => IntRepr::Small(v),
        None => IntRepr::Text(n.to_string()),
    };
    [to(r.numer()), to(r.denom())]
}

fn pair_to_rational(p: [IntRepr; 2]) -> Result<Rational, String> {
    let to = |x: IntRepr| -> Result<num_bigint::BigInt, String> {
        match x {
            IntRepr::Small(v) => Ok(v.into()),
            IntRepr::Text(s) => s.parse().map_err(|_| format!("bad integer `{s}`")),
        }
    };
    let [n, d] = p;
    let n = to(n)?;
    let d = to(d)?;
    if d <= num_bigint::BigInt::from(0) {
        return Err("denominator must be positive".into());
    }
    let r = Rational::from_big(n.clone(), d.clone());
    if r.denom() != d {
        return Err(format!("fraction {n}/{d} is not reduced"));
    }
    Ok(r)
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    d: u8,
    a: [IntRepr; 2],
    b: [IntRepr; 2],
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { d: self.d, a: rational_to_pair(&self.a), b: rational_to_pair(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(de)?;
        let a = pair_to_rational(r.a).map_err(D::Error::custom)?;
        let b = pair_to_rational(r.b).map_err(D::Error::custom)?;
        if r.d == 1 && !b.is_zero() {
            return Err(D::Error::custom("radicand 1 requires b = 0"));
        }
        Scalar::new(r.d, a, b).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&s("1+sqrt(2)") * &s("1-sqrt(2)"), Scalar::int(-1));
        assert_eq!((&s("1+sqrt(2)") * &s("1-sqrt(2)")).radicand(), 1);
    }

    #[test]
    fn sqrt2_exceeds_one() {
        assert_eq!(s("sqrt(2)").cmp(&Scalar::one()), Ordering::Greater);
        assert_eq!(s("-sqrt(2)").cmp(&Scalar::int(-1)), Ordering::Less);
        assert_eq!(s("3-2*sqrt(2)").signum(), 1);
        assert_eq!(s("1-sqrt(2)").signum(), -1);
    }

    #[test]
    fn golden_ratio_square() {
        // brute-force expansion: (1/2 + √5/2)² = 1/4 + 5/4 + 2·(1/4)√5
        let tau = s("1/2+1/2*sqrt(5)");
        assert_eq!(&tau * &tau, s("3/2+1/2*sqrt(5)"));
        assert_eq!(&tau * &tau, &tau + &Scalar::one());
    }

    #[test]
    fn division_and_errors() {
        let x = s("2+sqrt(3)");
        assert_eq!(&Scalar::one() / &x, s("2-sqrt(3)"));
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(GeometryError::DivisionByZero));
        assert_eq!(s("sqrt(2)").checked_add(&s("sqrt(3)")), Err(GeometryError::IncompatibleRadicand(2, 3)));
        assert!(Scalar::new(7, Rational::ZERO, Rational::ONE).is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(s("3+2*sqrt(2)").sqrt_exact(), Some(s("1+sqrt(2)")));
        assert_eq!(Scalar::int(2).sqrt_exact(), Some(s("sqrt(2)")));
        assert_eq!(Scalar::ratio(3, 4).sqrt_exact(), Some(s("1/2*sqrt(3)")));
        assert_eq!(Scalar::int(6).sqrt_exact(), None);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(s("sqrt(2)").to_decimal(12), "1.414213562373");
        assert_eq!(s("-sqrt(2)").to_decimal(3), "-1.414");
        assert_eq!(Scalar::ratio(1, 3).to_decimal(4), "0.3333");
        assert_eq!(Scalar::ratio(-1, 2).to_decimal(0), "0");
        assert_eq!(s("1/2+1/2*sqrt(5)").to_decimal(9), "1.618033989");
    }

    #[test]
    fn json_encoding() {
        let x = s("-1/2+3/4*sqrt(5)");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"d":5,"a":[-1,2],"b":[3,4]}"#);
        let y: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<Scalar>(r#"{"d":2,"a":[2,4],"b":[0,1]}"#).is_err());
        assert!(serde_json::from_str::<Scalar>(r#"{"d":2,"a":[1,-2],"b":[0,1]}"#).is_err());
    }

    #[test]
    fn display_parse_round_trip() {
        for t in ["0", "-3/2", "sqrt(5)", "-sqrt(3)", "1/2+1/2*sqrt(5)", "1-2*sqrt(2)"] {
            assert_eq!(s(t).to_string(), t);
        }
    }
}
