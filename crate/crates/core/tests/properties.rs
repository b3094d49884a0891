use proptest::prelude::*;
use skeletal::{Isometry, Rational, Scalar, Vec3};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..13).prop_map(|(n, d)| Rational::new(n, d))
}

/// Elements of one quadratic field `Q(√d)`.
fn scalars(d: u8, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((rational(), rational()), n).prop_map(move |v| {
        v.into_iter().map(|(a, b)| Scalar::new(d, a, if d == 1 { Rational::ZERO } else { b }).unwrap()).collect()
    })
}

fn field_triple() -> impl Strategy<Value = Vec<Scalar>> {
    prop_oneof![scalars(1, 3), scalars(2, 3), scalars(3, 3), scalars(5, 3)]
}

fn point() -> impl Strategy<Value = Vec3> {
    scalars(2, 3).prop_map(|v| Vec3::new(v[0].clone(), v[1].clone(), v[2].clone()))
}

/// Signed permutation matrices composed with a translation.
fn isometry() -> impl Strategy<Value = Isometry> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    (0usize..6, proptest::array::uniform3(prop_oneof![Just(1i64), Just(-1i64)]), point()).prop_map(move |(p, signs, t)| {
        let mut rows = [[0i64; 3]; 3];
        for i in 0..3 {
            rows[i][perms[p][i]] = signs[i];
        }
        Isometry::signed_permutation(rows).unwrap().then(&Isometry::translation(t))
    })
}

proptest! {
    #[test]
    fn field_laws(v in field_triple()) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(x + y) + z, x + &(y + z));
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x * &(y + z), &(x * y) + &(x * z));
        prop_assert!((x - x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(x * &x.recip(), Scalar::one());
        }
        prop_assert_eq!(Scalar::from((x * &x.conjugate()).rational_part().clone()), x * &x.conjugate());
    }

    #[test]
    fn order_agrees_with_floats(v in field_triple()) {
        let (x, y) = (&v[0], &v[1]);
        let gap = x.to_f64() - y.to_f64();
        if gap.abs() > 1e-9 {
            prop_assert_eq!(x < y, gap < 0.0);
        }
        prop_assert_eq!(x.signum() == 0, x.is_zero());
    }

    #[test]
    fn exact_square_roots(v in field_triple()) {
        let x = &v[0];
        let r = x.square().sqrt_exact();
        prop_assert_eq!(r, Some(x.abs()));
    }

    #[test]
    fn text_and_json_round_trip(v in field_triple(), p in point()) {
        for x in &v {
            prop_assert_eq!(&x.to_string().parse::<Scalar>().unwrap(), x);
            prop_assert_eq!(&serde_json::from_str::<Scalar>(&serde_json::to_string(x).unwrap()).unwrap(), x);
        }
        prop_assert_eq!(serde_json::from_str::<Vec3>(&serde_json::to_string(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn large_rationals(a in any::<i64>(), b in any::<i64>(), c in 1i64..i64::MAX) {
        let (x, y, z) = (Rational::from_int(a), Rational::from_int(b), Rational::new(1, c));
        let s = &(&x * &y) * &z;
        prop_assert_eq!(&(&s / &z) - &(&x * &y), Rational::ZERO);
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn isometry_group_laws(f in isometry(), g in isometry(), h in isometry(), p in point()) {
        prop_assert!(f.then(&f.inverse()).is_identity());
        prop_assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
        prop_assert_eq!(f.then(&g).apply(&p), g.apply(&f.apply(&p)));
        prop_assert_eq!(f.conjugate_by(&g).apply(&g.apply(&p)), g.apply(&f.apply(&p)));
        prop_assert_eq!(f.apply(&p).dist2(&f.apply(&Vec3::zero())), p.norm2());
    }
}
