use proptest::prelude::*;
use skeletal::catalog::{Catalog, GeneratorData};
use skeletal::classification::verify_chiral;
use skeletal::construction::{solve_chiral_family, ChiralFamily};
use skeletal::Scalar;

fn family(id: &str) -> ChiralFamily {
    match &Catalog::load().unwrap().get(id).unwrap().generators {
        GeneratorData::Chiral(f) => f.clone(),
        _ => panic!("{id} is not a family"),
    }
}

#[test]
fn solver_finds_a_family_for_every_spec() {
    for id in ["P(a,b)", "Q(c,d)", "Q*(c,d)", "P1(a,b)", "P2(c,d)", "P3(c,d)"] {
        let f = family(id);
        let solved = solve_chiral_family(&f.spec).unwrap();
        assert_eq!(solved.spec, f.spec, "{id}");
        assert_eq!(solved.plane_normal().cross(&f.plane_normal()), skeletal::Vec3::zero(), "{id}");
    }
}

#[test]
fn q_family_members() {
    let f = family("Q(c,d)");
    let window = Scalar::int(3);
    let chiral = verify_chiral(&f.instance(&Scalar::one(), &Scalar::one()).unwrap(), &window).unwrap();
    assert!(chiral.relations && chiral.chiral && chiral.half_turn);
    assert_eq!(chiral.two_orbit_class.as_deref(), Some("2_{}"));
    let regular = verify_chiral(&f.instance(&Scalar::zero(), &Scalar::one()).unwrap(), &window).unwrap();
    assert!(regular.regular && regular.half_turn);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_swaps_the_base_edge(c in -4i64..5, d in -4i64..5, which in 0usize..6) {
        prop_assume!(c != 0 || d != 0);
        let id = ["P(a,b)", "Q(c,d)", "Q*(c,d)", "P1(a,b)", "P2(c,d)", "P3(c,d)"][which];
        let pair = family(id).instance(&Scalar::int(c), &Scalar::int(d)).unwrap();
        let t = pair.t();
        let v = &pair.base_vertex;
        let u = pair.s1.apply(v);
        prop_assert!(t.is_involution());
        prop_assert_eq!(&t.apply(v), &u);
        prop_assert_eq!(&t.apply(&u), v);
    }
}
