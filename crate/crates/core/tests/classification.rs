mod common;

use common::*;
use skeletal::classification::{classify, flag_orbits, two_orbit_class, Length};
use skeletal::construction::{two_skeleton, wythoff};
use skeletal::geometry::Scalar;

#[test]
fn cube_record() {
    let c = wythoff(&cube(), None).unwrap();
    let (r, _) = classify(&c).unwrap();
    assert_eq!(r.flag_orbits, Some(1));
    assert_eq!(r.flag_stabilizer_order, Some(1));
    assert_eq!(r.schlafli.as_deref(), Some("{4,3}"));
    assert_eq!(r.mirror_vector, Some(vec![2, 2, 2]));
    assert_eq!(r.special_group.as_deref(), Some("[3,4]"));
    assert_eq!(r.vertex_figure.as_deref(), Some("triangle"));
    let fl = r.fine_lengths.unwrap();
    assert_eq!(fl.petrie, Some(Length::Finite(6)));
    assert_eq!(fl.hole, Some(Length::Finite(4)));
}

#[test]
fn archimedean_two_orbit() {
    for c in [cuboctahedron(), icosidodecahedron()] {
        assert_eq!(c.vertices().len() * 2, c.edges().len());
        assert_eq!(flag_orbits(&c).unwrap().count(), 2);
        assert_eq!(two_orbit_class(&c).unwrap(), "2_{0,1}");
    }
}

#[test]
fn square_tiling_record() {
    let c = wythoff(&square_tiling(), Some(&Scalar::int(3))).unwrap();
    let (r, _) = classify(&c).unwrap();
    assert_eq!(r.flag_orbits, Some(1));
    assert_eq!(r.schlafli.as_deref(), Some("{4,4}"));
    assert_eq!(r.mirror_vector, Some(vec![2, 2, 2]));
}

#[test]
fn cubic_skeleton_record() {
    let c = two_skeleton(&cubic_tessellation(), &Scalar::int(3)).unwrap();
    let (r, _) = classify(&c).unwrap();
    assert_eq!(r.r, Some(4));
    assert_eq!(r.flag_orbits, Some(1));
    assert_eq!(r.flag_stabilizer_order, Some(2));
    assert_eq!(r.face_mirrors, Some(true));
    assert_eq!(r.vertex_set.as_deref(), Some("aZ3"));
}

#[test]
fn zigzag_tiling_lengths() {
    let c = wythoff(&square_tiling().petrie().unwrap(), Some(&Scalar::int(4))).unwrap();
    let fl = skeletal::classification::fine_lengths(&c).unwrap();
    assert_eq!(fl.petrie, Some(Length::Finite(4)));
}
