#![allow(dead_code)]

use skeletal::construction::{GeneratorTriple, Rank4Generators};
use skeletal::geometry::{Isometry, Scalar, Vec3};
use skeletal::incidence::{build_complex, ComplexData, Face, PolygonalComplex};

pub fn plane(point: [i64; 3], normal: [i64; 3]) -> Isometry {
    Isometry::plane_reflection(&Vec3::ints(point[0], point[1], point[2]), &Vec3::ints(normal[0], normal[1], normal[2])).unwrap()
}

pub fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

pub fn cube() -> GeneratorTriple {
    GeneratorTriple::polyhedron(plane([0, 0, 0], [1, 0, 0]), plane([0, 0, 0], [1, -1, 0]), plane([0, 0, 0], [0, 1, -1]), Vec3::ints(1, 1, 1))
}

pub fn cubic_tessellation() -> Rank4Generators {
    let r0 = Isometry::plane_reflection(&Vec3::new(half(), Scalar::zero(), Scalar::zero()), &Vec3::ints(1, 0, 0)).unwrap();
    Rank4Generators { t: [r0, plane([0, 0, 0], [1, -1, 0]), plane([0, 0, 0], [0, 1, -1]), plane([0, 0, 0], [0, 0, 1])], base_vertex: Vec3::zero() }
}

pub fn square_tiling() -> GeneratorTriple {
    let r0 = Isometry::plane_reflection(&Vec3::new(half(), Scalar::zero(), Scalar::zero()), &Vec3::ints(1, 0, 0)).unwrap();
    GeneratorTriple::polyhedron(r0, plane([0, 0, 0], [1, -1, 0]), plane([0, 0, 0], [0, 1, 0]), Vec3::zero())
}

/// Boundary complex of the convex hull of `pts`, all of which must be
/// hull vertices with edges of one length.
pub fn convex_polyhedron(pts: Vec<Vec3>) -> PolygonalComplex {
    let n = pts.len();
    let mut min = None::<Scalar>;
    for i in 0..n {
        for j in i + 1..n {
            let d = pts[i].dist2(&pts[j]);
            if min.as_ref().map_or(true, |m| &d < m) {
                min = Some(d);
            }
        }
    }
    let min = min.unwrap();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i].dist2(&pts[j]) == min {
                edges.push([i, j]);
            }
        }
    }
    let adjacent = |a: usize, b: usize| edges.contains(&[a.min(b), a.max(b)]);
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = (&pts[j] - &pts[i]).cross(&(&pts[k] - &pts[i]));
                if nrm.is_zero() {
                    continue;
                }
                let side: Vec<i32> = pts.iter().map(|p| (p - &pts[i]).dot(&nrm).signum()).collect();
                if side.iter().any(|&s| s > 0) && side.iter().any(|&s| s < 0) {
                    continue;
                }
                let mut on: Vec<usize> = (0..n).filter(|&m| side[m] == 0).collect();
                on.sort();
                if faces.iter().any(|f| {
                    let mut g = f.clone();
                    g.sort();
                    g == on
                }) {
                    continue;
                }
                let mut cyc = vec![on[0]];
                while cyc.len() < on.len() {
                    let last = *cyc.last().unwrap();
                    let next = on.iter().copied().find(|&m| !cyc.contains(&m) && adjacent(last, m)).unwrap();
                    cyc.push(next);
                }
                faces.push(cyc);
            }
        }
    }
    let data = ComplexData {
        vertices: pts,
        edges,
        faces: faces.into_iter().map(|vertices| Face { vertices, closed: true, rule: None }).collect(),
        ..Default::default()
    };
    build_complex(data).unwrap()
}

pub fn cuboctahedron() -> PolygonalComplex {
    let mut v = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for s in [1, -1] {
            for t in [1, -1] {
                let mut c = [0; 3];
                c[i] = s;
                c[j] = t;
                v.push(Vec3::ints(c[0], c[1], c[2]));
            }
        }
    }
    convex_polyhedron(v)
}

/// Golden ratio.
pub fn phi() -> Scalar {
    &(&Scalar::one() + &Scalar::sqrt_of(5).unwrap()) * &half()
}

pub fn icosidodecahedron() -> PolygonalComplex {
    let p = phi();
    let mut v = Vec::new();
    for s in [1, -1] {
        let mut c = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        c[2] = &p * &Scalar::int(s);
        for r in 0..3 {
            v.push(Vec3::new(c[r % 3].clone(), c[(r + 1) % 3].clone(), c[(r + 2) % 3].clone()));
        }
    }
    let base = [half(), &p * &half(), &(&p * &p) * &half()];
    for sx in [1, -1] {
        for sy in [1, -1] {
            for sz in [1, -1] {
                let c = [&base[0] * &Scalar::int(sx), &base[1] * &Scalar::int(sy), &base[2] * &Scalar::int(sz)];
                for r in 0..3 {
                    v.push(Vec3::new(c[r % 3].clone(), c[(r + 1) % 3].clone(), c[(r + 2) % 3].clone()));
                }
            }
        }
    }
    convex_polyhedron(v)
}
