use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::geometry::{Mat3, Rational, Scalar, Vec3};

use super::lattice::Lattice;
use super::point_group::coset_representatives;
use super::{GroupError, IsometryGroup, DEFAULT_ELEMENT_BOUND};

/// The full translation subgroup of a group with finite special group.
///
/// Translations are generated exactly by Schreier generators over the
/// cosets of the special group, then reduced to a basis by Hermite normal
/// form over the rational coordinates of Q(√d)³ ≅ Q⁶ and finally shortened.
pub fn translation_subgroup(group: &IsometryGroup) -> Result<Lattice, GroupError> {
    let d = group.radicand()?;
    let reps = coset_representatives(group, DEFAULT_ELEMENT_BOUND)?;
    let index: HashMap<&Mat3, usize> = reps.iter().enumerate().map(|(i, (m, _))| (m, i)).collect();
    let mut vectors = Vec::new();
    for (_, r) in &reps {
        for g in group.symmetric_generators() {
            let y = r.then(&g);
            let back = &reps[index[y.linear_part()]].1;
            let t = y.then(&back.inverse());
            debug_assert!(t.linear_part().is_identity());
            if !t.translation_part().is_zero() {
                vectors.push(t.translation_part().clone());
            }
        }
    }
    let basis = integer_basis(&vectors, d)?;
    if basis.len() < 3 {
        return Err(GroupError::RankDeficient { rank: basis.len() });
    }
    Ok(Lattice::from_basis(reduce(basis)).with_identification())
}

/// A basis of the ℤ-span of `vectors` (all with radicand `d` or rational).
pub(crate) fn integer_basis(vectors: &[Vec3], d: u8) -> Result<Vec<Vec3>, GroupError> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<[Rational; 6]> = vectors
        .iter()
        .map(|v| {
            let a = v.0.clone().map(|x| x.rational_part().clone());
            let b = v.0.clone().map(|x| x.surd_part().clone());
            [a[0].clone(), a[1].clone(), a[2].clone(), b[0].clone(), b[1].clone(), b[2].clone()]
        })
        .collect();
    let mut den = BigInt::one();
    for r in &rows {
        for x in r {
            den = den.lcm(&x.denom());
        }
    }
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
        .collect();
    let h = hermite(&mut m);
    if h.len() > 3 {
        return Err(GroupError::DenseTranslations);
    }
    let den_r = Rational::from_big(den, BigInt::one());
    Ok(h
        .into_iter()
        .map(|row| {
            let q: Vec<Rational> = row.into_iter().map(|x| &Rational::from_big(x, BigInt::one()) / &den_r).collect();
            let s = |i: usize| Scalar::new(d, q[i].clone(), q[i + 3].clone()).expect("supported radicand");
            Vec3::new(s(0), s(1), s(2))
        })
        .collect())
}

/// Row-style Hermite normal form; returns the nonzero rows.
fn hermite(m: &mut [Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut top = 0;
    for c in 0..cols {
        loop {
            // smallest nonzero |entry| in column c among rows ≥ top
            let pivot = (top..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].abs());
            let Some(p) = pivot else { break };
            m.swap(top, p);
            let mut done = true;
            for i in top + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[top][c]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                    *x -= &q * y;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                top += 1;
                break;
            }
        }
        if top == m.len() {
            break;
        }
    }
    m[..top].to_vec()
}

/// Greedy pairwise reduction: subtract integer multiples while any vector
/// gets strictly shorter, then sort by length.
pub(crate) fn reduce(mut b: Vec<Vec3>) -> Vec<Vec3> {
    loop {
        b.sort_by(|x, y| x.norm2().cmp(&y.norm2()).then_with(|| y.cmp(x)));
        let mut changed = false;
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                let k = (b[i].dot(&b[j]).to_f64() / b[j].norm2().to_f64()).round() as i64;
                for kk in [k, k - 1, k + 1] {
                    if kk == 0 {
                        continue;
                    }
                    let cand = &b[i] - &b[j].scale(&Scalar::int(kk));
                    if cand.norm2() < b[i].norm2() {
                        b[i] = cand;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if !changed {
            // prefer vectors whose first nonzero coordinate is positive
            for v in b.iter_mut() {
                if v.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.signum() < 0) {
                    *v = -&*v;
                }
            }
            b.sort_by(|x, y| x.norm2().cmp(&y.norm2()).then_with(|| y.cmp(x)));
            return b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Isometry;
    use crate::groups::LatticeName;

    #[test]
    fn span_of_dependent_vectors() {
        let v = [Vec3::ints(2, 0, 0), Vec3::ints(3, 0, 0), Vec3::ints(0, 4, 0), Vec3::ints(0, 6, 0), Vec3::ints(1, 1, 1)];
        let b = reduce(integer_basis(&v, 1).unwrap());
        let expected = Lattice::from_basis(vec![Vec3::ints(1, 0, 0), Vec3::ints(0, 2, 0), Vec3::ints(0, 1, 1)]);
        assert!(Lattice::from_basis(b.clone()).same_as(&expected));
        assert_eq!(b.iter().map(|v| v.norm2()).collect::<Vec<_>>(), [1, 2, 2].map(Scalar::int));
    }

    #[test]
    fn point_group_is_rank_deficient() {
        let r = Isometry::signed_permutation([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]).unwrap();
        let g = IsometryGroup::new(vec![r]).unwrap();
        assert_eq!(translation_subgroup(&g), Err(GroupError::RankDeficient { rank: 0 }));
    }

    #[test]
    fn glide_generated_lattice() {
        let flip = Isometry::signed_permutation([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap();
        let glide = flip.then(&Isometry::translation(Vec3::ints(1, 0, 0)));
        let g = IsometryGroup::new(vec![
            glide,
            Isometry::translation(Vec3::ints(0, 2, 0)),
            Isometry::translation(Vec3::ints(0, 0, 2)),
        ])
        .unwrap();
        let l = translation_subgroup(&g).unwrap();
        assert_eq!(l.identify(), Some((LatticeName::Cubic, Scalar::int(2))));
    }
}
