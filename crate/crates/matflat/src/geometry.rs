//! Constructions of the named matroids: projective and affine geometries
//! over GF(q), the Blokhuis rank-3 matroid M(q), and the free extension of
//! a projective plane by one point.

use crate::bitset::{Subset, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::flats;
use crate::gf::FieldTable;
use crate::matroid::{projective_point_columns, Matroid};

/// PG(r-1, q) as a linear matroid: one normalized column per 1-dimensional
/// subspace of GF(q)^r, enumerated lexicographically. n = (q^r - 1)/(q - 1).
pub fn build_pg(r: usize, q: u64) -> Result<Matroid> {
    if r < 1 {
        return Err(Error::OutOfRange("projective geometry needs rank r >= 1".into()));
    }
    let field = FieldTable::build(q)?;
    let n = point_count_pg(r, q);
    if n > MAX_ELEMENTS as u64 {
        return Err(Error::ResourceLimit(format!(
            "PG({}, {q}) has {n} points, over the {MAX_ELEMENTS}-element cap",
            r - 1
        )));
    }
    let cols = projective_point_columns(&field, r);
    debug_assert_eq!(cols.len() as u64, n);
    Matroid::linear(field, r, cols)
}

/// AG(r-1, q) as a linear matroid: columns (v, 1) for v in GF(q)^{r-1},
/// enumerated lexicographically. n = q^{r-1}. This is the restriction of
/// PG(r-1, q) to the points off the hyperplane "last coordinate = 0".
pub fn build_ag(r: usize, q: u64) -> Result<Matroid> {
    if r < 1 {
        return Err(Error::OutOfRange("affine geometry needs rank r >= 1".into()));
    }
    let field = FieldTable::build(q)?;
    let n = (q as u128).pow(r as u32 - 1);
    if n > MAX_ELEMENTS as u128 {
        return Err(Error::ResourceLimit(format!(
            "AG({}, {q}) has {n} points, over the {MAX_ELEMENTS}-element cap",
            r - 1
        )));
    }
    let mut cols = Vec::with_capacity(n as usize);
    let mut v = vec![0u8; r - 1];
    loop {
        let mut col = v.clone();
        col.push(1);
        cols.push(col);
        let mut i = r - 1;
        loop {
            if i == 0 {
                return Matroid::linear(field, r, cols);
            }
            i -= 1;
            if (v[i] as u64) + 1 < q {
                v[i] += 1;
                for x in v[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Number of points of PG(r-1, q).
pub fn point_count_pg(r: usize, q: u64) -> u64 {
    (0..r).map(|i| q.pow(i as u32)).sum()
}

/// The Blokhuis matroid M(q): the affine plane AG(2,q) with one parallel
/// class of q lines demoted to non-lines. Ground set is GF(q)^2 with point
/// (x, y) at index x*q + y; the demoted class is the vertical direction, so
/// the long lines are exactly the q^2 graphs y = a*x + b.
pub fn build_blokhuis(q: u64) -> Result<Matroid> {
    if q == 2 {
        return Err(Error::Unsupported(
            "AG(2,2) has no 3-point lines, so the construction degenerates at q = 2".into(),
        ));
    }
    let field = FieldTable::build(q)?;
    let qs = field.q();
    let n = qs * qs;
    if n > MAX_ELEMENTS {
        return Err(Error::ResourceLimit(format!(
            "M({q}) has {n} points, over the {MAX_ELEMENTS}-element cap"
        )));
    }
    let mut lines = Vec::with_capacity(n);
    for a in 0..qs as u8 {
        for b in 0..qs as u8 {
            let line = Subset::from_elems((0..qs as u8).map(|x| {
                let y = field.add(field.mul(a, x), b);
                x as usize * qs + y as usize
            }));
            lines.push(line);
        }
    }
    Matroid::rank3_from_lines(n, lines)
}

/// The free extension of PG(2,q) by one point: the ground set is the plane's
/// points plus a new element on none of the long lines. Supported for
/// q in {2, 3, 4, 5}.
pub fn build_pg_plus_free_point(q: u64) -> Result<Matroid> {
    if !(2..=5).contains(&q) {
        return Err(Error::Unsupported(format!(
            "free extension of PG(2,q) is provided for q in {{2,3,4,5}}, got q = {q}"
        )));
    }
    let plane = build_pg(3, q)?;
    let n0 = plane.n_elements();
    let levels = flats::enumerate_flats(&plane, 2)?;
    let lines: Vec<Subset> = levels.level(2).iter().map(|f| f.members).collect();
    Matroid::rank3_from_lines(n0 + 1, lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::whitney;
    use crate::qbinom::qbinom;
    use num_traits::ToPrimitive;

    #[test]
    fn pg_point_counts_and_flats() {
        let fano = build_pg(3, 2).unwrap();
        assert_eq!(fano.n_elements(), 7);
        assert_eq!(whitney(&fano, 2).unwrap(), 7);
        let single = build_pg(1, 5).unwrap();
        assert_eq!(single.n_elements(), 1);
        assert_eq!(single.rank(), 1);
        let pg32 = build_pg(4, 2).unwrap();
        assert_eq!(pg32.n_elements(), 15);
        assert_eq!(whitney(&pg32, 2).unwrap(), 35);
    }

    #[test]
    fn pg_respects_ground_cap() {
        assert!(matches!(build_pg(5, 4), Err(Error::ResourceLimit(_))));
        assert!(matches!(build_pg(9, 2), Err(Error::ResourceLimit(_))));
        assert!(build_pg(4, 5).is_ok()); // 156 points
    }

    #[test]
    fn ag_examples() {
        let ag23 = build_ag(3, 3).unwrap();
        assert_eq!(ag23.n_elements(), 9);
        assert_eq!(ag23.rank(), 3);
        assert_eq!(whitney(&ag23, 2).unwrap(), 12);

        let line = build_ag(2, 5).unwrap();
        assert_eq!(line.n_elements(), 5);
        assert_eq!(line.rank(), 2);
        assert_eq!(whitney(&line, 1).unwrap(), 5);

        // AG(2,2) is U_{3,4}: no three points collinear
        let ag22 = build_ag(3, 2).unwrap();
        assert_eq!(ag22.n_elements(), 4);
        assert_eq!(ag22.rank(), 3);
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    assert_eq!(ag22.rank_of(&Subset::from_elems([a, b, c])), 3);
                }
            }
        }
    }

    #[test]
    fn ag_is_pg_restriction_off_a_hyperplane() {
        for (r, q) in [(2usize, 3u64), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)] {
            let ag = build_ag(r, q).unwrap();
            let pg = build_pg(r, q).unwrap();
            let pg_lin = pg.as_linear().unwrap();
            let field = pg_lin.field();
            // map each AG column to its normalized representative in PG
            let mapping: Vec<usize> = ag
                .as_linear()
                .unwrap()
                .columns()
                .iter()
                .map(|col| {
                    let first = col.iter().position(|&x| x != 0).unwrap();
                    let scale = field.inv(col[first]).unwrap();
                    let norm: Vec<u8> = col.iter().map(|&x| field.mul(scale, x)).collect();
                    pg_lin.columns().iter().position(|c| *c == norm).unwrap()
                })
                .collect();
            // last coordinate of every mapped point is nonzero
            for &i in &mapping {
                assert_ne!(pg_lin.columns()[i][r - 1], 0);
            }
            // rank functions agree under the bijection, on sampled subsets
            let nag = ag.n_elements();
            let mut mask: u64 = 0x9e3779b97f4a7c15;
            for _ in 0..400 {
                mask = mask.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let s_ag = Subset::from_elems((0..nag).filter(|i| mask >> (i % 64) & 1 == 1));
                let s_pg = Subset::from_elems(s_ag.iter().map(|i| mapping[i]));
                assert_eq!(ag.rank_of(&s_ag), pg.rank_of(&s_pg));
            }
        }
    }

    #[test]
    fn blokhuis_counts() {
        for q in [3u64, 4, 5] {
            let m = build_blokhuis(q).unwrap();
            assert_eq!(m.n_elements() as u64, q * q);
            let lines = m.as_rank3().unwrap().long_lines();
            assert_eq!(lines.len() as u64, q * q);
            assert!(lines.iter().all(|l| l.len() as u64 == q));
            let w2 = whitney(&m, 2).unwrap();
            assert_eq!(w2 as u64, q * q * (q + 1) / 2);
        }
        assert_eq!(whitney(&build_blokhuis(3).unwrap(), 2).unwrap(), 18);
        assert_eq!(whitney(&build_blokhuis(4).unwrap(), 2).unwrap(), 40);
    }

    #[test]
    fn blokhuis_rejects_q2() {
        assert!(matches!(build_blokhuis(2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn blokhuis_point_degrees() {
        for q in [3u64, 4] {
            let m = build_blokhuis(q).unwrap();
            let levels = flats::enumerate_flats(&m, 2).unwrap();
            for e in m.ground().iter() {
                let through = levels.level(2).iter().filter(|f| f.members.contains(e)).count();
                assert_eq!(through as u64, 2 * q - 1);
            }
        }
    }

    #[test]
    fn free_point_contraction_spreads_points() {
        for q in [2u64, 3] {
            let m = build_pg_plus_free_point(q).unwrap();
            let e = m.n_elements() - 1; // the free point
            let contracted = m.contract(&Subset::singleton(e));
            let (_, classes) = contracted.simplify();
            let n0 = point_count_pg(3, q);
            assert_eq!(classes.len() as u64, n0, "no two plane points become parallel");
            assert!(classes.len() as u64 >= q * q + 1);
        }
    }

    #[test]
    fn free_point_rejects_out_of_range_q() {
        assert!(matches!(build_pg_plus_free_point(7), Err(Error::Unsupported(_))));
    }

    #[test]
    fn pg_whitney_matches_qbinom_spot_checks() {
        for (r, q, k) in [(3usize, 2u64, 2i64), (4, 2, 2), (3, 3, 1), (4, 3, 3), (3, 5, 2)] {
            let pg = build_pg(r, q).unwrap();
            let w = whitney(&pg, k as usize).unwrap();
            assert_eq!(w as u64, qbinom(q, r as u32, k).to_u64().unwrap());
        }
    }
}
