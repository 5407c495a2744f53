//! Brute-force reference implementations used to validate the fast paths.
//!
//! Everything here goes straight to the definitions: ranks of all subsets,
//! flats by closing every subset, line lengths by materializing every
//! contraction. These are exponential in the ground-set size and exist to
//! cross-check the production algorithms on small instances, so they share
//! as little machinery with them as possible.

use crate::bitset::Subset;
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::matroid::Matroid;
use crate::rng::SplitMix64;
use std::collections::HashSet;

/// Rank of every subset of the ground set, indexed by bitmask over the
/// ground elements in ascending order. Limited to 20 elements.
pub fn rank_table(m: &Matroid) -> Result<Vec<u8>> {
    let elems = m.ground().to_vec();
    let n = elems.len();
    if n > 20 {
        return Err(Error::ResourceLimit(format!(
            "rank table over {n} elements would have 2^{n} entries"
        )));
    }
    let table: Vec<u8> = (0..(1usize << n))
        .map(|mask| {
            let s = Subset::from_elems((0..n).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]));
            m.rank_of(&s) as u8
        })
        .collect();
    Ok(table)
}

/// Exhaustively verify the rank axioms: normalization, unit increase,
/// monotonicity, and submodularity over every pair of subsets.
pub fn check_rank_axioms_exhaustive(m: &Matroid) -> Result<()> {
    let elems = m.ground().to_vec();
    let n = elems.len();
    let table = rank_table(m)?;
    if table[0] != 0 {
        return Err(Error::Internal("rank(empty) != 0".into()));
    }
    for mask in 0..(1usize << n) {
        let r = table[mask];
        for i in 0..n {
            if mask >> i & 1 == 0 {
                let bigger = table[mask | 1 << i];
                if bigger < r || bigger > r + 1 {
                    return Err(Error::Internal(format!(
                        "unit-increase violated at mask {mask:#x}, element {}",
                        elems[i]
                    )));
                }
            }
        }
    }
    for a in 0..(1usize << n) {
        for b in 0..(1usize << n) {
            if table[a | b] as usize + table[a & b] as usize
                > table[a] as usize + table[b] as usize
            {
                return Err(Error::Internal(format!(
                    "submodularity violated at masks {a:#x}, {b:#x}"
                )));
            }
        }
    }
    Ok(())
}

/// Sampled rank-axiom check for larger ground sets.
pub fn check_rank_axioms_sampled(m: &Matroid, pairs: usize, seed: u64) -> Result<()> {
    let elems = m.ground().to_vec();
    let n = elems.len();
    let mut rng = SplitMix64::new(seed);
    let random_subset = |rng: &mut SplitMix64| {
        Subset::from_elems(elems.iter().copied().filter(|_| rng.chance(1, 2)))
    };
    if m.rank_of(&Subset::EMPTY) != 0 {
        return Err(Error::Internal("rank(empty) != 0".into()));
    }
    for _ in 0..pairs {
        let s = random_subset(&mut rng);
        let t = random_subset(&mut rng);
        let rs = m.rank_of(&s);
        let rt = m.rank_of(&t);
        let ru = m.rank_of(&s.union(&t));
        let ri = m.rank_of(&s.intersection(&t));
        if ru + ri > rs + rt {
            return Err(Error::Internal(format!("submodularity violated at {s:?}, {t:?}")));
        }
        if s.is_subset_of(&t) && rs > rt {
            return Err(Error::Internal(format!("monotonicity violated at {s:?} ⊆ {t:?}")));
        }
        let e = elems[rng.below(n)];
        let re = m.rank_of(&s.with(e));
        if re < rs || re > rs + 1 {
            return Err(Error::Internal(format!("unit increase violated at {s:?} + {e}")));
        }
    }
    Ok(())
}

/// Every flat, found by closing every subset and deduplicating, grouped by
/// rank. The independent oracle for level-by-level enumeration.
pub fn flats_by_closing_all_subsets(m: &Matroid) -> Result<Vec<Vec<Subset>>> {
    let elems = m.ground().to_vec();
    let n = elems.len();
    if n > 16 {
        return Err(Error::ResourceLimit(format!("2^{n} closures is too many")));
    }
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut by_rank: Vec<Vec<Subset>> = vec![Vec::new(); m.rank() + 1];
    for mask in 0..(1usize << n) {
        let s = Subset::from_elems((0..n).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]));
        let cl = m.closure(&s);
        if seen.insert(cl) {
            by_rank[m.rank_of(&cl)].push(cl);
        }
    }
    for level in by_rank.iter_mut() {
        level.sort_unstable();
    }
    Ok(by_rank)
}

/// Longest line over all contraction minors, by materializing every
/// contraction set, simplifying, and measuring every line of the result.
/// The independent oracle for the height-2 interval scan.
pub fn max_line_by_contraction_scan(m: &Matroid) -> Result<usize> {
    let elems = m.ground().to_vec();
    let n = elems.len();
    if n > 14 {
        return Err(Error::ResourceLimit(format!("2^{n} contractions is too many")));
    }
    let mut best = 0usize;
    for mask in 0..(1usize << n) {
        let c = Subset::from_elems((0..n).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]));
        let view = m.contract(&c);
        if view.rank() < 2 {
            continue;
        }
        let (si, _) = view.simplify();
        let pts = si.ground().to_vec();
        for (ai, &a) in pts.iter().enumerate() {
            for &b in pts.iter().skip(ai + 1) {
                if si.rank_of(&Subset::from_elems([a, b])) != 2 {
                    continue;
                }
                let line = si.closure(&Subset::from_elems([a, b]));
                best = best.max(line.len());
            }
        }
    }
    Ok(best)
}

/// Rebuild a contraction of a linear matroid from scratch: row-reduce on the
/// contracted columns and project the rest onto the complementary
/// coordinates. Rank-agrees with the lazy minor view.
pub fn contracted_linear_matroid(m: &Matroid, c: &Subset) -> Result<Matroid> {
    let lin = m
        .as_linear()
        .ok_or_else(|| Error::Unsupported("needs a linear matroid".into()))?;
    let field: &FieldTable = lin.field();
    let dim = lin.dim();
    // gaussian elimination on the contracted columns
    let mut basis: Vec<Vec<u8>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let reduce = |col: &mut Vec<u8>, basis: &[Vec<u8>], pivots: &[usize]| {
        for (v, &p) in basis.iter().zip(pivots.iter()) {
            let coef = col[p];
            if coef != 0 {
                for (x, &vx) in col.iter_mut().zip(v.iter()) {
                    *x = field.sub(*x, field.mul(coef, vx));
                }
            }
        }
    };
    for e in c.iter() {
        let mut col = lin.columns()[e].to_vec();
        reduce(&mut col, &basis, &pivots);
        if let Some(p) = col.iter().position(|&x| x != 0) {
            let inv = field.inv(col[p]).expect("nonzero pivot");
            for x in col.iter_mut() {
                *x = field.mul(*x, inv);
            }
            basis.push(col);
            pivots.push(p);
        }
    }
    // project remaining columns onto the non-pivot coordinates
    let keep: Vec<usize> = (0..dim).filter(|i| !pivots.contains(i)).collect();
    let remaining: Vec<usize> = m.ground().difference(c).to_vec();
    let cols: Vec<Vec<u8>> = remaining
        .iter()
        .map(|&e| {
            let mut col = lin.columns()[e].to_vec();
            reduce(&mut col, &basis, &pivots);
            keep.iter().map(|&i| col[i]).collect()
        })
        .collect();
    Matroid::linear(field.clone(), keep.len(), cols)
}
