//! Detection of rank-2 uniform minors and the growth-bound checkers built
//! on it: class membership U(ell), the point-count bound, the Whitney-number
//! bound, and the counterexample inequality chain.
//!
//! A matroid has a U_{2,n}-minor exactly when some height-2 interval [F, G]
//! of its flat lattice has at least n middle flats: the middle flats are the
//! points of a line of M/F. Scanning intervals avoids materializing any
//! contraction minor.

use crate::error::{Error, Result};
use crate::flats::{enumerate_flats_capped, whitney_capped, Flat, DEFAULT_FLAT_CAP};
use crate::geometry;
use crate::gf::{largest_prime_power_leq, prime_power_decompose};
use crate::matroid::Matroid;
use crate::qbinom::qbinom;
use crate::report::PaperReport;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::Instant;

/// Result of a line-length scan.
#[derive(Debug, Clone)]
pub struct LineLengthReport {
    /// Maximum number of middle flats over all height-2 intervals; the
    /// matroid has a U_{2,n}-minor exactly for n up to this value.
    pub max_line_length: usize,
    /// Interval [F, G] achieving the maximum (lexicographically least),
    /// or None for matroids of rank below 2.
    pub witness: Option<(Flat, Flat)>,
    /// Middle-flat count -> number of intervals. None after an early exit.
    pub histogram: Option<BTreeMap<usize, u64>>,
    /// False when the scan stopped at an early-exit threshold.
    pub exact: bool,
}

/// Scan all height-2 intervals of the flat lattice. With an early-exit
/// threshold the scan stops once a line at least that long is found, and
/// the reported value is that line's length (>= the threshold).
pub fn max_line_length_capped(
    m: &Matroid,
    early_exit_at: Option<usize>,
    cap: usize,
) -> Result<LineLengthReport> {
    let r = m.rank();
    if r < 2 {
        return Ok(LineLengthReport {
            max_line_length: 0,
            witness: None,
            histogram: Some(BTreeMap::new()),
            exact: true,
        });
    }
    let levels = enumerate_flats_capped(m, r, cap)?;
    let mut best = 0usize;
    let mut witness: Option<(Flat, Flat)> = None;
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for t in 0..=r - 2 {
        let lo = levels.level(t);
        let mid = levels.level(t + 1);
        let hi = levels.level(t + 2);
        let subs: Vec<Vec<u32>> = mid
            .par_iter()
            .map(|h| {
                lo.iter()
                    .enumerate()
                    .filter(|(_, f)| f.members.is_subset_of(&h.members))
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        let sups: Vec<Vec<u32>> = mid
            .par_iter()
            .map(|h| {
                hi.iter()
                    .enumerate()
                    .filter(|(_, g)| h.members.is_subset_of(&g.members))
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        let mut counts: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (fs, gs) in subs.iter().zip(sups.iter()) {
            for &fi in fs {
                for &gi in gs {
                    *counts.entry((fi, gi)).or_insert(0) += 1;
                }
            }
        }
        for (&(fi, gi), &c) in &counts {
            *histogram.entry(c).or_insert(0) += 1;
            if c > best {
                best = c;
                witness = Some((lo[fi as usize], hi[gi as usize]));
            }
        }
        if let Some(threshold) = early_exit_at {
            if best >= threshold {
                return Ok(LineLengthReport {
                    max_line_length: best,
                    witness,
                    histogram: None,
                    exact: false,
                });
            }
        }
    }
    Ok(LineLengthReport { max_line_length: best, witness, histogram: Some(histogram), exact: true })
}

pub fn max_line_length(m: &Matroid, early_exit_at: Option<usize>) -> Result<LineLengthReport> {
    max_line_length_capped(m, early_exit_at, DEFAULT_FLAT_CAP)
}

/// True when M has no U_{2,ell+2}-minor, i.e. every line of every
/// contraction has at most ell+1 points.
pub fn in_u_capped(m: &Matroid, ell: u64, cap: usize) -> Result<bool> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("class parameter ell must be >= 2, got {ell}")));
    }
    let threshold = (ell + 2) as usize;
    let report = max_line_length_capped(m, Some(threshold), cap)?;
    Ok(report.max_line_length < threshold)
}

pub fn in_u(m: &Matroid, ell: u64) -> Result<bool> {
    in_u_capped(m, ell, DEFAULT_FLAT_CAP)
}

fn require_in_u(m: &Matroid, ell: u64, cap: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("class parameter ell must be >= 2, got {ell}")));
    }
    let report = max_line_length_capped(m, Some((ell + 2) as usize), cap)?;
    if report.max_line_length >= (ell + 2) as usize {
        return Err(Error::NotInClass { ell, found: report.max_line_length });
    }
    Ok(())
}

/// Geometric series 1 + ell + ... + ell^{r-1} = (ell^r - 1)/(ell - 1).
fn point_bound(ell: u64, r: usize) -> BigUint {
    let base = BigUint::from(ell);
    let mut acc = BigUint::zero();
    let mut pow = BigUint::one();
    for _ in 0..r {
        acc += &pow;
        pow *= &base;
    }
    acc
}

/// Check the point-count bound W_1(M) <= (ell^r - 1)/(ell - 1) for
/// M in U(ell), recording the slack.
pub fn check_kung(m: &Matroid, ell: u64, cap: usize) -> Result<PaperReport> {
    let started = Instant::now();
    require_in_u(m, ell, cap)?;
    let r = m.rank();
    let w1 = whitney_capped(m, 1.min(r), cap)?;
    let w1 = if r == 0 { 0 } else { w1 };
    let bound = point_bound(ell, r);
    let mut rep = PaperReport::new(format!("kung-ell{ell}-r{r}"), "Theorem 2 (Kung)");
    rep.value("ell", ell);
    rep.value("rank", r);
    rep.value("W_1", w1);
    rep.value("bound", &bound);
    let ok = BigUint::from(w1) <= bound;
    let slack = if ok { &bound - BigUint::from(w1) } else { BigUint::zero() };
    rep.value("slack", &slack);
    rep.check(
        "kung",
        ok,
        format!("W_1 = {w1} <= ({ell}^{r} - 1)/({ell} - 1) = {bound}, slack {slack}"),
    );
    Ok(rep.finish(started))
}

/// Check the flat-count bound W_k(M) <= [r k]_q where q is the largest
/// prime power not exceeding ell, for M in U(ell). A failed check is the
/// interesting outcome, not an error.
pub fn check_whitney_bound(m: &Matroid, ell: u64, k: usize, cap: usize) -> Result<PaperReport> {
    let started = Instant::now();
    require_in_u(m, ell, cap)?;
    let r = m.rank();
    if k > r {
        return Err(Error::OutOfRange(format!("k = {k} exceeds the rank {r}")));
    }
    let qstar = largest_prime_power_leq(ell);
    let wk = whitney_capped(m, k, cap)?;
    let bound = qbinom(qstar, r as u32, k as i64);
    let mut rep =
        PaperReport::new(format!("whitney-bound-ell{ell}-k{k}"), "Theorem 1 / Conjecture 1");
    rep.value("ell", ell);
    rep.value("q", qstar);
    rep.value("rank", r);
    rep.value("k", k);
    rep.value("W_k", wk);
    rep.value("bound", &bound);
    rep.check(
        "whitney-bound",
        BigUint::from(wk) <= bound,
        format!("W_{k} = {wk} vs [{r} {k}]_{qstar} = {bound}"),
    );
    Ok(rep.finish(started))
}

/// Verify the counterexample chain for a prime power q > 125: pick the
/// power of two q' with (q+2)/4 < q' <= (q+2)/2, take W_2 of the Blokhuis
/// matroid M(q') (enumerated when q'^2 fits the ground-set cap, otherwise
/// by its proven line count), and check
/// W_2(M(q')) > (q+2)^3/128 >= (q+2)^2 > q^2 + q + 1 = [3 2]_q exactly.
pub fn corollary_check(q: u64, cap: usize) -> Result<PaperReport> {
    let started = Instant::now();
    if prime_power_decompose(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if q <= 125 {
        return Err(Error::OutOfRange(format!("the counterexample chain needs q > 125, got {q}")));
    }
    let mut rep = PaperReport::new(format!("corollary-q{q}"), "Corollary (q > 125)");

    // largest power of two with 2q' <= q+2
    let mut qp = 1u64;
    while 2 * (qp * 2) <= q + 2 {
        qp *= 2;
    }
    rep.value("q", q);
    rep.value("q_prime", qp);
    rep.check(
        "window",
        4 * qp > q + 2 && 2 * qp <= q + 2,
        format!("(q+2)/4 < {qp} <= (q+2)/2 with q+2 = {}", q + 2),
    );
    // U_{2,2q'}-freeness transfers: 2q' <= q+2
    rep.check(
        "minor-freeness",
        2 * qp <= q + 2,
        format!("2q' = {} <= q+2 = {}, so no U_{{2,{}}}-minor implies none of U_{{2,{}}}",
            2 * qp, q + 2, 2 * qp, q + 2),
    );

    let w2: BigUint;
    if qp * qp <= crate::bitset::MAX_ELEMENTS as u64 && qp >= 3 {
        let m = geometry::build_blokhuis(qp)?;
        let counted = whitney_capped(&m, 2, cap)?;
        let formula = qp * qp * (qp + 1) / 2;
        rep.check(
            "enumerated-w2",
            counted as u64 == formula,
            format!("W_2(M({qp})) enumerated = {counted}, formula = {formula}"),
        );
        let line = max_line_length_capped(&m, None, cap)?;
        rep.check(
            "enumerated-max-line",
            line.max_line_length as u64 == 2 * qp - 1,
            format!("max line length {} = 2q'-1 = {}", line.max_line_length, 2 * qp - 1),
        );
        w2 = BigUint::from(counted);
    } else {
        w2 = BigUint::from(qp) * BigUint::from(qp) * BigUint::from(qp + 1) / 2u32;
        rep.check(
            "symbolic-w2",
            true,
            format!("W_2(M({qp})) = q'^2(q'+1)/2 = {w2} (ground set too large to enumerate)"),
        );
    }
    rep.value("W_2", &w2);

    let qp2 = BigUint::from(q) + 2u32;
    let cube = qp2.pow(3);
    let square = qp2.pow(2);
    let target = qbinom(q, 3, 2);
    rep.value("qbinom_3_2", &target);
    rep.check(
        "chain-1",
        &w2 * 128u32 > cube,
        format!("W_2 = {w2} > (q+2)^3/128 = {cube}/128"),
    );
    rep.check(
        "chain-2",
        cube >= &square * 128u32,
        format!("(q+2)^3/128 = {cube}/128 >= (q+2)^2 = {square}"),
    );
    rep.check(
        "chain-3",
        square > target,
        format!("(q+2)^2 = {square} > q^2+q+1 = {target}"),
    );
    rep.check(
        "qbinom-identity",
        target == BigUint::from(q * q + q + 1),
        format!("[3 2]_{q} = {target} = q^2+q+1"),
    );
    rep.check(
        "conclusion",
        w2 > target,
        format!("W_2(M({qp})) = {w2} > [3 2]_{q} = {target}"),
    );
    Ok(rep.finish(started))
}
