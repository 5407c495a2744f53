//! Gaussian binomial coefficients [r k]_q in exact arbitrary precision.
//!
//! [r k]_q counts the rank-k flats of the rank-r projective geometry over
//! GF(q). Two independent evaluation routes are provided: the recursion
//! [r k] = q^k [r-1 k] + [r-1 k-1] and the closed product formula
//! (q^r - 1)...(q^{r-k+1} - 1) / ((q^k - 1)...(q - 1)).

use crate::error::{Error, Result};
use crate::report::PaperReport;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::time::Instant;

/// [r k]_q by the row recursion. Out-of-range k gives 0.
pub fn qbinom_recursive(q: u64, r: u32, k: i64) -> BigUint {
    assert!(q >= 2, "q must be at least 2");
    if k < 0 || k > r as i64 {
        return BigUint::zero();
    }
    let k = k as u32;
    let qb = BigUint::from(q);
    // row[j] = [i j]_q, built for i = 0..=r, keeping j <= k
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for i in 1..=r {
        let top = k.min(i) as usize;
        let mut next = Vec::with_capacity(top + 1);
        next.push(BigUint::one());
        for j in 1..=top {
            let mut v = row.get(j - 1).cloned().unwrap_or_else(BigUint::zero);
            if let Some(above) = row.get(j) {
                v += above * qb.pow(j as u32);
            }
            next.push(v);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// [r k]_q by the product formula, with every intermediate division checked
/// to be exact (each partial product is itself a Gaussian binomial).
pub fn qbinom_product(q: u64, r: u32, k: i64) -> Result<BigUint> {
    assert!(q >= 2, "q must be at least 2");
    if k < 0 || k > r as i64 {
        return Ok(BigUint::zero());
    }
    let k = k as u32;
    let qb = BigUint::from(q);
    let mut val = BigUint::one();
    for i in 1..=k {
        let num = qb.pow(r - k + i) - BigUint::one();
        let den = qb.pow(i) - BigUint::one();
        let (quot, rem) = (val * num).div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "inexact division computing [{r} {k}]_{q} at step {i}"
            )));
        }
        val = quot;
    }
    Ok(val)
}

/// [r k]_q. Uses the recursion, which has no failure path.
pub fn qbinom(q: u64, r: u32, k: i64) -> BigUint {
    qbinom_recursive(q, r, k)
}

/// Verify the three basic Gaussian-binomial properties at (q, r, k) with
/// 0 < k < r: the contraction lower bounds, the power sandwich, and the
/// complementary recursion.
pub fn check_qb_properties(q: u64, r: u32, k: u32) -> PaperReport {
    assert!(0 < k && k < r, "check_qb_properties requires 0 < k < r");
    let started = Instant::now();
    let mut rep = PaperReport::new(format!("qb-q{q}-r{r}-k{k}"), "Lemma 4 (qbinom properties)");
    let qb = BigUint::from(q);
    let val = qbinom(q, r, k as i64);
    rep.value("q", q);
    rep.value("r", r);
    rep.value("k", k);
    rep.value("qbinom", &val);

    // qb1: [r k] >= q^{ki} [r-i k] for all i in 0..=r
    let mut qb1 = true;
    let mut qb1_detail = String::new();
    for i in 0..=r {
        let rhs = qb.pow(k * i) * qbinom(q, r - i, k as i64);
        if val < rhs {
            qb1 = false;
            qb1_detail = format!("fails at i={i}: {val} < {rhs}");
            break;
        }
    }
    if qb1 {
        qb1_detail = format!("[{r} {k}] >= q^(k*i) [{}-i {k}] for i in 0..={r}", r);
    }
    rep.check("qb1", qb1, qb1_detail);

    // qb2: q^{k(r-k)} <= [r k] <= q^{rk}
    let low = qb.pow(k * (r - k));
    let high = qb.pow(r * k);
    rep.check(
        "qb2",
        low <= val && val <= high,
        format!("{low} <= {val} <= {high}"),
    );

    // qb3: [r k] = [r-1 k] + q^{r-k} [r-1 k-1]
    let rhs = qbinom(q, r - 1, k as i64) + qb.pow(r - k) * qbinom(q, r - 1, k as i64 - 1);
    rep.check("qb3", val == rhs, format!("{val} = {rhs}"));

    rep.finish(started)
}
