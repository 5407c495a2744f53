//! Table-based arithmetic in GF(q) for prime powers q with 2 <= q <= 128.
//!
//! Elements are integers `0..q-1`; the integer `n` encodes the polynomial
//! over GF(p) whose coefficients are the base-p digits of `n` (constant term
//! in the lowest digit). Extension fields are built modulo a fixed monic
//! irreducible polynomial, chosen as the one with the smallest integer
//! encoding, so tables are reproducible across runs and platforms.

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD: usize = 128;

/// Precomputed arithmetic tables for GF(q).
#[derive(Debug, Clone)]
pub struct FieldTable {
    q: usize,
    p: usize,
    deg: usize,
    /// Monic irreducible modulus, coefficient list low degree first (length deg+1).
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FieldTable {
    /// Build the arithmetic tables for GF(q).
    pub fn build(q: u64) -> Result<FieldTable> {
        let (p, deg) = prime_power_decompose(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD as u64 {
            return Err(Error::Unsupported(format!(
                "GF({q}) exceeds the supported field size {MAX_FIELD}"
            )));
        }
        let q = q as usize;
        let p = p as usize;
        let deg = deg as usize;
        let modulus = smallest_irreducible(p, deg);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let pa = digits(a, p, deg);
            let mut na = pa.clone();
            for d in na.iter_mut() {
                *d = ((p - *d as usize) % p) as u8;
            }
            neg[a] = encode(&na, p) as u8;
            for b in 0..q {
                let pb = digits(b, p, deg);
                let mut sum = vec![0u8; deg];
                for i in 0..deg {
                    sum[i] = ((pa[i] as usize + pb[i] as usize) % p) as u8;
                }
                add[a * q + b] = encode(&sum, p) as u8;
                let prod = poly_rem(&poly_mul(&pa, &pb, p), &modulus, p);
                let mut padded = vec![0u8; deg];
                padded[..prod.len()].copy_from_slice(&prod);
                mul[a * q + b] = encode(&padded, p) as u8;
            }
        }

        let mut inv = vec![0u8; q];
        for a in 1..q {
            let found = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| {
                Error::Internal(format!("no inverse for {a} in GF({q}); modulus not irreducible?"))
            })?;
            inv[a] = found as u8;
        }

        Ok(FieldTable { q, p, deg, modulus, add, mul, neg, inv })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Characteristic prime p.
    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Extension degree, p^deg = q.
    pub fn degree(&self) -> usize {
        self.deg
    }

    /// Modulus polynomial, coefficient list low degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        debug_assert!((a as usize) < self.q && (b as usize) < self.q);
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        debug_assert!((a as usize) < self.q && (b as usize) < self.q);
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        debug_assert!((a as usize) < self.q);
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivideByZero { q: self.q });
        }
        debug_assert!((a as usize) < self.q);
        Ok(self.inv[a as usize])
    }

    /// a^e by repeated multiplication (a^0 = 1).
    pub fn pow(&self, a: u8, e: u32) -> u8 {
        let mut acc = 1u8;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }
}

/// Decompose n as p^k for a prime p, if possible.
pub fn prime_power_decompose(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut k = 0;
            while m.is_multiple_of(d) {
                m /= d;
                k += 1;
            }
            return if m == 1 { Some((d, k)) } else { None };
        }
        d += 1;
    }
    Some((m, 1))
}

/// Largest prime power q with q <= ell. Requires ell >= 2.
pub fn largest_prime_power_leq(ell: u64) -> u64 {
    assert!(ell >= 2, "largest_prime_power_leq requires ell >= 2");
    (2..=ell)
        .rev()
        .find(|&n| prime_power_decompose(n).is_some())
        .expect("2 is a prime power")
}

fn digits(mut n: usize, p: usize, deg: usize) -> Vec<u8> {
    let mut out = vec![0u8; deg];
    for d in out.iter_mut() {
        *d = (n % p) as u8;
        n /= p;
    }
    debug_assert_eq!(n, 0);
    out
}

fn encode(coeffs: &[u8], p: usize) -> usize {
    coeffs.iter().rev().fold(0usize, |acc, &c| acc * p + c as usize)
}

fn trim(mut v: Vec<u8>) -> Vec<u8> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Product of two polynomials over GF(p), low degree first.
fn poly_mul(a: &[u8], b: &[u8], p: usize) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as usize + ai as usize * bj as usize) % p) as u8;
        }
    }
    trim(out)
}

/// Remainder of a modulo the monic polynomial m, over GF(p).
fn poly_rem(a: &[u8], m: &[u8], p: usize) -> Vec<u8> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], 1, "modulus must be monic");
    while r.len() > dm {
        let lead = *r.last().unwrap() as usize; // nonzero after trim
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = lead * mi as usize % p;
            r[shift + i] = ((r[shift + i] as usize + p - sub) % p) as u8;
        }
        r = trim(r);
    }
    r
}

/// True when m (monic, low degree first) has no monic divisor of degree
/// 1..=deg(m)/2 over GF(p).
fn poly_is_irreducible(m: &[u8], p: usize) -> bool {
    let dm = m.len() - 1;
    for d in 1..=dm / 2 {
        // all monic polynomials of degree d
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(m, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of the given degree over GF(p) with the
/// smallest base-p integer encoding.
fn smallest_irreducible(p: usize, deg: usize) -> Vec<u8> {
    if deg == 1 {
        return vec![0, 1]; // x
    }
    let count = p.pow(deg as u32);
    for low in 0..count {
        let mut cand = digits(low, p, deg);
        cand.push(1);
        if poly_is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of degree {deg} exists over GF({p})")
}

/// All prime powers q with 2 <= q <= MAX_FIELD.
pub fn supported_field_sizes() -> Vec<u64> {
    (2..=MAX_FIELD as u64)
        .filter(|&n| prime_power_decompose(n).is_some())
        .collect()
}

fn modulus_polynomial_text(modulus: &[u8]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in modulus.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    terms.join(" + ")
}

/// Markdown table of the modulus chosen for every supported extension field.
/// `docs/field-moduli.md` is generated from this and checked in tests.
pub fn moduli_table_markdown() -> String {
    let mut out = String::from(
        "# Field moduli\n\n\
         Elements of GF(p^k) are integers whose base-p digits are the\n\
         polynomial coefficients, constant term lowest. Each extension field\n\
         uses the monic irreducible modulus with the smallest integer\n\
         encoding, listed here. Prime fields need no modulus.\n\n\
         | q | p | k | modulus |\n\
         |---|---|---|---------|\n",
    );
    for q in supported_field_sizes() {
        let (p, k) = prime_power_decompose(q).expect("supported sizes are prime powers");
        if k < 2 {
            continue;
        }
        let f = FieldTable::build(q).expect("supported size builds");
        out.push_str(&format!(
            "| {q} | {p} | {k} | {} |\n",
            modulus_polynomial_text(f.modulus())
        ));
    }
    out
}
