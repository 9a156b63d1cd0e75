//! Exact rank of sparse integer matrices.
//!
//! Rows are sparse `(column, value)` lists sorted by column. Rank over the
//! rationals uses fraction-free row elimination on integers: a row is reduced
//! against the stored pivot row with the same leading column via
//! `r <- (a/g) r - (b/g) p`, then divided by its content. Machine integers are
//! tried first; any overflow restarts the computation on `BigInt`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type SparseRow = Vec<(u32, i64)>;

trait ExactInt: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `a * x - b * y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl ExactInt for i64 {
    fn zero() -> i64 {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        // keep clear of i64::MIN so gcd and negation never overflow
        let v = a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)?;
        (v.unsigned_abs() <= 1 << 62).then_some(v)
    }
    fn gcd(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &i64) -> i64 {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl ExactInt for BigInt {
    fn zero() -> BigInt {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &BigInt) -> BigInt {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Cancels the leading entry of `r` against pivot `p` (same leading column),
/// keeping the row integral. `None` on overflow.
fn eliminate<T: ExactInt>(r: &[(u32, T)], p: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let g = p[0].1.gcd(&r[0].1);
    let a = p[0].1.div_exact(&g);
    let b = r[0].1.div_exact(&g);
    let zero = T::zero();
    let mut out: Vec<(u32, T)> = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let (col, v) = if j >= p.len() || (i < r.len() && r[i].0 < p[j].0) {
            i += 1;
            (r[i - 1].0, T::mul_sub(&a, &r[i - 1].1, &b, &zero)?)
        } else if i >= r.len() || p[j].0 < r[i].0 {
            j += 1;
            (p[j - 1].0, T::mul_sub(&a, &zero, &b, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, T::mul_sub(&a, &r[i - 1].1, &b, &p[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    if let Some(first) = out.first() {
        let mut c = first.1.clone();
        for (_, v) in &out[1..] {
            if c.is_unit() {
                break;
            }
            c = c.gcd(v);
        }
        if !c.is_unit() {
            for (_, v) in out.iter_mut() {
                *v = v.div_exact(&c);
            }
        }
    }
    Some(out)
}

fn rank_exact<T: ExactInt>(rows: Vec<Vec<(u32, T)>>) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for mut r in rows {
        r.retain(|(_, v)| !v.is_zero());
        while let Some(&(lead, _)) = r.first() {
            match pivots.get(&lead) {
                Some(p) => r = eliminate(&r, p)?,
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    if let Some(r) = rank_exact(rows.to_vec()) {
        return r;
    }
    let big: Vec<Vec<(u32, BigInt)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rank_exact(big).expect("BigInt elimination cannot overflow")
}

/// Rank over the rationals computed directly on arbitrary-precision integers.
pub fn rank_rational_bigint(rows: &[SparseRow]) -> usize {
    let big: Vec<Vec<(u32, BigInt)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rank_exact(big).expect("BigInt elimination cannot overflow")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over `GF(p)`; `p` must be a prime below `2^31`.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let norm = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, norm(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, lv)) = r.first() {
            match pivots.get(&lead) {
                Some(piv) => {
                    // piv is monic
                    let mut out = Vec::with_capacity(r.len() + piv.len());
                    let (mut i, mut j) = (1, 1);
                    while i < r.len() || j < piv.len() {
                        if j >= piv.len() || (i < r.len() && r[i].0 < piv[j].0) {
                            out.push(r[i]);
                            i += 1;
                        } else if i >= r.len() || piv[j].0 < r[i].0 {
                            out.push((piv[j].0, (p - lv * piv[j].1 % p) % p));
                            j += 1;
                        } else {
                            let v = (r[i].1 + p - lv * piv[j].1 % p) % p;
                            if v != 0 {
                                out.push((r[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    r = out;
                }
                None => {
                    let inv = pow_mod(lv, p - 2, p);
                    for (_, v) in r.iter_mut() {
                        *v = *v * inv % p;
                    }
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}
