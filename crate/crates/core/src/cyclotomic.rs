//! Exact arithmetic in Z[ω] for ω a primitive q-th root of unity.
//!
//! A value is stored as integer multiplicities over the exponent classes
//! `0..q`, i.e. `Σ counts[k]·ω^k`. The representation is not unique (the
//! classes are linearly dependent), so equality and zero tests reduce the
//! integer polynomial `Σ counts[k]·x^k` modulo the q-th cyclotomic
//! polynomial Φ_q.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Neg, Sub};

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
///
/// Built as `(x^n - 1) / Π_{d | n, d < n} Φ_d(x)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (quot, rem) = divmod_monic(num, den);
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Polynomial division by a monic divisor over the integers.
fn divmod_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - dd] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i - dd + j] -= c * dj;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

/// An exact element `Σ counts[k]·ω^k` of the ring of integers extended by
/// `ω = exp(2πi/q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicValue {
    q: u32,
    counts: Vec<i64>,
}

impl CyclotomicValue {
    /// Panics if `counts.len() != q` or `q < 1`.
    pub fn new(q: u32, counts: Vec<i64>) -> Self {
        assert!(q >= 1, "modulus must be positive");
        assert_eq!(counts.len(), q as usize, "one count per exponent class");
        Self { q, counts }
    }

    pub fn zero(q: u32) -> Self {
        Self::new(q, vec![0; q as usize])
    }

    /// `n·ω^0`.
    pub fn from_int(q: u32, n: i64) -> Self {
        let mut v = Self::zero(q);
        v.counts[0] = n;
        v
    }

    /// `ω^k`, with `k` taken mod q.
    pub fn root(q: u32, k: i64) -> Self {
        let mut v = Self::zero(q);
        v.counts[k.rem_euclid(q as i64) as usize] = 1;
        v
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds `ω^k` in place.
    #[inline]
    pub fn add_root(&mut self, k: u32) {
        self.counts[(k % self.q) as usize] += 1;
    }

    /// Multiplication by `ω^j`: rotates exponent classes by `j`.
    pub fn mul_root(&self, j: i64) -> Self {
        let q = self.q as i64;
        let mut out = vec![0; self.q as usize];
        for (k, &c) in self.counts.iter().enumerate() {
            out[(k as i64 + j).rem_euclid(q) as usize] = c;
        }
        Self::new(self.q, out)
    }

    /// Complex conjugate: `ω^k ↦ ω^{-k}`.
    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let mut out = vec![0; q];
        for (k, &c) in self.counts.iter().enumerate() {
            out[(q - k) % q] = c;
        }
        Self::new(self.q, out)
    }

    /// Ring product, computed modulo `x^q - 1`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "moduli differ");
        let q = self.q as usize;
        let mut out = vec![0; q];
        for (i, &a) in self.counts.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.counts.iter().enumerate() {
                out[(i + j) % q] += a * b;
            }
        }
        Self::new(self.q, out)
    }

    /// Canonical remainder of `Σ counts[k]·x^k` modulo Φ_q; two values are
    /// equal iff their remainders are equal.
    pub fn reduced(&self) -> Vec<i64> {
        self.reduced_with(&cyclotomic_polynomial(self.q))
    }

    fn reduced_with(&self, phi: &[i64]) -> Vec<i64> {
        let (_, rem) = divmod_monic(&self.counts, phi);
        let deg = phi.len() - 1;
        let mut rem = rem;
        rem.resize(deg, 0);
        rem
    }

    /// Exact test for equality with complex zero.
    pub fn is_zero(&self) -> bool {
        // fast paths avoid building Φ_q for the common moduli
        match self.q {
            1 => self.counts[0] == 0,
            2 => self.counts[0] == self.counts[1],
            _ => self.is_zero_with(&cyclotomic_polynomial(self.q)),
        }
    }

    /// Zero test against a precomputed Φ_q.
    pub fn is_zero_with(&self, phi: &[i64]) -> bool {
        self.reduced_with(phi).iter().all(|&c| c == 0)
    }

    /// Returns the value as an integer when it lies in Z.
    pub fn to_integer(&self) -> Option<i64> {
        let rem = self.reduced();
        if rem.iter().skip(1).all(|&c| c == 0) {
            Some(rem.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Exact `|v|^2`, which is an integer whenever it is rational.
    pub fn norm_sqr_exact(&self) -> Option<i64> {
        self.mul(&self.conj()).to_integer()
    }

    pub fn complex_value(&self) -> Complex64 {
        let q = self.q as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| Complex64::from_polar(c as f64, 2.0 * PI * k as f64 / q))
            .sum()
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn add(self, rhs: Self) -> CyclotomicValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CyclotomicValue> for CyclotomicValue {
    fn add_assign(&mut self, rhs: &CyclotomicValue) {
        assert_eq!(self.q, rhs.q, "moduli differ");
        for (a, b) in self.counts.iter_mut().zip(&rhs.counts) {
            *a += b;
        }
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn neg(self) -> CyclotomicValue {
        CyclotomicValue::new(self.q, self.counts.iter().map(|c| -c).collect())
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;
    fn sub(self, rhs: Self) -> CyclotomicValue {
        self + &(-rhs)
    }
}
