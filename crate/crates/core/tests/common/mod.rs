//! Floating-point brute-force reference for correlations and zone widths.
//! Shares nothing with the exact code path except the sequence container.
#![allow(dead_code)]

use czcp_core::{Sequence, SequencePair};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const TOL: f64 = 1e-9;

pub fn symbols(s: &Sequence) -> Vec<Complex64> {
    let q = s.q() as f64;
    s.values()
        .iter()
        .map(|&e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / q))
        .collect()
}

/// Direct sum over both shift directions.
pub fn corr(a: &[Complex64], b: &[Complex64], tau: i64) -> Complex64 {
    let n = a.len() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let j = k + tau;
        if (0..n).contains(&j) {
            acc += a[k as usize] * b[j as usize].conj();
        }
    }
    acc
}

pub struct FloatProfile {
    pub aacs: Vec<Complex64>,
    pub accs: Vec<Complex64>,
}

pub fn float_profile(p: &SequencePair) -> FloatProfile {
    let (a, b) = (symbols(p.first()), symbols(p.second()));
    let n = a.len() as i64;
    FloatProfile {
        aacs: (0..n).map(|t| corr(&a, &a, t) + corr(&b, &b, t)).collect(),
        accs: (0..n).map(|t| corr(&a, &b, t) + corr(&b, &a, t)).collect(),
    }
}

/// `(front, tail_auto, tail_cross, z)`.
pub fn float_zones(p: &SequencePair) -> (usize, usize, usize, usize) {
    let fp = float_profile(p);
    let n = fp.aacs.len();
    let zero = |v: &Complex64| v.norm() < TOL;
    let front = fp.aacs.iter().skip(1).take_while(|v| zero(v)).count();
    let tail_a = fp.aacs.iter().skip(1).rev().take_while(|v| zero(v)).count();
    let tail_c = fp.accs.iter().rev().take_while(|v| zero(v)).count();
    let z = front.min(tail_a).min(tail_c).min(n / 2);
    (front, tail_a, tail_c, z)
}

pub fn rounded_magnitudes(v: &[Complex64]) -> Vec<i64> {
    v.iter().map(|z| z.norm().round() as i64).collect()
}

/// Run-length expansion: `[(v, k), …]` → `v` repeated `k` times, concatenated.
pub fn runs(spec: &[(i64, usize)]) -> Vec<i64> {
    spec.iter().flat_map(|&(v, k)| std::iter::repeat_n(v, k)).collect()
}
