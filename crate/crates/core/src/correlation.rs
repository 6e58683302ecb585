//! Aperiodic correlation functions, evaluated exactly in Z[ω].

use crate::cyclotomic::{cyclotomic_polynomial, CyclotomicValue};
use crate::error::{usage, Result};
use crate::numfmt::format_significant;
use crate::seq::{Sequence, SequencePair};
use num_complex::Complex64;

/// Aperiodic cross-correlation `ρ_{a,b}(τ)`.
///
/// For `τ ≥ 0` this is `Σ_{k=0}^{N-1-τ} ω^{a_k - b_{k+τ}}`, for `τ < 0` it is
/// `Σ_{k=0}^{N-1+τ} ω^{a_{k-τ} - b_k}`, and it vanishes for `|τ| ≥ N`.
pub fn cross_corr(a: &Sequence, b: &Sequence, tau: i64) -> Result<CyclotomicValue> {
    if a.q() != b.q() || a.len() != b.len() {
        return usage(format!(
            "correlation needs equal length and modulus, got ({}, q={}) and ({}, q={})",
            a.len(),
            a.q(),
            b.len(),
            b.q()
        ));
    }
    let q = a.q();
    let n = a.len() as i64;
    let mut acc = CyclotomicValue::zero(q);
    if tau.abs() >= n {
        return Ok(acc);
    }
    let (av, bv) = (a.values(), b.values());
    if tau >= 0 {
        let t = tau as usize;
        for k in 0..(n as usize - t) {
            acc.add_root(av[k] + q - bv[k + t]);
        }
    } else {
        let t = (-tau) as usize;
        for k in 0..(n as usize - t) {
            acc.add_root(av[k + t] + q - bv[k]);
        }
    }
    Ok(acc)
}

/// Aperiodic autocorrelation `ρ_a(τ)`.
pub fn auto_corr(a: &Sequence, tau: i64) -> CyclotomicValue {
    cross_corr(a, a, tau).expect("a sequence always matches itself")
}

/// Correlation sums of a pair for `τ = 0..N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    pub n: usize,
    pub q: u32,
    /// `ρ_a(τ) + ρ_b(τ)`
    pub aacs: Vec<CyclotomicValue>,
    /// `ρ_{a,b}(τ) + ρ_{b,a}(τ)`
    pub accs: Vec<CyclotomicValue>,
}

pub fn profile(pair: &SequencePair) -> CorrelationProfile {
    let (a, b) = (pair.first(), pair.second());
    let n = pair.len();
    let corr = |x, y, t| cross_corr(x, y, t).expect("pair sequences share length and modulus");
    let mut aacs = Vec::with_capacity(n);
    let mut accs = Vec::with_capacity(n);
    for tau in 0..n as i64 {
        aacs.push(&corr(a, a, tau) + &corr(b, b, tau));
        accs.push(&corr(a, b, tau) + &corr(b, a, tau));
    }
    CorrelationProfile {
        n,
        q: pair.q(),
        aacs,
        accs,
    }
}

impl CorrelationProfile {
    /// Exact zero flags for `(aacs, accs)`.
    pub fn zero_flags(&self) -> (Vec<bool>, Vec<bool>) {
        let phi = cyclotomic_polynomial(self.q);
        let flags = |vs: &[CyclotomicValue]| -> Vec<bool> {
            vs.iter()
                .map(|v| if self.q == 2 { v.is_zero() } else { v.is_zero_with(&phi) })
                .collect()
        };
        (flags(&self.aacs), flags(&self.accs))
    }

    pub fn aacs_complex(&self) -> Vec<Complex64> {
        self.aacs.iter().map(CyclotomicValue::complex_value).collect()
    }

    pub fn accs_complex(&self) -> Vec<Complex64> {
        self.accs.iter().map(CyclotomicValue::complex_value).collect()
    }

    /// Exact squared magnitudes of the autocorrelation sums.
    pub fn aacs_norm_sqr(&self) -> Vec<Option<i64>> {
        self.aacs.iter().map(CyclotomicValue::norm_sqr_exact).collect()
    }

    /// Exact squared magnitudes of the cross-correlation sums.
    pub fn accs_norm_sqr(&self) -> Vec<Option<i64>> {
        self.accs.iter().map(CyclotomicValue::norm_sqr_exact).collect()
    }

    /// CSV with columns `tau,aacs_re,aacs_im,aacs_mag,accs_re,accs_im,accs_mag`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,aacs_re,aacs_im,aacs_mag,accs_re,accs_im,accs_mag\n");
        for (tau, (a, c)) in self.aacs_complex().into_iter().zip(self.accs_complex()).enumerate() {
            let cells = [a.re, a.im, a.norm(), c.re, c.im, c.norm()].map(format_significant);
            out.push_str(&format!("{tau},{}\n", cells.join(",")));
        }
        out
    }
}
