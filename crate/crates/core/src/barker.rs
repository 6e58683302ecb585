//! Binary Barker sequences, the Barker concatenation pairs, and the Turyn
//! extension of binary CZCPs by GCPs.

use crate::correlation::{auto_corr, cross_corr};
use crate::error::{usage, Error, Result};
use crate::golay::{is_gcp, turyn};
use crate::seq::{Sequence, SequencePair};
use crate::verify::{verify, CzcpReport};

/// One row of the Barker table: every printed variant and its AACF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarkerEntry {
    pub n: usize,
    pub sequences: &'static [&'static str],
    pub autocorrelations: &'static [&'static [i64]],
}

pub const BARKER_TABLE: [BarkerEntry; 7] = [
    BarkerEntry {
        n: 2,
        sequences: &["+-", "++"],
        autocorrelations: &[&[2, -1], &[2, 1]],
    },
    BarkerEntry {
        n: 3,
        sequences: &["++-"],
        autocorrelations: &[&[3, 0, -1]],
    },
    BarkerEntry {
        n: 4,
        sequences: &["+-++", "+---"],
        autocorrelations: &[&[4, -1, 0, 1], &[4, 1, 0, -1]],
    },
    BarkerEntry {
        n: 5,
        sequences: &["+++-+"],
        autocorrelations: &[&[5, 0, 1, 0, 1]],
    },
    BarkerEntry {
        n: 7,
        sequences: &["+++--+-"],
        autocorrelations: &[&[7, 0, -1, 0, -1, 0, -1]],
    },
    BarkerEntry {
        n: 11,
        sequences: &["+++---+--+-"],
        autocorrelations: &[&[11, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1]],
    },
    BarkerEntry {
        n: 13,
        sequences: &["+++++--++-+-+"],
        autocorrelations: &[&[13, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]],
    },
];

pub fn barker_entry(n: usize) -> Result<&'static BarkerEntry> {
    BARKER_TABLE
        .iter()
        .find(|e| e.n == n)
        .ok_or_else(|| Error::Usage(format!("no binary Barker sequence of length {n}")))
}

/// The tabulated Barker sequences of length `n`, first variant first.
pub fn barker(n: usize) -> Result<Vec<Sequence>> {
    barker_entry(n)?.sequences.iter().map(|s| Sequence::binary(s)).collect()
}

/// `(a‖b, a‖−b)` for binary `a` (length M) and `b` (length N ≥ M).
///
/// Requires `ρ_a(τ) = −ρ_b(τ)` for `0 < τ < M` and `ρ_b(M) = 0` when
/// `M < N`; the first violating shift is reported.
pub fn theorem4_pair(a: &Sequence, b: &Sequence) -> Result<SequencePair> {
    if !a.is_binary() || !b.is_binary() {
        return usage("concatenation pair needs binary sequences");
    }
    let (m, n) = (a.len(), b.len());
    if m > n {
        return usage(format!("first sequence must not be longer than the second ({m} > {n})"));
    }
    for tau in 1..m {
        let (ra, rb) = (auto_corr(a, tau as i64), auto_corr(b, tau as i64));
        if !(&ra + &rb).is_zero() {
            return Err(Error::Precondition {
                tau,
                reason: format!(
                    "rho_a = {} but rho_b = {}",
                    ra.to_integer().unwrap_or_default(),
                    rb.to_integer().unwrap_or_default()
                ),
            });
        }
    }
    if m < n {
        let rb = auto_corr(b, m as i64);
        if !rb.is_zero() {
            return Err(Error::Precondition {
                tau: m,
                reason: format!("rho_b = {} must vanish", rb.to_integer().unwrap_or_default()),
            });
        }
    }
    SequencePair::new(a.concat(b)?, a.concat(&b.negate()?)?)
}

/// Verification report of a binary GCP viewed as a CZCP.
pub fn gcp_as_czcp(p: &SequencePair) -> Result<CzcpReport> {
    if !p.is_binary() {
        return usage("expected a binary GCP");
    }
    if !is_gcp(p) {
        return usage("pair is not a GCP");
    }
    Ok(verify(p))
}

/// `Turyn(gcp, czcp)`: an `(NM, ZM)`-CZCP from a binary GCP of length M and a
/// binary `(N, Z)`-CZCP. The output is re-verified before it is returned.
pub fn theorem6_extend(gcp: &SequencePair, czcp: &SequencePair) -> Result<SequencePair> {
    if !gcp.is_binary() || !czcp.is_binary() {
        return usage("Turyn extension needs binary pairs");
    }
    if !is_gcp(gcp) {
        return usage("first argument is not a GCP");
    }
    let z = verify(czcp).z;
    if z == 0 {
        return usage("second argument is not a CZCP");
    }
    let out = turyn(gcp, czcp)?;
    let want = z * gcp.len();
    let got = verify(&out).z;
    if got < want {
        return Err(Error::Construction(format!(
            "extended pair has zone {got}, expected at least {want}"
        )));
    }
    Ok(out)
}

/// `ρ_{c,←d}(τ) = ρ_{d,←c}(τ)` for every shift.
pub fn reversed_cross_symmetry(p: &SequencePair) -> bool {
    let (c, d) = (p.first(), p.second());
    let (rc, rd) = (c.reverse(), d.reverse());
    let n = p.len() as i64;
    (1 - n..n).all(|tau| {
        let lhs = cross_corr(c, &rd, tau).expect("same shape");
        let rhs = cross_corr(d, &rc, tau).expect("same shape");
        (&lhs - &rhs).is_zero()
    })
}

/// `ρ_{c,←c}(τ) = ρ_{d,←d}(τ)` for `|τ| ≥ N − z`.
pub fn reversed_auto_tail_balance(p: &SequencePair, z: usize) -> bool {
    let (c, d) = (p.first(), p.second());
    let (rc, rd) = (c.reverse(), d.reverse());
    let n = p.len() as i64;
    let edge = n - z.min(p.len()) as i64;
    (1 - n..n).filter(|t| t.abs() >= edge).all(|tau| {
        let lhs = cross_corr(c, &rc, tau).expect("same shape");
        let rhs = cross_corr(d, &rd, tau).expect("same shape");
        (&lhs - &rhs).is_zero()
    })
}
