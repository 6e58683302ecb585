//! Zone measurement, CZC ratio and classification of sequence pairs.
//!
//! A pair `(a, b)` of length N is an (N, Z)-CZCP when the autocorrelation
//! sums vanish for `τ ∈ {1..Z} ∪ {N-Z..N-1}` and the cross-correlation sums
//! vanish for `τ ∈ {N-Z..N-1}`. [`verify`] measures the three raw zone
//! widths with exact zero tests and reports the largest such Z.

use crate::correlation::{profile, CorrelationProfile};
use crate::error::{usage, Result};
use crate::numfmt::round_significant;
use crate::seq::SequencePair;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;

/// Fraction of `z_max` at or above which a non-optimal pair counts as
/// almost-optimal. This threshold is a reporting convention.
pub const ALMOST_OPTIMAL_FRACTION: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Perfect,
    Optimal,
    AlmostOptimal,
    NonOptimal,
    NotACzcp,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Perfect => "perfect",
            Self::Optimal => "optimal",
            Self::AlmostOptimal => "almost-optimal",
            Self::NonOptimal => "non-optimal",
            Self::NotACzcp => "not-a-CZCP",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CzcpReport {
    pub n: usize,
    pub q: u32,
    /// Widest F with zero autocorrelation sums on `1..=F`.
    pub front_zacz: usize,
    /// Widest T with zero autocorrelation sums on `N-T..N`.
    pub tail_zacz: usize,
    /// Widest T with zero cross-correlation sums on `N-T..N`.
    pub tail_zccz: usize,
    pub z: usize,
    pub z_max: Option<usize>,
    pub czc_ratio: Option<f64>,
    pub classification: Classification,
    pub profile: CorrelationProfile,
    pub notes: Vec<String>,
}

pub fn verify(p: &SequencePair) -> CzcpReport {
    let prof = profile(p);
    let n = prof.n;
    let (aacs_zero, accs_zero) = prof.zero_flags();

    let front_zacz = aacs_zero.iter().skip(1).take_while(|&&z| z).count();
    let tail_zacz = aacs_zero.iter().skip(1).rev().take_while(|&&z| z).count();
    let tail_zccz = accs_zero.iter().rev().take_while(|&&z| z).count();
    let z = front_zacz.min(tail_zacz).min(tail_zccz).min(n / 2);

    let z_max = z_max_convention(n, p.q());
    let czc_ratio = z_max.filter(|&m| m > 0).map(|m| z as f64 / m as f64);
    let mut report = CzcpReport {
        n,
        q: p.q(),
        front_zacz,
        tail_zacz,
        tail_zccz,
        z,
        z_max,
        czc_ratio,
        classification: Classification::NotACzcp,
        profile: prof,
        notes: Vec::new(),
    };
    report.classification = classify(&report);
    if z_max.is_none() {
        report
            .notes
            .push("z_max undefined for odd length or non-binary alphabet; ratio omitted".into());
    }
    if report.classification == Classification::AlmostOptimal {
        report.notes.push(format!(
            "almost-optimal threshold: z >= ceil({ALMOST_OPTIMAL_FRACTION} * z_max)"
        ));
    }
    report
}

/// Largest reachable zone width used as the ratio denominator.
///
/// Binary even lengths of the form `2^a·10^b·26^c` admit perfect pairs
/// (`N/2`); other binary even lengths use `N/2 - 1`. Odd lengths and
/// non-binary alphabets have no convention and yield `None`.
pub fn z_max_convention(n: usize, q: u32) -> Option<usize> {
    if q != 2 || !n.is_multiple_of(2) || n == 0 {
        return None;
    }
    Some(if is_golay_length(n) { n / 2 } else { n / 2 - 1 })
}

/// True iff `n = 2^a·10^b·26^c`.
pub fn is_golay_length(mut n: usize) -> bool {
    if n == 0 {
        return false;
    }
    for f in [26, 10, 2] {
        while n.is_multiple_of(f) {
            n /= f;
        }
    }
    n == 1
}

pub fn classify(report: &CzcpReport) -> Classification {
    let z = report.z;
    if z == 0 {
        return Classification::NotACzcp;
    }
    if 2 * z == report.n {
        return Classification::Perfect;
    }
    match report.z_max {
        Some(m) if z >= m => Classification::Optimal,
        Some(m) if z as f64 >= (ALMOST_OPTIMAL_FRACTION * m as f64).ceil() => Classification::AlmostOptimal,
        _ => Classification::NonOptimal,
    }
}

/// Checks `c_i = d_i` and `c_{N-1-i} = -d_{N-1-i}` for all `i < z`.
pub fn check_property1(p: &SequencePair, z: usize) -> Result<bool> {
    if !p.is_binary() {
        return usage(format!("sign structure check needs q=2, got q={}", p.q()));
    }
    let (c, d) = (p.first().values(), p.second().values());
    let n = p.len();
    if z > n {
        return Ok(false);
    }
    Ok((0..z).all(|i| c[i] == d[i] && c[n - 1 - i] != d[n - 1 - i]))
}

impl CzcpReport {
    /// Canonical JSON: sorted keys, floats rounded to 12 significant digits.
    pub fn to_json(&self) -> Value {
        let pairs = |vs: Vec<num_complex::Complex64>| -> Value {
            Value::Array(
                vs.into_iter()
                    .map(|c| json!([round_significant(c.re), round_significant(c.im)]))
                    .collect(),
            )
        };
        json!({
            "n": self.n,
            "q": self.q,
            "z": self.z,
            "z_max": self.z_max,
            "czc_ratio": self.czc_ratio.map(round_significant),
            "classification": self.classification.as_str(),
            "front_zacz": self.front_zacz,
            "tail_zacz": self.tail_zacz,
            "tail_zccz": self.tail_zccz,
            "aacs": pairs(self.profile.aacs_complex()),
            "accs": pairs(self.profile.accs_complex()),
            "notes": self.notes,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

/// One row of the parameter catalog of systematically constructible CZCPs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub source: &'static str,
    pub length: &'static str,
    pub z: &'static str,
    pub czc_ratio: &'static str,
    pub remarks: &'static str,
    #[serde(skip)]
    matcher: LengthMatcher,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LengthMatcher {
    PowerOfTwo,
    PerfectFamily,
    GbfFamily,
    InsertionPow2,
    InsertionTen,
    InsertionTwentySix,
    InsertionMixed,
    Exactly { n: usize, z: usize },
    ExtendTwelve,
    ExtendTwentyFour,
}

fn exponents(mut n: usize) -> Option<(u32, u32, u32)> {
    if n == 0 {
        return None;
    }
    let mut e = [0u32; 3];
    for (slot, f) in [(2usize, 26usize), (1, 10), (0, 2)] {
        while n.is_multiple_of(f) {
            n /= f;
            e[slot] += 1;
        }
    }
    (n == 1).then_some((e[0], e[1], e[2]))
}

fn is_power_of(mut n: usize, base: usize) -> bool {
    if n < base {
        return false;
    }
    while n.is_multiple_of(base) {
        n /= base;
    }
    n == 1
}

impl LengthMatcher {
    /// Length-dependent Z for a matching length.
    fn z_for(self, n: usize) -> Option<usize> {
        match self {
            Self::PowerOfTwo => (n >= 2 && n.is_power_of_two()).then_some(n / 2),
            Self::PerfectFamily => {
                let half = n.checked_div(2).filter(|_| n.is_multiple_of(2))?;
                let (a, _, _) = exponents(half)?;
                (a >= 1).then_some(half)
            }
            Self::GbfFamily => {
                let p = n.checked_sub(2)?;
                (p >= 8 && p.is_power_of_two()).then(|| p / 4 + 1)
            }
            Self::InsertionPow2 => {
                let p = n.checked_sub(2)?;
                let half = p.checked_div(2).filter(|_| p % 2 == 0)?;
                let (a, _, _) = exponents(half)?;
                (a >= 1).then(|| half / 2 + 1)
            }
            Self::InsertionTen => {
                let m = n.checked_sub(2).filter(|p| p % 2 == 0)? / 2;
                is_power_of(m, 10).then(|| 4 * m / 10 + 1)
            }
            Self::InsertionTwentySix => {
                let m = n.checked_sub(2).filter(|p| p % 2 == 0)? / 2;
                is_power_of(m, 26).then(|| 12 * m / 26 + 1)
            }
            Self::InsertionMixed => {
                let m = n.checked_sub(2).filter(|p| p % 2 == 0)? / 2;
                let (a, b, c) = exponents(m)?;
                (a == 0 && b >= 1 && c >= 1).then(|| 12 * m / 26 + 1)
            }
            Self::Exactly { n: len, z } => (n == len).then_some(z),
            Self::ExtendTwelve => (n.is_multiple_of(12) && n > 12 && exponents(n / 12).is_some()).then(|| 5 * n / 12),
            Self::ExtendTwentyFour => {
                (n.is_multiple_of(24) && n > 24 && exponents(n / 24).is_some()).then(|| 11 * n / 24)
            }
        }
    }
}

/// A catalog row instantiated at a concrete length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogMatch {
    pub row: CatalogRow,
    pub n: usize,
    pub z: usize,
}

pub fn catalog() -> Vec<CatalogRow> {
    use LengthMatcher::*;
    let row = |source, length, z, czc_ratio, remarks, matcher| CatalogRow {
        source,
        length,
        z,
        czc_ratio,
        remarks,
        matcher,
    };
    vec![
        row("perfect CZCP [prior]", "2^a", "2^(a-1)", "1", "Optimal", PowerOfTwo),
        row(
            "perfect CZCP [prior]",
            "2^(a+1)10^b26^c (a>=1)",
            "2^a10^b26^c",
            "1",
            "Optimal",
            PerfectFamily,
        ),
        row(
            "GBF construction",
            "2^(m-1)+2 (m>=4)",
            "2^(m-3)+1",
            "~1/2",
            "Not optimal",
            GbfFamily,
        ),
        row(
            "insertion (a>=1)",
            "2^(a+1)10^b26^c+2 (a>=1)",
            "2^(a-1)10^b26^c+1",
            "~1/2",
            "Not optimal",
            InsertionPow2,
        ),
        row(
            "insertion",
            "2N+2 (N=10^b)",
            "4N/10+1",
            "~2/5",
            "Not optimal",
            InsertionTen,
        ),
        row(
            "insertion",
            "2N+2 (N=26^c)",
            "12N/26+1",
            "~6/13",
            "Not optimal",
            InsertionTwentySix,
        ),
        row(
            "insertion",
            "2N+2 (N=10^b26^c)",
            "12N/26+1",
            "~6/13",
            "Not optimal",
            InsertionMixed,
        ),
        row(
            "Barker concatenation",
            "12",
            "5",
            "1",
            "Optimal",
            Exactly { n: 12, z: 5 },
        ),
        row(
            "Barker concatenation",
            "24",
            "11",
            "1",
            "Optimal",
            Exactly { n: 24, z: 11 },
        ),
        row(
            "Turyn extension",
            "12N (N=2^a10^b26^c)",
            "5N",
            "~5/6",
            "Large CZC ratio",
            ExtendTwelve,
        ),
        row(
            "Turyn extension",
            "24N (N=2^a10^b26^c)",
            "11N",
            "~11/12",
            "Large CZC ratio",
            ExtendTwentyFour,
        ),
    ]
}

/// Catalog rows that yield a pair of length `n`, with their Z at `n`.
pub fn catalog_lookup(n: usize) -> Vec<CatalogMatch> {
    catalog()
        .into_iter()
        .filter_map(|row| row.matcher.z_for(n).map(|z| CatalogMatch { row, n, z }))
        .collect()
}

/// Best binary zone widths reported by exhaustive search in prior work; kept
/// as advisory notes, not used for `z_max`.
pub const SEARCHED_BEST_Z: [(usize, usize); 2] = [(18, 7), (22, 9)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_czcp_pair() {
        let r = verify(&SequencePair::binary("++", "++").unwrap());
        assert_eq!(r.z, 0);
        assert_eq!(r.classification, Classification::NotACzcp);
    }

    #[test]
    fn z_max_values() {
        assert_eq!(z_max_convention(12, 2), Some(5));
        assert_eq!(z_max_convention(16, 2), Some(8));
        assert_eq!(z_max_convention(18, 2), Some(8));
        assert_eq!(z_max_convention(34, 6), None);
        assert_eq!(z_max_convention(13, 2), None);
    }

    #[test]
    fn kernel_two_is_perfect() {
        let r = verify(&SequencePair::binary("++", "+-").unwrap());
        assert_eq!(r.z, 1);
        assert_eq!(r.classification, Classification::Perfect);
        assert_eq!(r.czc_ratio, Some(1.0));
    }

    #[test]
    fn property1_edge_cases() {
        let p = SequencePair::binary("+++", "++-").unwrap();
        assert!(check_property1(&p, 0).unwrap());
        assert!(check_property1(&p, 1).unwrap());
        assert!(!check_property1(&p, 2).unwrap());
        let q4 = SequencePair::new(
            crate::seq::Sequence::new(4, vec![0]).unwrap(),
            crate::seq::Sequence::new(4, vec![0]).unwrap(),
        )
        .unwrap();
        assert!(check_property1(&q4, 0).is_err());
    }

    #[test]
    fn catalog_lookups() {
        assert_eq!(catalog().len(), 11);
        let rows = catalog_lookup(12);
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].row.source, rows[0].z), ("Barker concatenation", 5));
        let rows = catalog_lookup(24);
        assert!(rows
            .iter()
            .any(|m| m.row.length == "24" && m.z == 11 && m.row.remarks == "Optimal"));
        assert!(catalog_lookup(7).is_empty());
        let z18: Vec<_> = catalog_lookup(18).into_iter().map(|m| (m.row.source, m.z)).collect();
        assert!(z18.contains(&("insertion (a>=1)", 5)));
        assert!(z18.contains(&("GBF construction", 5)));
        assert!(catalog_lookup(22).iter().any(|m| m.z == 5));
        assert!(catalog_lookup(54).iter().any(|m| m.z == 13));
        assert!(catalog_lookup(522).iter().any(|m| m.z == 121));
        assert!(catalog_lookup(48).iter().any(|m| m.z == 22));
        assert!(catalog_lookup(16).iter().any(|m| m.z == 8));
    }

    #[test]
    fn golay_lengths() {
        for n in [1, 2, 4, 10, 20, 26, 52, 260, 676] {
            assert!(is_golay_length(n), "{n}");
        }
        for n in [0, 3, 6, 12, 14, 18] {
            assert!(!is_golay_length(n), "{n}");
        }
    }
}
