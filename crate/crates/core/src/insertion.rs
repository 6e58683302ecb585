//! Symmetric insertion and the insertion-based CZCP families of lengths
//! `2N + 2` built from Turyn GCPs and their complementary mates.

use crate::error::{usage, Error, Result};
use crate::golay::{build_gcp, mate, same_sign_prefix, GcpRecipe};
use crate::seq::{Sequence, SequencePair};

/// Default upper bound on the GCP length N used by the constructions.
pub const DEFAULT_MAX_N: usize = 2048;

/// Inserts `x0` and `x1` symmetrically into a sequence of even length N.
///
/// * `r = 0`: `(x0, a_0, …, a_{N-1}, x1)`
/// * `r = N`: `(x1, a_0, …, a_{N-1}, x0)`
/// * `r = N/2`: `x0, x1` adjacent in the middle
/// * otherwise `x0` lands at index `r` and `x1` at index `N - r` of the
///   output, counted after the first insertion.
pub fn insert_symmetric(a: &Sequence, r: usize, x0: u32, x1: u32) -> Result<Sequence> {
    let n = a.len();
    if !n.is_multiple_of(2) {
        return usage(format!("symmetric insertion needs even length, got {n}"));
    }
    if r > n {
        return usage(format!("insertion position {r} exceeds length {n}"));
    }
    let v = a.values();
    let mut out = Vec::with_capacity(n + 2);
    if r == 0 {
        out.push(x0);
        out.extend_from_slice(v);
        out.push(x1);
    } else if r == n {
        out.push(x1);
        out.extend_from_slice(v);
        out.push(x0);
    } else if 2 * r == n {
        out.extend_from_slice(&v[..r]);
        out.extend_from_slice(&[x0, x1]);
        out.extend_from_slice(&v[r..]);
    } else {
        let (lo, hi) = (r.min(n - r), r.max(n - r));
        let (first, second) = if r < n - r { (x0, x1) } else { (x1, x0) };
        out.extend_from_slice(&v[..lo]);
        out.push(first);
        out.extend_from_slice(&v[lo..hi]);
        out.push(second);
        out.extend_from_slice(&v[hi..]);
    }
    Sequence::new(a.q(), out)
}

/// The four inserted symbols as exponents over Z_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertionSpec {
    pub q: u32,
    pub x0: u32,
    pub x1: u32,
    pub y0: u32,
    pub y1: u32,
}

impl InsertionSpec {
    /// `(x0, x1, y0, y1) = (+, +, −, +)`.
    pub fn binary_default() -> Self {
        Self {
            q: 2,
            x0: 0,
            x1: 0,
            y0: 1,
            y1: 0,
        }
    }

    fn check(&self) -> Result<()> {
        if self.q < 2 {
            return usage("insertion alphabet needs q >= 2");
        }
        if [self.x0, self.x1, self.y0, self.y1].iter().any(|&e| e >= self.q) {
            return usage(format!("inserted exponents must lie in Z_{}", self.q));
        }
        Ok(())
    }
}

/// Exact check of `x0 - y1* = 0`, `x1 + y0* = 0`, `x0 = x1` and `y0* = -y1*`
/// over the q-th roots of unity.
pub fn validate_spec(spec: &InsertionSpec) -> bool {
    if spec.check().is_err() || !spec.q.is_multiple_of(2) {
        // -1 is not a q-th root of unity for odd q, so the sums cannot vanish
        return false;
    }
    let q = spec.q;
    let half = q / 2;
    let neg = |e: u32| (q - e) % q;
    let x0_eq_conj_y1 = spec.x0 == neg(spec.y1);
    let x1_eq_minus_conj_y0 = spec.x1 == (neg(spec.y0) + half) % q;
    let x_equal = spec.x0 == spec.x1;
    let conj_y0_eq_minus_conj_y1 = neg(spec.y0) == (neg(spec.y1) + half) % q;
    x0_eq_conj_y1 && x1_eq_minus_conj_y0 && x_equal && conj_y0_eq_minus_conj_y1
}

/// GCP families accepted by [`theorem3_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddFamily {
    /// N = 10^β
    Tens,
    /// N = 26^γ
    TwentySixes,
    /// N = 10^β·26^γ with γ ≥ 1
    Mixed,
}

impl std::str::FromStr for OddFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "10b" => Ok(Self::Tens),
            "26g" => Ok(Self::TwentySixes),
            "10b26g" => Ok(Self::Mixed),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?}; expected 10b, 26g or 10b26g"
            ))),
        }
    }
}

/// Result of an insertion construction with its intermediate GCP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPair {
    pub gcp: SequencePair,
    pub pair: SequencePair,
    /// Zone width predicted for this family.
    pub expected_z: usize,
}

/// `(2N+2, N/2+1)`-CZCP from the length `N = 2^α·10^β·26^γ` GCP, `α ≥ 1`.
pub fn theorem2_pair(alpha: u32, beta: u32, gamma: u32, spec: &InsertionSpec, max_n: usize) -> Result<InsertionPair> {
    if alpha == 0 {
        return usage("alpha must be at least 1; use the 10^b/26^g families for alpha = 0");
    }
    let recipe = GcpRecipe::from_exponents(alpha, beta, gamma)?;
    let n = recipe.length();
    insertion_pipeline(&recipe, spec, max_n, n / 2, n / 2 + 1)
}

/// `(2N+2, Z)`-CZCP for N in the 10^β, 26^γ or 10^β·26^γ families, with
/// `Z = 4N/10 + 1` for 10^β and `Z = 12N/26 + 1` otherwise.
pub fn theorem3_pair(
    family: OddFamily,
    beta: u32,
    gamma: u32,
    spec: &InsertionSpec,
    max_n: usize,
) -> Result<InsertionPair> {
    let (beta, gamma) = match family {
        OddFamily::Tens if beta >= 1 => (beta, 0),
        OddFamily::TwentySixes if gamma >= 1 => (0, gamma),
        OddFamily::Mixed if gamma >= 1 => (beta, gamma),
        _ => {
            return usage(format!(
                "family {family:?} needs a positive exponent, got beta={beta}, gamma={gamma}"
            ))
        }
    };
    let recipe = GcpRecipe::from_exponents(0, beta, gamma)?;
    let n = recipe.length();
    let prefix = match family {
        OddFamily::Tens => 4 * n / 10,
        _ => 12 * n / 26,
    };
    insertion_pipeline(&recipe, spec, max_n, prefix, prefix + 1)
}

fn insertion_pipeline(
    recipe: &GcpRecipe,
    spec: &InsertionSpec,
    max_n: usize,
    same_prefix: usize,
    expected_z: usize,
) -> Result<InsertionPair> {
    spec.check()?;
    if !validate_spec(spec) {
        return usage(format!("inserted symbols {spec:?} violate the insertion conditions"));
    }
    let n = recipe.length();
    if n > max_n {
        return usage(format!("GCP length {n} exceeds the configured bound {max_n}"));
    }
    let gcp = build_gcp(recipe)?;
    let have = same_sign_prefix(&gcp)?;
    if have < same_prefix {
        return Err(Error::Construction(format!(
            "GCP of length {n} has {have} leading same-sign columns, expected {same_prefix}"
        )));
    }

    let gcp_q = gcp.map(|s| s.lift(spec.q))?;
    let m = mate(&gcp_q)?;
    let e = gcp_q.first().concat(m.first())?;
    let f = gcp_q.second().concat(m.second())?;
    check_mirror_structure(&e, same_prefix)?;

    let g = insert_symmetric(&e, 0, spec.x0, spec.y0)?;
    let h = insert_symmetric(&f, 0, spec.x1, spec.y1)?;
    Ok(InsertionPair {
        gcp,
        pair: SequencePair::new(g, h)?,
        expected_z,
    })
}

/// `e_i = e_{2N-1-i}` for `i < s` and `e_i = -e_{2N-1-i}` for `s <= i < N`,
/// where `s` is the same-sign prefix width. For the `α ≥ 1` family `s = N/2`.
fn check_mirror_structure(e: &Sequence, same_prefix: usize) -> Result<()> {
    let len = e.len();
    let n = len / 2;
    let q = e.q();
    let v = e.values();
    for i in 0..n {
        let mirror = v[len - 1 - i];
        let want = if i < same_prefix { mirror } else { (mirror + q / 2) % q };
        if v[i] != want && (i < same_prefix || same_prefix == n / 2) {
            return Err(Error::Construction(format!(
                "mirror sign structure broken at index {i}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Sequence) -> Vec<u32> {
        s.values().to_vec()
    }

    #[test]
    fn insertion_branches() {
        let a = Sequence::new(8, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(ints(&insert_symmetric(&a, 0, 6, 7).unwrap()), vec![6, 1, 2, 3, 4, 7]);
        assert_eq!(ints(&insert_symmetric(&a, 4, 6, 7).unwrap()), vec![7, 1, 2, 3, 4, 6]);
        assert_eq!(ints(&insert_symmetric(&a, 2, 6, 7).unwrap()), vec![1, 2, 6, 7, 3, 4]);
        assert_eq!(ints(&insert_symmetric(&a, 1, 6, 7).unwrap()), vec![1, 6, 2, 3, 7, 4]);
        let b = Sequence::new(8, vec![1, 2]).unwrap();
        assert_eq!(ints(&insert_symmetric(&b, 1, 6, 7).unwrap()), vec![1, 6, 7, 2]);
        let s = Sequence::binary("+-+-").unwrap();
        assert_eq!(insert_symmetric(&s, 4, 0, 1).unwrap().to_string(), "-+-+-+");
        assert!(insert_symmetric(&Sequence::binary("+-+").unwrap(), 0, 0, 0).is_err());
        assert!(insert_symmetric(&s, 5, 0, 0).is_err());
    }

    #[test]
    fn off_centre_positions_mirror() {
        // x0 at index r and x1 at index N-r of the output
        let a = Sequence::new(16, (0..6).collect()).unwrap();
        for r in [1, 2, 4, 5] {
            let out = insert_symmetric(&a, r, 14, 15).unwrap();
            let v = out.values();
            assert_eq!(out.len(), 8);
            let (i0, i1) = (
                v.iter().position(|&x| x == 14).unwrap(),
                v.iter().position(|&x| x == 15).unwrap(),
            );
            if r < 3 {
                assert_eq!((i0, i1), (r, 6 - r + 1));
            } else {
                assert_eq!((i1, i0), (6 - r, r + 1));
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(validate_spec(&InsertionSpec::binary_default()));
        assert!(!validate_spec(&InsertionSpec {
            q: 2,
            x0: 0,
            x1: 0,
            y0: 0,
            y1: 0
        }));
        // x0 = x1 = i, y1 = -i, y0 = i
        assert!(validate_spec(&InsertionSpec {
            q: 4,
            x0: 1,
            x1: 1,
            y0: 1,
            y1: 3
        }));
        assert!(!validate_spec(&InsertionSpec {
            q: 4,
            x0: 1,
            x1: 1,
            y0: 3,
            y1: 1
        }));
        assert!(!validate_spec(&InsertionSpec {
            q: 3,
            x0: 0,
            x1: 0,
            y0: 0,
            y1: 0
        }));
        assert!(!validate_spec(&InsertionSpec {
            q: 2,
            x0: 2,
            x1: 0,
            y0: 1,
            y1: 0
        }));
    }

    #[test]
    fn rejects_bad_parameters() {
        let spec = InsertionSpec::binary_default();
        assert!(theorem2_pair(0, 1, 0, &spec, DEFAULT_MAX_N).is_err());
        assert!(theorem2_pair(12, 0, 0, &spec, DEFAULT_MAX_N).is_err());
        let bad = InsertionSpec {
            q: 2,
            x0: 0,
            x1: 0,
            y0: 0,
            y1: 0,
        };
        assert!(theorem2_pair(1, 0, 0, &bad, DEFAULT_MAX_N).is_err());
        assert!(theorem3_pair(OddFamily::Tens, 0, 1, &spec, DEFAULT_MAX_N).is_err());
        assert!(theorem3_pair(OddFamily::Mixed, 1, 0, &spec, DEFAULT_MAX_N).is_err());
        assert!("10x".parse::<OddFamily>().is_err());
    }

    #[test]
    fn smallest_member() {
        let p = theorem2_pair(1, 0, 0, &InsertionSpec::binary_default(), DEFAULT_MAX_N).unwrap();
        assert_eq!(p.pair.len(), 6);
        assert_eq!(p.expected_z, 2);
    }
}
