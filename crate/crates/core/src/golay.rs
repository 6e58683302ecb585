//! Golay complementary pairs: the printed length-2/10/26 kernels, Turyn's
//! product, complementary mates and iterated builds.

use crate::correlation::profile;
use crate::error::{usage, Error, Result};
use crate::seq::{Sequence, SequencePair};
use std::fmt;
use std::str::FromStr;

const K2: [&str; 2] = ["++", "+-"];
const K10: [&str; 2] = ["++-+-+--++", "++-+++++--"];
const K26: [&str; 2] = ["++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---"];

/// Binary GCP kernel of length 2, 10 or 26, exactly as tabulated.
pub fn kernel(n: u32) -> Result<SequencePair> {
    let rows = match n {
        2 => K2,
        10 => K10,
        26 => K26,
        _ => return usage(format!("no GCP kernel of length {n}; expected 2, 10 or 26")),
    };
    SequencePair::binary(rows[0], rows[1])
}

fn require_signs(p: &SequencePair, what: &str) -> Result<(Vec<i8>, Vec<i8>)> {
    match (p.first().signs(), p.second().signs()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => usage(format!("{what} must be binary, got q={}", p.q())),
    }
}

/// Turyn's product of a 1st pair `A = (a, b)` of length N and a 2nd pair
/// `B = (c, d)` of length M:
///
/// ```text
/// e = c ⊗ (a+b)/2 − ←d ⊗ (b−a)/2
/// f = d ⊗ (a+b)/2 + ←c ⊗ (b−a)/2
/// ```
///
/// where `x ⊗ y` is the block sequence `(x_0·y, x_1·y, …)`. The result has
/// length MN and is a GCP whenever both inputs are.
pub fn turyn(first: &SequencePair, second: &SequencePair) -> Result<SequencePair> {
    let (a, b) = require_signs(first, "turyn 1st pair")?;
    let (c, d) = require_signs(second, "turyn 2nd pair")?;
    let half_sum: Vec<i8> = a.iter().zip(&b).map(|(x, y)| (x + y) / 2).collect();
    let half_diff: Vec<i8> = a.iter().zip(&b).map(|(x, y)| (y - x) / 2).collect();
    let m = c.len();
    let mut e = Vec::with_capacity(m * a.len());
    let mut f = Vec::with_capacity(m * a.len());
    for i in 0..m {
        let (ci, di) = (c[i], d[i]);
        let (rc, rd) = (c[m - 1 - i], d[m - 1 - i]);
        for (s, t) in half_sum.iter().zip(&half_diff) {
            e.push(ci * s - rd * t);
            f.push(di * s + rc * t);
        }
    }
    SequencePair::new(Sequence::from_signs(&e)?, Sequence::from_signs(&f)?)
}

/// The complementary mate `(←b*, −←a*)` of a pair `(a, b)`.
pub fn mate(p: &SequencePair) -> Result<SequencePair> {
    if !p.q().is_multiple_of(2) {
        return usage(format!("complementary mate needs even q, got q={}", p.q()));
    }
    let c = p.second().conjugate().reverse();
    let d = p.first().conjugate().reverse().negate()?;
    SequencePair::new(c, d)
}

/// True iff every out-of-phase autocorrelation sum vanishes.
pub fn is_gcp(p: &SequencePair) -> bool {
    let (zeros, _) = profile(p).zero_flags();
    zeros.iter().skip(1).all(|&z| z)
}

/// An iterated Turyn build over the kernel lengths {2, 10, 26}.
///
/// The starting kernel is K2 when any factor is 2, otherwise K26 when any
/// factor is 26, otherwise K10. The remaining factors are applied left to
/// right, each as the 1st Turyn argument with the accumulated pair as the
/// 2nd: `(e_i, f_i) = Turyn(K, (e_{i-1}, f_{i-1}))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcpRecipe {
    factors: Vec<u32>,
}

impl GcpRecipe {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return usage("GCP recipe needs at least one factor");
        }
        if let Some(f) = factors.iter().find(|f| ![2, 10, 26].contains(*f)) {
            return usage(format!("recipe factor {f} is not a kernel length (2, 10, 26)"));
        }
        let recipe = Self { factors };
        recipe.checked_length()?;
        Ok(recipe)
    }

    /// Recipe for length `2^alpha · 10^beta · 26^gamma`.
    pub fn from_exponents(alpha: u32, beta: u32, gamma: u32) -> Result<Self> {
        let mut factors = Vec::new();
        factors.extend(std::iter::repeat_n(2, alpha as usize));
        factors.extend(std::iter::repeat_n(10, beta as usize));
        factors.extend(std::iter::repeat_n(26, gamma as usize));
        Self::new(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    fn checked_length(&self) -> Result<usize> {
        self.factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(f as usize))
            .ok_or_else(|| Error::Usage("recipe length overflows".into()))
    }

    pub fn length(&self) -> usize {
        self.factors.iter().map(|&f| f as usize).product()
    }

    pub fn count(&self, factor: u32) -> usize {
        self.factors.iter().filter(|&&f| f == factor).count()
    }

    /// Kernel lengths in application order: the starting kernel first.
    pub fn application_order(&self) -> Vec<u32> {
        let start = [2, 26, 10]
            .into_iter()
            .find(|k| self.factors.contains(k))
            .expect("recipe is non-empty");
        let pos = self.factors.iter().position(|&f| f == start).expect("start is present");
        let mut order = vec![start];
        order.extend(
            self.factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pos)
                .map(|(_, &f)| f),
        );
        order
    }
}

impl FromStr for GcpRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad recipe factor {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }
}

impl fmt::Display for GcpRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn build_gcp(recipe: &GcpRecipe) -> Result<SequencePair> {
    let order = recipe.application_order();
    let mut acc = kernel(order[0])?;
    for &k in &order[1..] {
        acc = turyn(&kernel(k)?, &acc)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnSign {
    Same,
    Different,
}

/// Per-column comparison of a binary pair: `Same` iff `a_i = b_i`.
pub fn column_sign_profile(p: &SequencePair) -> Result<Vec<ColumnSign>> {
    if !p.is_binary() {
        return usage(format!("column signs need a binary pair, got q={}", p.q()));
    }
    Ok(p.first()
        .values()
        .iter()
        .zip(p.second().values())
        .map(|(x, y)| {
            if x == y {
                ColumnSign::Same
            } else {
                ColumnSign::Different
            }
        })
        .collect())
}

/// Number of leading columns with identical signs.
pub fn same_sign_prefix(p: &SequencePair) -> Result<usize> {
    Ok(column_sign_profile(p)?
        .iter()
        .take_while(|&&c| c == ColumnSign::Same)
        .count())
}
