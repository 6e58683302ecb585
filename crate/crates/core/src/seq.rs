//! q-ary sequences stored as exponents over Z_q, sequence pairs and their
//! text formats.
//!
//! Binary sequences (q = 2) print as a line of `+`/`-` symbols; any other
//! modulus prints as `q=<q>:<e0>,<e1>,...`.

use crate::error::{usage, Error, Result};
use std::fmt;
use std::str::FromStr;

/// A finite sequence whose k-th entry is `ω^values[k]`, `ω = exp(2πi/q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    q: u32,
    values: Vec<u32>,
}

impl Sequence {
    pub fn new(q: u32, values: Vec<u32>) -> Result<Self> {
        if q < 2 {
            return usage(format!("modulus must be at least 2, got {q}"));
        }
        if values.is_empty() {
            return usage("sequence must have at least one entry");
        }
        if let Some(v) = values.iter().find(|&&v| v >= q) {
            return usage(format!("exponent {v} is not in Z_{q}"));
        }
        Ok(Self { q, values })
    }

    /// Binary sequence from `±1` signs.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let values = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(0),
                -1 => Ok(1),
                _ => usage(format!("sign {s} is not ±1")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(2, values)
    }

    /// Binary sequence from a string of `+`/`-` symbols.
    pub fn binary(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|c| match c {
                '+' => Ok(0),
                '-' | '−' => Ok(1),
                _ => Err(Error::Parse(format!("unexpected symbol {c:?} in binary sequence"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(2, values)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// `±1` for binary sequences.
    pub fn signs(&self) -> Option<Vec<i8>> {
        self.is_binary()
            .then(|| self.values.iter().map(|&v| if v == 0 { 1 } else { -1 }).collect())
    }

    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { q: self.q, values }
    }

    /// Multiplies every entry by −1, i.e. adds q/2 to each exponent.
    pub fn negate(&self) -> Result<Self> {
        if !self.q.is_multiple_of(2) {
            return usage(format!("negation needs even q, got q={}", self.q));
        }
        let half = self.q / 2;
        Ok(self.map_exponents(|v| (v + half) % self.q))
    }

    pub fn conjugate(&self) -> Self {
        self.map_exponents(|v| (self.q - v) % self.q)
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return usage(format!("cannot concatenate q={} with q={}", self.q, other.q));
        }
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Ok(Self { q: self.q, values })
    }

    /// Re-expresses the sequence over Z_target, where `target` is a multiple
    /// of q; the realized complex entries are unchanged.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if !target.is_multiple_of(self.q) {
            return usage(format!("cannot lift q={} to q={target}", self.q));
        }
        let scale = target / self.q;
        Ok(Self {
            q: target,
            values: self.values.iter().map(|v| v * scale).collect(),
        })
    }

    pub(crate) fn map_exponents(&self, f: impl Fn(u32) -> u32) -> Self {
        Self {
            q: self.q,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_binary() {
            for &v in &self.values {
                f.write_str(if v == 0 { "+" } else { "-" })?;
            }
            Ok(())
        } else {
            write!(f, "q={}:", self.q)?;
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(rest) = s.strip_prefix("q=") else {
            return Self::binary(s);
        };
        let (q, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let q: u32 = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus {q:?}")))?;
        let values = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, values)
    }
}

/// Two equal-length sequences over the same modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequencePair {
    first: Sequence,
    second: Sequence,
}

impl SequencePair {
    pub fn new(first: Sequence, second: Sequence) -> Result<Self> {
        if first.q != second.q {
            return usage(format!("pair moduli differ: {} vs {}", first.q, second.q));
        }
        if first.len() != second.len() {
            return usage(format!("pair lengths differ: {} vs {}", first.len(), second.len()));
        }
        Ok(Self { first, second })
    }

    pub fn binary(first: &str, second: &str) -> Result<Self> {
        Self::new(Sequence::binary(first)?, Sequence::binary(second)?)
    }

    pub fn first(&self) -> &Sequence {
        &self.first
    }

    pub fn second(&self) -> &Sequence {
        &self.second
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn q(&self) -> u32 {
        self.first.q
    }

    pub fn is_binary(&self) -> bool {
        self.first.is_binary()
    }

    pub fn into_parts(self) -> (Sequence, Sequence) {
        (self.first, self.second)
    }

    /// Applies the same transform to both sequences.
    pub fn map(&self, f: impl Fn(&Sequence) -> Result<Sequence>) -> Result<Self> {
        Self::new(f(&self.first)?, f(&self.second)?)
    }

    /// Pair file text: two sequence lines.
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.first, self.second)
    }

    /// Parses a pair file, ignoring blank lines and `#` comments.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let (Some(a), Some(b)) = (lines.next(), lines.next()) else {
            return Err(Error::Parse("pair file needs two sequence lines".into()));
        };
        if lines.next().is_some() {
            return Err(Error::Parse("pair file has more than two sequence lines".into()));
        }
        Self::new(a.parse()?, b.parse()?)
    }
}
