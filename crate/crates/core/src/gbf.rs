//! Generalized Boolean functions Z_2^m -> Z_q, their sequences, and the
//! quadratic-form CZCP construction of length `2^{m-1} + 2`.

use crate::error::{usage, Error, Result};
use crate::seq::{Sequence, SequencePair};
use std::fmt;

/// A variable `x_var`, or its complement `1 - x_var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub complemented: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self {
            var,
            complemented: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Self {
            var,
            complemented: true,
        }
    }

    fn eval(self, i: usize) -> bool {
        (((i >> self.var) & 1) == 1) != self.complemented
    }
}

/// `Σ coeff · Π literals` over Z_q. The empty product is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    m: usize,
    q: u32,
    terms: Vec<(Vec<Literal>, u32)>,
}

impl BooleanFunction {
    pub fn new(m: usize, q: u32) -> Result<Self> {
        if q < 2 {
            return usage(format!("Boolean function modulus must be >= 2, got {q}"));
        }
        if m >= usize::BITS as usize - 1 {
            return usage(format!("too many variables: {m}"));
        }
        Ok(Self {
            m,
            q,
            terms: Vec::new(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn terms(&self) -> &[(Vec<Literal>, u32)] {
        &self.terms
    }

    /// Adds `coeff · Π literals`.
    pub fn add_term(&mut self, literals: Vec<Literal>, coeff: u32) -> Result<()> {
        if let Some(l) = literals.iter().find(|l| l.var >= self.m) {
            return usage(format!("variable x_{} out of range for m={}", l.var, self.m));
        }
        self.terms.push((literals, coeff % self.q));
        Ok(())
    }

    pub fn with_term(mut self, literals: Vec<Literal>, coeff: u32) -> Result<Self> {
        self.add_term(literals, coeff)?;
        Ok(self)
    }

    /// `f(r_{i,0}, …, r_{i,m-1})` with `r_{i,0}` the least significant bit of `i`.
    pub fn evaluate(&self, i: usize) -> Result<u32> {
        if i >> self.m != 0 {
            return usage(format!("index {i} out of range for m={}", self.m));
        }
        Ok(self.eval_unchecked(i))
    }

    fn eval_unchecked(&self, i: usize) -> u32 {
        let q = u64::from(self.q);
        let sum = self
            .terms
            .iter()
            .filter(|(lits, _)| lits.iter().all(|l| l.eval(i)))
            .fold(0u64, |acc, &(_, c)| (acc + u64::from(c)) % q);
        sum as u32
    }

    /// The length-`2^m` sequence `(ω^{f_0}, …, ω^{f_{2^m - 1}})`.
    pub fn psi(&self) -> Sequence {
        let values = (0..1usize << self.m).map(|i| self.eval_unchecked(i)).collect();
        Sequence::new(self.q, values).expect("exponents are reduced mod q")
    }

    /// [`psi`](Self::psi) with the first and last `l` entries removed.
    pub fn psi_truncated(&self, l: usize) -> Result<Sequence> {
        if self.m == 0 || l >= 1 << (self.m - 1) {
            return usage(format!("truncation {l} needs l < 2^(m-1) with m={}", self.m));
        }
        let full = self.psi();
        let v = full.values();
        Sequence::new(self.q, v[l..v.len() - l].to_vec())
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(lits, c)| {
                let mono: Vec<String> = lits
                    .iter()
                    .map(|l| format!("{}x{}", if l.complemented { "~" } else { "" }, l.var))
                    .collect();
                match (mono.is_empty(), *c) {
                    (true, _) => c.to_string(),
                    (false, 1) => mono.join("*"),
                    (false, _) => format!("{c}*{}", mono.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Parses a permutation given as a comma list of images, e.g. `0,1,2,3`.
pub fn parse_permutation(s: &str) -> Result<Vec<usize>> {
    let pi = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    check_permutation(&pi, pi.len())?;
    Ok(pi)
}

fn check_permutation(pi: &[usize], n: usize) -> Result<()> {
    if pi.len() != n {
        return usage(format!("permutation must have {n} entries, got {}", pi.len()));
    }
    let mut seen = vec![false; n];
    for &p in pi {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return usage(format!("{pi:?} is not a permutation of 0..{n}"));
        }
    }
    Ok(())
}

/// The function `g^d` whose truncated sequences form the pair.
///
/// ```text
/// ζ^d = Σ_{α=0}^{m-4} x_{π(α)} x_{π(α+1)} + d·x_{π(m-3)}
/// η^d = Σ_{α=0}^{m-4} x̄_{π(α)} x̄_{π(α+1)} + d̄·x̄_{π(m-3)} + d
/// g^d = (q/2)·[x̄_{m-1} x_{m-2} ζ^d + x_{m-1} x̄_{m-2} η^d + d̄ x_{m-1} x_{m-2}] + c
/// ```
pub fn theorem1_function(m: usize, q: u32, pi: &[usize], c: u32, d: bool) -> Result<BooleanFunction> {
    if m < 4 {
        return usage(format!("m must be at least 4, got {m}"));
    }
    if !q.is_multiple_of(2) {
        return usage(format!("q must be even, got {q}"));
    }
    check_permutation(pi, m - 2)?;
    let half = q / 2;
    let (hi, lo) = (m - 1, m - 2);
    let last = pi[m - 3];
    let mut f = BooleanFunction::new(m, q)?;

    let zeta_sel = [Literal::neg(hi), Literal::pos(lo)];
    let eta_sel = [Literal::pos(hi), Literal::neg(lo)];
    for w in pi.windows(2) {
        f.add_term(
            [&zeta_sel[..], &[Literal::pos(w[0]), Literal::pos(w[1])]].concat(),
            half,
        )?;
        f.add_term([&eta_sel[..], &[Literal::neg(w[0]), Literal::neg(w[1])]].concat(), half)?;
    }
    if d {
        f.add_term([&zeta_sel[..], &[Literal::pos(last)]].concat(), half)?;
        f.add_term(eta_sel.to_vec(), half)?;
    } else {
        f.add_term([&eta_sel[..], &[Literal::neg(last)]].concat(), half)?;
        f.add_term(vec![Literal::pos(hi), Literal::pos(lo)], half)?;
    }
    f.add_term(Vec::new(), c % q)?;
    Ok(f)
}

/// `(Ψ_L(g^0), Ψ_L(g^1))` with `L = 2^{m-2} - 1`: a
/// `(2^{m-1} + 2, 2^{π(m-3)} + 1)`-CZCP.
pub fn theorem1_pair(m: usize, q: u32, pi: &[usize], c: u32) -> Result<SequencePair> {
    let l = (1usize << (m.max(2) - 2)) - 1;
    let a = theorem1_function(m, q, pi, c, false)?.psi_truncated(l)?;
    let b = theorem1_function(m, q, pi, c, true)?.psi_truncated(l)?;
    SequencePair::new(a, b)
}

/// Zone width promised for [`theorem1_pair`].
pub fn theorem1_expected_z(pi: &[usize]) -> usize {
    pi.last().map_or(1, |&p| (1usize << p) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::cross_corr;
    use crate::verify::verify;
    use Literal as L;

    fn example1() -> BooleanFunction {
        BooleanFunction::new(3, 2)
            .unwrap()
            .with_term(vec![L::pos(0), L::pos(1)], 1)
            .unwrap()
            .with_term(vec![L::pos(1), L::pos(2)], 1)
            .unwrap()
    }

    #[test]
    fn evaluation_and_sequences() {
        let f = example1();
        assert_eq!(f.evaluate(3).unwrap(), 1);
        assert!(f.evaluate(8).is_err());
        assert_eq!(f.psi().to_string(), "+++-++-+");
        assert_eq!(f.psi_truncated(1).unwrap().to_string(), "++-++-");
        assert_eq!(f.psi_truncated(0).unwrap(), f.psi());
        assert!(f.psi_truncated(4).is_err());

        let x0 = BooleanFunction::new(2, 2)
            .unwrap()
            .with_term(vec![L::pos(0)], 1)
            .unwrap();
        assert_eq!(x0.psi().to_string(), "+-+-");
        assert_eq!(x0.psi_truncated(1).unwrap().to_string(), "-+");
        let nx0 = BooleanFunction::new(1, 2)
            .unwrap()
            .with_term(vec![L::neg(0)], 1)
            .unwrap();
        assert_eq!(nx0.evaluate(0).unwrap(), 1);
        let c = BooleanFunction::new(3, 6).unwrap().with_term(vec![], 4).unwrap();
        assert!((0..8).all(|i| c.evaluate(i).unwrap() == 4));
        assert_eq!(BooleanFunction::new(3, 2).unwrap().psi().to_string(), "++++++++");
        assert!(BooleanFunction::new(2, 2)
            .unwrap()
            .add_term(vec![L::pos(2)], 1)
            .is_err());
        assert_eq!(f.to_string(), "x0*x1 + x1*x2");
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(parse_permutation("2, 0,1").unwrap(), vec![2, 0, 1]);
        assert!(parse_permutation("0,0").is_err());
        assert!(parse_permutation("0,2").is_err());
        assert!(parse_permutation("a").is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(theorem1_pair(3, 2, &[0], 0).is_err());
        assert!(theorem1_pair(5, 3, &[0, 1, 2], 0).is_err());
        assert!(theorem1_pair(5, 2, &[0, 1], 0).is_err());
        assert!(theorem1_pair(5, 2, &[0, 1, 1], 0).is_err());
    }

    #[test]
    fn small_members() {
        let p = theorem1_pair(4, 2, &[0, 1], 0).unwrap();
        assert_eq!(p.len(), 10);
        assert_eq!(verify(&p).z, 3);
        let p = theorem1_pair(5, 2, &[1, 2, 0], 0).unwrap();
        assert_eq!(p.len(), 18);
        assert!(verify(&p).z >= 2);
    }

    #[test]
    fn complementary_bit_patterns() {
        for m in 2..=12usize {
            let quarter = 1usize << (m - 2);
            for tau in 1..=quarter {
                let (u, v) = (quarter + tau - 1, 3 * quarter - tau);
                assert_eq!(u ^ v, (1 << m) - 1, "m={m} tau={tau}");
            }
        }
    }

    #[test]
    fn high_shift_bit_is_set() {
        for m in 4..=12usize {
            let half = 1usize << (m - 1);
            for p in 0..=m - 3 {
                for tau in (half - (1 << p) + 1)..=half {
                    let idx = (1usize << (m - 2)) + tau - 1;
                    assert_eq!((idx >> p) & 1, 1, "m={m} p={p} tau={tau}");
                }
            }
        }
    }

    fn path_function(m: usize, pi: &[usize], linear: &[u32], constant: u32, complement: bool) -> BooleanFunction {
        let lit = |v| if complement { L::neg(v) } else { L::pos(v) };
        let mut f = BooleanFunction::new(m, 2).unwrap();
        for w in pi.windows(2) {
            f.add_term(vec![lit(w[0]), lit(w[1])], 1).unwrap();
        }
        for (i, &g) in linear.iter().enumerate() {
            f.add_term(vec![lit(i)], g).unwrap();
        }
        f.with_term(vec![], constant).unwrap()
    }

    #[test]
    fn quadratic_path_mates() {
        let mut state = 0x2545_f491u32;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 17;
            state ^= state << 5;
            state
        };
        for m in 1..=6usize {
            for _ in 0..8 {
                let mut pi: Vec<usize> = (0..m).collect();
                for i in (1..m).rev() {
                    pi.swap(i, next() as usize % (i + 1));
                }
                let linear: Vec<u32> = (0..m).map(|_| next() & 1).collect();
                let constant = next() & 1;
                let last = pi[m - 1];
                let f = path_function(m, &pi, &linear, constant, false);
                let fbar = path_function(m, &pi, &linear, constant, true);
                let a = f.psi();
                let b = f.clone().with_term(vec![L::pos(last)], 1).unwrap().psi();
                let c = fbar.clone().with_term(vec![L::neg(last)], 1).unwrap().psi();
                let d = fbar.with_term(vec![], 1).unwrap().psi();
                assert!(crate::golay::is_gcp(&SequencePair::new(a.clone(), b.clone()).unwrap()));
                for tau in 0..(1i64 << m) {
                    let s = &cross_corr(&a, &c, tau).unwrap() + &cross_corr(&b, &d, tau).unwrap();
                    assert!(s.is_zero(), "m={m} pi={pi:?} tau={tau}");
                }
            }
        }
    }
}
