//! Least-squares channel-estimation error of training matrices, and a
//! cyclic-shift training layout built from a CZCP.

use crate::error::{usage, Error, Result};
use crate::numfmt::format_significant;
use crate::seq::SequencePair;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Nonzero entries must have magnitude within this distance of 1.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// A training matrix with `N_t (λ + 1)` columns, one per antenna and path.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingMatrix {
    nt: usize,
    lambda: usize,
    q_nonzero: usize,
    entries: DMatrix<Complex64>,
}

impl TrainingMatrix {
    /// Validates the shape and entry magnitudes. `q_nonzero` defaults to the
    /// number of nonzero entries in the first column.
    pub fn new(entries: DMatrix<Complex64>, nt: usize, lambda: usize, q_nonzero: Option<usize>) -> Result<Self> {
        if nt == 0 {
            return usage("need at least one transmit antenna");
        }
        let cols = nt * (lambda + 1);
        if entries.ncols() != cols {
            return usage(format!(
                "expected N_t(lambda+1) = {cols} columns, got {}",
                entries.ncols()
            ));
        }
        if entries.nrows() == 0 {
            return usage("training matrix has no rows");
        }
        if let Some(bad) = entries
            .iter()
            .find(|z| z.norm() != 0.0 && (z.norm() - 1.0).abs() > UNIT_TOLERANCE)
        {
            return usage(format!("entry {bad} is neither zero nor unit magnitude"));
        }
        let inferred = entries.column(0).iter().filter(|z| z.norm() != 0.0).count();
        let q_nonzero = q_nonzero.unwrap_or(inferred);
        if q_nonzero == 0 {
            return usage("Q must be at least 1");
        }
        Ok(Self {
            nt,
            lambda,
            q_nonzero,
            entries,
        })
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Nonzero entries per column, `Q`.
    pub fn q_nonzero(&self) -> usize {
        self.q_nonzero
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn gram(&self) -> DMatrix<Complex64> {
        self.entries.adjoint() * &self.entries
    }

    /// Parses rows of comma-separated `re+imj` cells.
    pub fn parse_csv(text: &str, nt: usize, lambda: usize, q_nonzero: Option<usize>) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(parse_complex).collect())
            .collect::<Result<_>>()?;
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::Parse(format!(
                "row {r} has {} cells, expected {ncols}",
                rows[r].len()
            )));
        }
        let entries = DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
        Self::new(entries, nt, lambda, q_nonzero)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.entries.row_iter() {
            let cells: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Parses `re+imj`, `re-imj`, `re`, or `imj`.
pub fn parse_complex(cell: &str) -> Result<Complex64> {
    let s = cell.trim();
    let bad = || Error::Parse(format!("bad complex cell {cell:?}"));
    let Some(body) = s.strip_suffix(['j', 'i']) else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (body[..i].parse::<f64>().map_err(|_| bad())?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

pub fn format_complex(z: Complex64) -> String {
    let im = format_significant(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}j", format_significant(z.re))
}

/// `σ² / (N_t (λ + 1)) · tr((XᴴX)⁻¹)`.
pub fn ls_mse(x: &TrainingMatrix, sigma2: f64) -> Result<f64> {
    let gram = x.gram();
    let n = gram.nrows();
    let chol = gram.cholesky().ok_or(Error::RankDeficient)?;
    let l = chol.l_dirty();
    let diag: Vec<f64> = (0..n).map(|i| l[(i, i)].re).collect();
    let max = diag.iter().cloned().fold(0.0, f64::max);
    if diag.iter().any(|&d| d.is_nan() || d <= max * 1e-7) {
        return Err(Error::RankDeficient);
    }
    let inv = chol.inverse();
    let trace: f64 = (0..n).map(|i| inv[(i, i)].re).sum();
    Ok(sigma2 / (x.nt * (x.lambda + 1)) as f64 * trace)
}

/// `σ² / Q`.
pub fn mse_lower_bound(sigma2: f64, q_nonzero: usize) -> f64 {
    sigma2 / q_nonzero as f64
}

/// True iff `max |XᴴX − Q·I| ≤ tol`.
pub fn is_optimal_training(x: &TrainingMatrix, tol: f64) -> bool {
    let gram = x.gram();
    let q = x.q_nonzero as f64;
    gram.iter().enumerate().all(|(k, z)| {
        let (i, j) = (k % gram.nrows(), k / gram.nrows());
        let target = if i == j { q } else { 0.0 };
        (z - Complex64::new(target, 0.0)).norm() <= tol
    })
}

/// Cyclic training layout from a pair `(a, b)` of length N.
///
/// The frame has `2 N N_t` rows split into `2 N_t` slots of length N.
/// Antenna t sends `a` in slot t and `b` in slot `N_t + t`, zeros elsewhere;
/// column `(t, l)` is that frame signal cyclically delayed by `l`. Every
/// column carries `Q = 2N` unit entries, and the Gram matrix is `2N·I`
/// whenever λ does not exceed the pair's zone width.
pub fn demo_training(pair: &SequencePair, nt: usize, lambda: usize) -> Result<TrainingMatrix> {
    let n = pair.len();
    if nt == 0 {
        return usage("need at least one transmit antenna");
    }
    if lambda >= n {
        return usage(format!("lambda = {lambda} must be below the sequence length {n}"));
    }
    let q = pair.q() as f64;
    let symbol = |e: u32| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / q);
    let rows = 2 * n * nt;
    let mut frames = vec![vec![Complex64::new(0.0, 0.0); rows]; nt];
    for (t, frame) in frames.iter_mut().enumerate() {
        for k in 0..n {
            frame[t * n + k] = symbol(pair.first().values()[k]);
            frame[(nt + t) * n + k] = symbol(pair.second().values()[k]);
        }
    }
    let entries = DMatrix::from_fn(rows, nt * (lambda + 1), |r, col| {
        let (t, l) = (col / (lambda + 1), col % (lambda + 1));
        frames[t][(r + rows - l) % rows]
    });
    TrainingMatrix::new(entries, nt, lambda, Some(2 * n))
}
