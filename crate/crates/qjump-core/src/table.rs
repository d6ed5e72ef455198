//! Coefficient tables: the f_mn matrix for one model and parameter set,
//! with provenance and the neglected-tail bound, plus the log-log slope fit
//! used to read off the asymptotic nonlinearity exponent.
//!
//! Table construction is embarrassingly parallel over entries; the parallel
//! and sequential builders produce bit-identical tables.

use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

use crate::fock::DensityMatrix;
use crate::jc::{self, JCParams, JcError};
use crate::oscillator::{self, OscError, OscParams};
use crate::util::{map_indexed, map_indexed_seq};

#[derive(Debug, Error)]
pub enum TableError {
    #[error(transparent)]
    Jc(#[from] JcError),
    #[error(transparent)]
    Osc(#[from] OscError),
    #[error("table bounds: requested n in [{n_lo}, {n_hi}] against table max {n_max}")]
    OutOfBounds {
        n_lo: usize,
        n_hi: usize,
        n_max: usize,
    },
    #[error("power-law fit needs positive diagonal entries; f_{n}{n} = {value:e}")]
    NonPositiveEntry { n: usize, value: f64 },
    #[error("power-law fit needs at least two points")]
    TooFewPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelTag {
    Jc,
    Oscillator,
}

impl std::fmt::Display for ModelTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelTag::Jc => write!(f, "jc"),
            ModelTag::Oscillator => write!(f, "osc"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Quadrature,
    AnalyticExact,
    AnalyticInterp,
    SteepestDescent,
    Empirical,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Provenance::Quadrature => "quadrature",
            Provenance::AnalyticExact => "analytic_exact",
            Provenance::AnalyticInterp => "analytic_interp",
            Provenance::SteepestDescent => "steepest_descent",
            Provenance::Empirical => "empirical",
        };
        write!(f, "{s}")
    }
}

/// The f_mn matrix (1-indexed modes 1..=n_max) for one model + parameters +
/// averaging window.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub model: ModelTag,
    pub chi: f64,
    pub lambda: f64,
    pub t_window: f64,
    pub n_max: usize,
    pub provenance: Provenance,
    /// Neglected-tail bound e^{-lambda T} carried by every averaged
    /// quantity.
    pub tail_bound: f64,
    entries: Array2<Complex64>,
}

impl CoefficientTable {
    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.entries[(m - 1, n - 1)]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (1..=self.n_max).map(|n| self.get(n, n).re).collect()
    }

    /// J_T rho = sum rho_mn sqrt(mn) f_mn |m-1><n-1|.
    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        let dim = rho.dim();
        let mut out = Array2::<Complex64>::zeros((dim, dim));
        let top = self.n_max.min(dim - 1);
        for m in 1..=top {
            for n in 1..=top {
                let w = (m as f64 * n as f64).sqrt();
                out[(m - 1, n - 1)] = rho.get(m, n) * w * self.get(m, n);
            }
        }
        DensityMatrix::from_parts(dim, out)
    }

    /// Least-squares line through (ln n, ln f_nn) for n in [n_lo, n_hi].
    pub fn fit_power_law(&self, n_lo: usize, n_hi: usize) -> Result<PowerLawFit, TableError> {
        if n_lo < 1 || n_hi > self.n_max {
            return Err(TableError::OutOfBounds {
                n_lo,
                n_hi,
                n_max: self.n_max,
            });
        }
        if n_hi <= n_lo {
            return Err(TableError::TooFewPoints);
        }
        let mut xs = Vec::with_capacity(n_hi - n_lo + 1);
        let mut ys = Vec::with_capacity(n_hi - n_lo + 1);
        for n in n_lo..=n_hi {
            let v = self.get(n, n).re;
            if v <= 0.0 {
                return Err(TableError::NonPositiveEntry { n, value: v });
            }
            xs.push((n as f64).ln());
            ys.push(v.ln());
        }
        Ok(fit_line(&xs, &ys))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

impl PowerLawFit {
    /// beta in F(n) = (n+1)^{-beta}, pinned to the slope by the three model
    /// pairs: slope -1 <-> 1/2, slope -5/2 <-> 5/4, slope -3/2 <-> 3/4.
    pub fn implied_beta(&self) -> f64 {
        -self.slope / 2.0
    }
}

fn fit_line(xs: &[f64], ys: &[f64]) -> PowerLawFit {
    let n = xs.len() as f64;
    let mean_x: f64 = xs.iter().sum::<f64>() / n;
    let mean_y: f64 = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    let slope = sxy / sxx;
    PowerLawFit {
        slope,
        intercept: mean_y - slope * mean_x,
        r_squared: if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) },
    }
}

/// One computed table entry: ((m, n), value).
type Entry = ((usize, usize), Complex64);

fn hermitian_fill(n_max: usize, values: Vec<Entry>) -> Array2<Complex64> {
    let mut entries = Array2::<Complex64>::zeros((n_max, n_max));
    for ((m, n), v) in values {
        entries[(m - 1, n - 1)] = v;
        if m != n {
            entries[(n - 1, m - 1)] = v.conj();
        }
    }
    entries
}

fn upper_triangle_pairs(n_max: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n_max * (n_max + 1) / 2);
    for m in 1..=n_max {
        for n in m..=n_max {
            pairs.push((m, n));
        }
    }
    pairs
}

impl CoefficientTable {
    /// Full quadrature table for the two-level-atom detector.
    pub fn build_jc(p: &JCParams, t_window: f64, n_max: usize) -> Result<Self, TableError> {
        let pairs = upper_triangle_pairs(n_max);
        let results = map_indexed(pairs.len(), |k| {
            let (m, n) = pairs[k];
            jc::fmn(p, t_window, m, n).map(|v| ((m, n), v))
        });
        Self::assemble_jc(p, t_window, n_max, results)
    }

    /// Sequential twin of [`CoefficientTable::build_jc`]; used by the
    /// benchmark suite and bit-identical to the parallel build.
    pub fn build_jc_seq(p: &JCParams, t_window: f64, n_max: usize) -> Result<Self, TableError> {
        let pairs = upper_triangle_pairs(n_max);
        let results = map_indexed_seq(pairs.len(), |k| {
            let (m, n) = pairs[k];
            jc::fmn(p, t_window, m, n).map(|v| ((m, n), v))
        });
        Self::assemble_jc(p, t_window, n_max, results)
    }

    fn assemble_jc(
        p: &JCParams,
        t_window: f64,
        n_max: usize,
        results: Vec<Result<Entry, JcError>>,
    ) -> Result<Self, TableError> {
        let values = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            model: ModelTag::Jc,
            chi: p.chi(),
            lambda: p.lambda,
            t_window,
            n_max,
            provenance: Provenance::Quadrature,
            tail_bound: (-p.lambda * t_window).exp(),
            entries: hermitian_fill(n_max, values),
        })
    }

    /// Diagonal quadrature table for the two-level-atom detector (the
    /// off-diagonal entries are left zero).
    pub fn build_jc_diagonal(p: &JCParams, t_window: f64, n_max: usize) -> Result<Self, TableError> {
        let results = map_indexed(n_max, |k| {
            let n = k + 1;
            jc::fmn(p, t_window, n, n).map(|v| ((n, n), v))
        });
        Self::assemble_jc(p, t_window, n_max, results)
    }

    /// Diagonal quadrature table for the oscillator detector.
    pub fn build_osc_diagonal(
        p: &OscParams,
        t_window: f64,
        n_max: usize,
    ) -> Result<Self, TableError> {
        let results = map_indexed(n_max, |k| {
            let n = k + 1;
            oscillator::fnn_integral(p, t_window, n, n).map(|v| ((n, n), v))
        });
        Self::assemble_osc(p, t_window, n_max, results)
    }

    /// Sequential twin of [`CoefficientTable::build_osc_diagonal`].
    pub fn build_osc_diagonal_seq(
        p: &OscParams,
        t_window: f64,
        n_max: usize,
    ) -> Result<Self, TableError> {
        let results = map_indexed_seq(n_max, |k| {
            let n = k + 1;
            oscillator::fnn_integral(p, t_window, n, n).map(|v| ((n, n), v))
        });
        Self::assemble_osc(p, t_window, n_max, results)
    }

    fn assemble_osc(
        p: &OscParams,
        t_window: f64,
        n_max: usize,
        results: Vec<Result<Entry, OscError>>,
    ) -> Result<Self, TableError> {
        let values = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            model: ModelTag::Oscillator,
            chi: p.chi(),
            lambda: p.lambda,
            t_window,
            n_max,
            provenance: Provenance::Quadrature,
            tail_bound: (-p.lambda * t_window).exp(),
            entries: hermitian_fill(n_max, values),
        })
    }

    /// Analytic table from a closed-form diagonal law.
    pub fn from_diagonal_law(
        model: ModelTag,
        chi: f64,
        lambda: f64,
        t_window: f64,
        provenance: Provenance,
        diagonal: Vec<f64>,
    ) -> Self {
        let n_max = diagonal.len();
        let mut entries = Array2::<Complex64>::zeros((n_max, n_max));
        for (k, v) in diagonal.iter().enumerate() {
            entries[(k, k)] = Complex64::new(*v, 0.0);
        }
        Self {
            model,
            chi,
            lambda,
            t_window,
            n_max,
            provenance,
            tail_bound: (-lambda * t_window).exp(),
            entries,
        }
    }
}
