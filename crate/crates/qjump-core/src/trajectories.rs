//! Monte Carlo validation of the time-averaging hypothesis: sample
//! first-photoemission times from the waiting density p(t) and compare the
//! empirical jump statistics against the quadrature coefficients.
//!
//! Sampling is inverse-CDF on a dense grid. Every trajectory draws from its
//! own counter-based stream derived from (master_seed, index), so ensembles
//! are reproducible regardless of how the work is scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fock::DensityMatrix;
use crate::jc::{self, JCParams};
use crate::oscillator::{self, OscParams};
use crate::util::{map_indexed, map_indexed_seq};

#[derive(Debug, Error)]
pub enum TrajectoryError {
    #[error("initial state must have at least {min} trajectories, got {got}")]
    TooFewTrajectories { min: usize, got: usize },
    #[error("time window must be positive, got {0}")]
    BadWindow(f64),
}

#[derive(Debug, Clone)]
pub enum DetectorModel {
    Jc(JCParams),
    Oscillator(OscParams),
}

impl DetectorModel {
    fn g_abs(&self) -> f64 {
        match self {
            DetectorModel::Jc(p) => p.g_abs(),
            DetectorModel::Oscillator(p) => p.g_abs(),
        }
    }

    /// Waiting density of a diagonal-weight Fock mixture.
    fn density_at(&self, t: f64, weights: &[f64]) -> f64 {
        match self {
            DetectorModel::Jc(p) => {
                let mut total = 0.0;
                for (n, &w) in weights.iter().enumerate().skip(1) {
                    if w == 0.0 {
                        continue;
                    }
                    let (_, s_n) = jc::cn_sn(n, t, p);
                    total += w * n as f64 * s_n.norm_sqr();
                }
                2.0 * p.lambda * (-p.lambda * t).exp() * total
            }
            DetectorModel::Oscillator(p) => {
                let mut total = 0.0;
                for (n, &w) in weights.iter().enumerate().skip(1) {
                    if w == 0.0 {
                        continue;
                    }
                    total += w * oscillator::waiting_weight(p, t, n);
                }
                total
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct TrajectoryConfig {
    pub model: DetectorModel,
    /// Averaging window T; first jumps beyond it count as no-jump.
    pub t_window: f64,
    /// Initial field state (typically a Fock projector); only the diagonal
    /// enters the waiting density.
    pub initial_state: DensityMatrix,
    pub n_trajectories: usize,
    pub master_seed: u64,
    /// Lower bound on grid resolution; the grid is refined further when
    /// needed to resolve the fastest oscillation of the no-count evolution.
    pub time_grid_points: usize,
}

impl TrajectoryConfig {
    pub fn new(
        model: DetectorModel,
        t_window: f64,
        initial_state: DensityMatrix,
        n_trajectories: usize,
        master_seed: u64,
    ) -> Self {
        Self {
            model,
            t_window,
            initial_state,
            n_trajectories,
            master_seed,
            time_grid_points: 4096,
        }
    }

    fn grid_points(&self) -> usize {
        // resolve the fastest oscillation period 2 pi/(|g| sqrt(N_max))
        // with at least 20 points
        let n_max = (self.initial_state.dim() - 1) as f64;
        let period = 2.0 * std::f64::consts::PI / (self.model.g_abs() * n_max.sqrt().max(1.0));
        let needed = (self.t_window / (period / 20.0)).ceil() as usize + 2;
        self.time_grid_points.max(needed)
    }
}

/// Tabulated waiting density and its cumulative on a uniform grid over
/// [0, T].
#[derive(Debug, Clone)]
pub struct WaitingDensity {
    pub times: Vec<f64>,
    pub density: Vec<f64>,
    /// Trapezoid cumulative of `density`; cdf[0] = 0.
    pub cdf: Vec<f64>,
}

impl WaitingDensity {
    pub fn total(&self) -> f64 {
        *self.cdf.last().unwrap()
    }

    /// Survival function S(t) = 1 - cdf(t).
    pub fn survival(&self) -> Vec<f64> {
        self.cdf.iter().map(|c| 1.0 - c).collect()
    }

    /// Invert u = cdf(t) by binary search plus linear interpolation;
    /// returns None when u exceeds the total jump probability.
    pub fn invert(&self, u: f64) -> Option<f64> {
        if u > self.total() {
            return None;
        }
        let k = self.cdf.partition_point(|&c| c < u);
        if k == 0 {
            return Some(self.times[0]);
        }
        let (c0, c1) = (self.cdf[k - 1], self.cdf[k]);
        let (t0, t1) = (self.times[k - 1], self.times[k]);
        if c1 <= c0 {
            return Some(t1);
        }
        Some(t0 + (t1 - t0) * (u - c0) / (c1 - c0))
    }
}

/// Tabulate p(t) = Tr[Xi(t) rho] on the time grid.
pub fn waiting_density(config: &TrajectoryConfig) -> Result<WaitingDensity, TrajectoryError> {
    if config.t_window <= 0.0 {
        return Err(TrajectoryError::BadWindow(config.t_window));
    }
    let points = config.grid_points();
    let weights = config.initial_state.diagonal();
    let times: Vec<f64> = (0..points)
        .map(|k| config.t_window * k as f64 / (points - 1) as f64)
        .collect();
    let density = map_indexed(points, |k| {
        config.model.density_at(times[k], &weights).max(0.0)
    });
    let mut cdf = Vec::with_capacity(points);
    cdf.push(0.0);
    for k in 1..points {
        let panel = 0.5 * (density[k - 1] + density[k]) * (times[k] - times[k - 1]);
        cdf.push(cdf[k - 1] + panel);
    }
    Ok(WaitingDensity {
        times,
        density,
        cdf,
    })
}

#[derive(Debug, Clone)]
pub struct EmpiricalFnn {
    /// jump_fraction / (n T) for an initial Fock state |n>.
    pub value: f64,
    /// Binomial standard error of `value`.
    pub std_error: f64,
    pub initial_n: usize,
}

#[derive(Debug, Clone)]
pub struct TrajectoryEnsemble {
    /// First jump time per trajectory, None when no jump occurred in the
    /// window.
    pub first_jump_times: Vec<Option<f64>>,
    pub jump_fraction: f64,
    /// Present when the initial state is a Fock projector.
    pub empirical_fnn: Option<EmpiricalFnn>,
    /// Survival curve S(t) on the density grid.
    pub survival: Vec<f64>,
    pub grid: WaitingDensity,
    /// Set when the total jump probability vanished: the ensemble carries
    /// no statistical information.
    pub degenerate: bool,
}

fn fock_level(state: &DensityMatrix) -> Option<usize> {
    let diag = state.diagonal();
    let mut level = None;
    for (n, &w) in diag.iter().enumerate() {
        if w > 1e-12 {
            if level.is_some() {
                return None;
            }
            level = Some(n);
        }
    }
    level
}

fn draw(master_seed: u64, index: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index as u64);
    rng.random()
}

fn build_ensemble(
    config: &TrajectoryConfig,
    grid: WaitingDensity,
    first_jump_times: Vec<Option<f64>>,
) -> TrajectoryEnsemble {
    let jumps = first_jump_times.iter().filter(|t| t.is_some()).count();
    let jump_fraction = jumps as f64 / config.n_trajectories as f64;
    let total = grid.total();
    let degenerate = total <= 0.0;
    let empirical_fnn = fock_level(&config.initial_state).map(|n| {
        if n == 0 || degenerate {
            EmpiricalFnn {
                value: 0.0,
                std_error: 0.0,
                initial_n: n,
            }
        } else {
            let scale = n as f64 * config.t_window;
            let p_hat = jump_fraction;
            let se = (p_hat * (1.0 - p_hat) / config.n_trajectories as f64).sqrt();
            EmpiricalFnn {
                value: p_hat / scale,
                std_error: se / scale,
                initial_n: n,
            }
        }
    });
    let survival = grid.survival();
    TrajectoryEnsemble {
        first_jump_times,
        jump_fraction,
        empirical_fnn,
        survival,
        grid,
        degenerate,
    }
}

/// Draw the first-jump time of every trajectory by inverse-CDF sampling.
/// Identical master_seed implies an identical ensemble, independent of
/// parallel scheduling.
pub fn sample_first_jumps(config: &TrajectoryConfig) -> Result<TrajectoryEnsemble, TrajectoryError> {
    if config.n_trajectories == 0 {
        return Err(TrajectoryError::TooFewTrajectories { min: 1, got: 0 });
    }
    let grid = waiting_density(config)?;
    let times = map_indexed(config.n_trajectories, |i| {
        grid.invert(draw(config.master_seed, i))
    });
    Ok(build_ensemble(config, grid, times))
}

/// Sequential twin of [`sample_first_jumps`]; bit-identical output.
pub fn sample_first_jumps_seq(
    config: &TrajectoryConfig,
) -> Result<TrajectoryEnsemble, TrajectoryError> {
    if config.n_trajectories == 0 {
        return Err(TrajectoryError::TooFewTrajectories { min: 1, got: 0 });
    }
    let grid = waiting_density(config)?;
    let times = map_indexed_seq(config.n_trajectories, |i| {
        grid.invert(draw(config.master_seed, i))
    });
    Ok(build_ensemble(config, grid, times))
}
