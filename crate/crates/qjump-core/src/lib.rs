//! Quantum jump super-operators derived from microscopic photodetector
//! models.
//!
//! Two detectors coupled to a single damped field mode are implemented: a
//! two-level atom ([`jc`]) and a harmonic oscillator ([`oscillator`]). For
//! each, the time-averaged jump coefficients f_mn are computed three ways:
//! by adaptive quadrature ([`quad`]), from closed analytic forms and
//! saddle-point asymptotics, and empirically from seeded Monte Carlo
//! first-jump sampling ([`trajectories`]). [`table`] assembles the
//! coefficient matrices and extracts power-law exponents; [`fock`] provides
//! the shared truncated-space operator algebra.
//!
//! With the default `parallel` feature, table construction and trajectory
//! sampling fan out over rayon; results are bit-identical to the sequential
//! fallback.

pub mod fock;
pub mod jc;
pub mod linalg;
pub mod oracle;
pub mod oscillator;
pub mod quad;
pub mod table;
pub mod trajectories;

mod util;

pub use fock::{apply_jump, diag_part, ladder_ops, DensityMatrix, DiagonalF, FockOperator, JumpSpec};
pub use jc::JCParams;
pub use oscillator::{OscParams, Regime};
pub use quad::{QuadratureResult, QuadratureSpec};
pub use table::{CoefficientTable, ModelTag, Provenance};
pub use trajectories::{DetectorModel, TrajectoryConfig, TrajectoryEnsemble};
