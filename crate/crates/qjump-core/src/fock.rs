//! Truncated Fock-space linear algebra shared by both detector models:
//! ladder operators, density matrices, exponential phase operators, and the
//! diagonal jump machinery.
//!
//! Everything is dense `Array2<Complex64>`; the spaces in play stay below a
//! few hundred levels. All types are immutable after construction and all
//! operations are pure functions.

use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

/// Hermiticity tolerance for density matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Slack allowed below zero for eigenvalues of positive-semidefinite states.
pub const PSD_SLACK: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum FockError {
    #[error("Fock space dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not hermitian within {tol:e} (max deviation {max_dev:e})")]
    NotHermitian { tol: f64, max_dev: f64 },
    #[error("trace {trace} outside (0, 1 + 1e-12]")]
    BadTrace { trace: f64 },
    #[error("Fock level {level} outside truncated space of dimension {dim}")]
    LevelOutOfRange { level: usize, dim: usize },
}

/// Dense operator on the truncated Fock space of the field mode.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    dim: usize,
    entries: Array2<Complex64>,
}

impl FockOperator {
    pub fn from_matrix(entries: Array2<Complex64>) -> Result<Self, FockError> {
        let dim = entries.nrows();
        if dim < 2 || entries.ncols() != dim {
            return Err(FockError::InvalidDimension(dim));
        }
        Ok(Self { dim, entries })
    }

    pub fn zeros(dim: usize) -> Result<Self, FockError> {
        if dim < 2 {
            return Err(FockError::InvalidDimension(dim));
        }
        Ok(Self {
            dim,
            entries: Array2::zeros((dim, dim)),
        })
    }

    pub fn identity(dim: usize) -> Result<Self, FockError> {
        if dim < 2 {
            return Err(FockError::InvalidDimension(dim));
        }
        Ok(Self {
            dim,
            entries: Array2::eye(dim),
        })
    }

    /// Diagonal operator f(n) |n><n|.
    pub fn from_diagonal_fn(dim: usize, f: impl Fn(usize) -> Complex64) -> Result<Self, FockError> {
        let mut op = Self::zeros(dim)?;
        for n in 0..dim {
            op.entries[(n, n)] = f(n);
        }
        Ok(op)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.t().mapv(|z| z.conj()),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, FockError> {
        if self.dim != rhs.dim {
            return Err(FockError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            entries: self.entries.dot(&rhs.entries),
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.mapv(|z| z * c),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, FockError> {
        if self.dim != rhs.dim {
            return Err(FockError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            entries: &self.entries + &rhs.entries,
        })
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut worst = 0.0f64;
        for (a, b) in self.entries.iter().zip(rhs.entries.iter()) {
            worst = worst.max((a - b).norm());
        }
        worst
    }

    /// Gamma rho Gamma^dagger.
    pub fn sandwich(&self, rho: &DensityMatrix) -> Result<DensityMatrix, FockError> {
        if self.dim != rho.dim {
            return Err(FockError::DimensionMismatch {
                left: self.dim,
                right: rho.dim,
            });
        }
        let m = self
            .entries
            .dot(&rho.entries)
            .dot(&self.entries.t().mapv(|z| z.conj()));
        Ok(DensityMatrix {
            dim: self.dim,
            entries: m,
        })
    }
}

/// Field density matrix; sub-normalized states are allowed (no-count
/// evolution shrinks the trace).
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    dim: usize,
    entries: Array2<Complex64>,
}

impl DensityMatrix {
    /// Validates hermiticity and the trace window; positivity is checked
    /// separately by [`DensityMatrix::min_eigenvalue`] since it costs an
    /// eigendecomposition.
    pub fn new(entries: Array2<Complex64>) -> Result<Self, FockError> {
        let dim = entries.nrows();
        if dim < 2 || entries.ncols() != dim {
            return Err(FockError::InvalidDimension(dim));
        }
        let mut max_dev = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                max_dev = max_dev.max((entries[(i, j)] - entries[(j, i)].conj()).norm());
            }
        }
        if max_dev > HERMITICITY_TOL {
            return Err(FockError::NotHermitian {
                tol: HERMITICITY_TOL,
                max_dev,
            });
        }
        let trace: f64 = (0..dim).map(|i| entries[(i, i)].re).sum();
        if !(trace > 0.0 && trace <= 1.0 + 1e-12) {
            return Err(FockError::BadTrace { trace });
        }
        Ok(Self { dim, entries })
    }

    /// Unchecked constructor for intermediate states produced by operations
    /// that may legitimately return zero (e.g. a jump from vacuum).
    pub(crate) fn from_parts(dim: usize, entries: Array2<Complex64>) -> Self {
        Self { dim, entries }
    }

    /// Fock projector |n><n|.
    pub fn fock_state(dim: usize, n: usize) -> Result<Self, FockError> {
        if dim < 2 {
            return Err(FockError::InvalidDimension(dim));
        }
        if n >= dim {
            return Err(FockError::LevelOutOfRange { level: n, dim });
        }
        let mut entries = Array2::zeros((dim, dim));
        entries[(n, n)] = Complex64::new(1.0, 0.0);
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[(i, i)].re).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.entries[(i, i)].re).collect()
    }

    /// Probability weight sitting in the top two Fock levels. Callers should
    /// keep this below ~1e-8 or enlarge the space; the untruncated problem
    /// lives in infinite dimensions and this is the observable error.
    pub fn leakage(&self) -> f64 {
        self.entries[(self.dim - 1, self.dim - 1)].re + self.entries[(self.dim - 2, self.dim - 2)].re
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest eigenvalue; for a valid state this is >= -PSD_SLACK.
    pub fn min_eigenvalue(&self) -> f64 {
        crate::linalg::hermitian_eigenvalues(&self.entries)[0]
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut worst = 0.0f64;
        for (a, b) in self.entries.iter().zip(rhs.entries.iter()) {
            worst = worst.max((a - b).norm());
        }
        worst
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.mapv(|z| z * c),
        }
    }
}

/// Lowering, raising, and number operators on a truncated space:
/// `<n-1|a|n> = sqrt(n)`.
pub fn ladder_ops(dim: usize) -> Result<(FockOperator, FockOperator, FockOperator), FockError> {
    if dim < 2 {
        return Err(FockError::InvalidDimension(dim));
    }
    let mut a = FockOperator::zeros(dim)?;
    for n in 1..dim {
        a.entries[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    let a_dagger = a.adjoint();
    let number = a_dagger.matmul(&a)?;
    Ok((a, a_dagger, number))
}

/// Susskind-Glogower exponential phase operators
/// `E_- = (n+1)^(-1/2) a` and `E_+ = adjoint(E_-)`.
#[derive(Debug, Clone)]
pub struct ExponentialPhaseOps {
    pub e_minus: FockOperator,
    pub e_plus: FockOperator,
}

impl ExponentialPhaseOps {
    pub fn new(dim: usize) -> Result<Self, FockError> {
        let (a, _, _) = ladder_ops(dim)?;
        let scale = FockOperator::from_diagonal_fn(dim, |n| {
            Complex64::new(1.0 / ((n + 1) as f64).sqrt(), 0.0)
        })?;
        let e_minus = scale.matmul(&a)?;
        let e_plus = e_minus.adjoint();
        Ok(Self { e_minus, e_plus })
    }
}

/// Diagonal nonlinearity F(n) applied on both sides of the jump.
#[derive(Debug, Clone)]
pub struct DiagonalF {
    values: Vec<f64>,
    beta: Option<f64>,
}

impl DiagonalF {
    /// F == 1 recovers the plain `gamma a rho a^dagger` jump.
    pub fn ones(dim: usize) -> Self {
        Self {
            values: vec![1.0; dim],
            beta: None,
        }
    }

    /// F(n) = (n+1)^(-beta).
    pub fn power_law(dim: usize, beta: f64) -> Self {
        Self {
            values: (0..dim).map(|n| ((n + 1) as f64).powf(-beta)).collect(),
            beta: Some(beta),
        }
    }

    pub fn from_values(values: Vec<f64>) -> Self {
        Self { values, beta: None }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, n: usize) -> f64 {
        self.values[n]
    }

    pub fn beta(&self) -> Option<f64> {
        self.beta
    }
}

/// Parameters of a diagonal quantum jump
/// `J rho = gamma * F(n) a rho a^dagger F(n)`, optionally keeping only the
/// diagonal part of the result.
#[derive(Debug, Clone)]
pub struct JumpSpec {
    pub gamma: f64,
    pub f: DiagonalF,
    pub diagonal_only: bool,
}

/// Apply the jump super-operator to a state.
pub fn apply_jump(spec: &JumpSpec, rho: &DensityMatrix) -> Result<DensityMatrix, FockError> {
    let dim = rho.dim();
    if spec.f.len() != dim {
        return Err(FockError::DimensionMismatch {
            left: spec.f.len(),
            right: dim,
        });
    }
    let (a, _, _) = ladder_ops(dim)?;
    // F(n) a rho a^dagger F(n): scale rows/columns of a rho a^dagger
    let core = a.sandwich(rho)?;
    let mut out = Array2::<Complex64>::zeros((dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            if spec.diagonal_only && i != j {
                continue;
            }
            out[(i, j)] = core.entries[(i, j)] * (spec.gamma * spec.f.value(i) * spec.f.value(j));
        }
    }
    Ok(DensityMatrix::from_parts(dim, out))
}

/// Zero the off-diagonal part of a square complex matrix.
pub fn diag_part(x: &Array2<Complex64>) -> Array2<Complex64> {
    let mut out = Array2::zeros(x.raw_dim());
    for i in 0..x.nrows().min(x.ncols()) {
        out[(i, i)] = x[(i, i)];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::{Rng, SeedableRng};

    #[test]
    fn ladder_dim2() {
        let (a, _, _) = ladder_ops(2).unwrap();
        assert_eq!(a.get(0, 1), Complex64::new(1.0, 0.0));
        assert_eq!(a.get(0, 0), Complex64::new(0.0, 0.0));
        assert_eq!(a.get(1, 0), Complex64::new(0.0, 0.0));
        assert_eq!(a.get(1, 1), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn ladder_sqrt_rule_dim4() {
        let (a, _, _) = ladder_ops(4).unwrap();
        assert!((a.get(2, 3).re - 3.0f64.sqrt()).abs() < 1e-15);
        assert!((a.get(2, 3).re - 1.7320508).abs() < 1e-7);
    }

    #[test]
    fn number_operator_dim3() {
        let (_, _, n) = ladder_ops(3).unwrap();
        for k in 0..3 {
            assert!((n.get(k, k).re - k as f64).abs() < 1e-15);
        }
    }

    #[test]
    fn ladder_rejects_dim1() {
        assert!(matches!(ladder_ops(1), Err(FockError::InvalidDimension(1))));
    }

    #[test]
    fn adjoint_involution() {
        let (a, _, _) = ladder_ops(6).unwrap();
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn jump_annihilates_vacuum() {
        let rho = DensityMatrix::fock_state(4, 0).unwrap();
        let spec = JumpSpec {
            gamma: 1.0,
            f: DiagonalF::power_law(4, 0.5),
            diagonal_only: false,
        };
        let out = apply_jump(&spec, &rho).unwrap();
        assert!(out.trace().abs() < 1e-15);
    }

    #[test]
    fn jump_single_photon() {
        let rho = DensityMatrix::fock_state(4, 1).unwrap();
        let spec = JumpSpec {
            gamma: 1.0,
            f: DiagonalF::ones(4),
            diagonal_only: false,
        };
        let out = apply_jump(&spec, &rho).unwrap();
        let expect = DensityMatrix::fock_state(4, 0).unwrap();
        assert!(out.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn e_model_removes_one_photon_at_unit_rate() {
        // |n><n| with F(n) = (n+1)^(-1/2) lands exactly on |n-1><n-1|:
        // the E-model photon removal rate is independent of n.
        for n in 1..7 {
            let rho = DensityMatrix::fock_state(8, n).unwrap();
            let spec = JumpSpec {
                gamma: 1.0,
                f: DiagonalF::power_law(8, 0.5),
                diagonal_only: false,
            };
            let out = apply_jump(&spec, &rho).unwrap();
            let expect = DensityMatrix::fock_state(8, n - 1).unwrap();
            assert!(out.max_abs_diff(&expect) < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn jump_with_unit_f_equals_plain_sandwich() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let rho = random_psd(&mut rng, 6);
        let gamma = 1.7;
        let spec = JumpSpec {
            gamma,
            f: DiagonalF::ones(6),
            diagonal_only: false,
        };
        let via_jump = apply_jump(&spec, &rho).unwrap();
        let (a, _, _) = ladder_ops(6).unwrap();
        let direct = a.sandwich(&rho).unwrap().scale(gamma);
        assert!(via_jump.max_abs_diff(&direct) < 1e-14);
    }

    #[test]
    fn diag_part_identity_and_mixed() {
        let id = Array2::<Complex64>::eye(3);
        assert_eq!(diag_part(&id), id);
        let x = array![
            [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            [Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0)]
        ];
        let d = diag_part(&x);
        assert_eq!(d[(0, 0)].re, 1.0);
        assert_eq!(d[(1, 1)].re, 4.0);
        assert_eq!(d[(0, 1)].norm(), 0.0);
        assert_eq!(d[(1, 0)].norm(), 0.0);
    }

    #[test]
    fn diag_part_preserves_trace_and_hermiticity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let rho = random_psd(&mut rng, 5);
        let d = diag_part(rho.matrix());
        let dm = DensityMatrix::from_parts(5, d);
        assert!(dm.is_hermitian(1e-15));
        assert!((dm.trace() - rho.trace()).abs() < 1e-13);
    }

    fn random_psd(rng: &mut rand_chacha::ChaCha8Rng, dim: usize) -> DensityMatrix {
        // G G^dagger normalized to unit trace is hermitian PSD
        let mut g = Array2::<Complex64>::zeros((dim, dim));
        for i in 0..dim {
            for j in 0..dim {
                g[(i, j)] = Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
            }
        }
        let m = g.dot(&g.t().mapv(|z| z.conj()));
        let trace: f64 = (0..dim).map(|i| m[(i, i)].re).sum();
        DensityMatrix::from_parts(dim, m.mapv(|z| z / trace))
    }

    #[test]
    fn sandwich_preserves_hermiticity_and_positivity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let rho = random_psd(&mut rng, 8);
            assert!(rho.min_eigenvalue() > -PSD_SLACK);
            let mut g = Array2::<Complex64>::zeros((8, 8));
            for i in 0..8 {
                for j in 0..8 {
                    g[(i, j)] =
                        Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                }
            }
            let gamma = FockOperator::from_matrix(g).unwrap();
            let out = gamma.sandwich(&rho).unwrap();
            assert!(out.is_hermitian(1e-12));
            assert!(out.min_eigenvalue() > -PSD_SLACK);
        }
    }

    #[test]
    fn jump_trace_counts_photons() {
        // trace(a rho a^dagger) = sum_n n rho_nn
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let rho = random_psd(&mut rng, 7);
            let (a, _, _) = ladder_ops(7).unwrap();
            let jumped = a.sandwich(&rho).unwrap();
            let direct: f64 = rho
                .diagonal()
                .iter()
                .enumerate()
                .map(|(n, p)| n as f64 * p)
                .sum();
            assert!((jumped.trace() - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn phase_operator_identities() {
        let dim = 9;
        let ops = ExponentialPhaseOps::new(dim).unwrap();
        let em_ep = ops.e_minus.matmul(&ops.e_plus).unwrap();
        let ep_em = ops.e_plus.matmul(&ops.e_minus).unwrap();
        // E- E+ = 1 and E+ E- = 1 - |0><0| away from the truncation row
        for i in 0..dim - 1 {
            for j in 0..dim - 1 {
                let expect_1 = if i == j { 1.0 } else { 0.0 };
                assert!((em_ep.get(i, j).re - expect_1).abs() < 1e-14);
                let expect_2 = if i == j && i > 0 { 1.0 } else { 0.0 };
                assert!((ep_em.get(i, j).re - expect_2).abs() < 1e-14);
            }
        }
        // e_minus = (n+1)^(-1/2) a entrywise
        let (a, _, _) = ladder_ops(dim).unwrap();
        for n in 1..dim {
            let expect = a.get(n - 1, n).re / (n as f64).sqrt();
            assert!((ops.e_minus.get(n - 1, n).re - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn power_law_f_matches_definition() {
        let f = DiagonalF::power_law(12, 1.25);
        assert_eq!(f.beta(), Some(1.25));
        for n in 0..12 {
            let expect = ((n + 1) as f64).powf(-1.25);
            assert!(((f.value(n) - expect) / expect).abs() < 1e-14);
            assert!(f.value(n) >= 0.0);
        }
    }

    #[test]
    fn density_matrix_validation() {
        let bad = array![
            [Complex64::new(0.5, 0.0), Complex64::new(0.1, 0.2)],
            [Complex64::new(0.1, 0.2), Complex64::new(0.5, 0.0)]
        ];
        assert!(matches!(
            DensityMatrix::new(bad),
            Err(FockError::NotHermitian { .. })
        ));
        let zero = Array2::<Complex64>::zeros((2, 2));
        assert!(matches!(
            DensityMatrix::new(zero),
            Err(FockError::BadTrace { .. })
        ));
    }

    #[test]
    fn jump_dimension_mismatch() {
        let rho = DensityMatrix::fock_state(4, 1).unwrap();
        let spec = JumpSpec {
            gamma: 1.0,
            f: DiagonalF::ones(5),
            diagonal_only: false,
        };
        assert!(matches!(
            apply_jump(&spec, &rho),
            Err(FockError::DimensionMismatch { .. })
        ));
    }
}
