//! Two-level-atom detector model: damped Jaynes-Cummings dynamics, the
//! transition super-operator, the small-interval limit, and the
//! time-averaged coefficients f_mn with their closed analytic forms.

use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

use crate::fock::{DensityMatrix, FockError, FockOperator};
use crate::quad::{self, QuadError, QuadratureSpec};
use crate::util::sinc;

#[derive(Debug, Error)]
pub enum JcError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error("mode index must be >= 1, got {0}")]
    InvalidMode(usize),
    #[error("no-count envelope does not decay (rate {rate:e}); cannot truncate the time average")]
    NonDecayingEnvelope { rate: f64 },
}

/// Physical parameters of the damped Jaynes-Cummings detector.
///
/// Only the primaries are stored; every derived quantity is recomputed on
/// demand so it can never drift out of sync.
#[derive(Debug, Clone)]
pub struct JCParams {
    /// Field mode frequency (rad/time).
    pub omega: f64,
    /// Atomic transition frequency (rad/time).
    pub omega0: f64,
    /// Field-atom coupling; the phase enters only the transition operator.
    pub g: Complex64,
    /// Half the decay rate of the excited detector level: the sink term
    /// carries 2*lambda.
    pub lambda: f64,
}

impl JCParams {
    /// Resonant parameter set with |g| = 1: omega0 = omega and
    /// lambda = 2*chi.
    pub fn resonant(chi: f64, omega: f64) -> Self {
        Self {
            omega,
            omega0: omega,
            g: Complex64::new(1.0, 0.0),
            lambda: 2.0 * chi,
        }
    }

    pub fn g_abs(&self) -> f64 {
        self.g.norm()
    }

    /// chi = lambda / (2 |g|), the damping-to-coupling ratio.
    pub fn chi(&self) -> f64 {
        self.lambda / (2.0 * self.g_abs())
    }

    /// delta = (omega0 - omega - i lambda) / 2.
    pub fn delta(&self) -> Complex64 {
        Complex64::new(0.5 * (self.omega0 - self.omega), -0.5 * self.lambda)
    }

    fn delta_tilde(&self) -> Complex64 {
        self.delta() / self.g_abs()
    }

    /// B_n = sqrt(n + (delta/|g|)^2), principal branch. On resonance this is
    /// sqrt(n - chi^2): real above the critical mode, imaginary below.
    pub fn b_n(&self, n: usize) -> Complex64 {
        let dt = self.delta_tilde();
        (Complex64::new(n as f64, 0.0) + dt * dt).sqrt()
    }
}

/// C_n(t) = cos(|g| B_n t) and S_n(t) = sin(|g| B_n t)/B_n, with the
/// removable singularity at B_n = 0 replaced by its limit S_n = |g| t.
/// S_n is an even function of B_n, so the square-root branch is irrelevant.
pub fn cn_sn(n: usize, t: f64, p: &JCParams) -> (Complex64, Complex64) {
    let b = p.b_n(n);
    let z = b * (p.g_abs() * t);
    (z.cos(), sinc(z) * (p.g_abs() * t))
}

/// Non-unitary Jaynes-Cummings evolution operator on the joint
/// detector (x) field space.
///
/// Basis ordering: index = d * field_dim + n with d = 0 the atomic ground
/// state and d = 1 the excited state.
#[derive(Debug, Clone)]
pub struct JCEvolution {
    pub t: f64,
    pub field_dim: usize,
    u: Array2<Complex64>,
}

impl JCEvolution {
    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.u
    }

    pub fn joint_dim(&self) -> usize {
        2 * self.field_dim
    }
}

/// Assemble U(t) = exp(-i H_eff t) from its closed-form blocks.
pub fn jc_evolution(p: &JCParams, t: f64, field_dim: usize) -> Result<JCEvolution, JcError> {
    if field_dim < 2 {
        return Err(FockError::InvalidDimension(field_dim).into());
    }
    let dim = 2 * field_dim;
    let mut u = Array2::<Complex64>::zeros((dim, dim));
    let damp = (-0.5 * p.lambda * t).exp();
    let dt = p.delta_tilde();
    let phase = |half_sigma0: f64, n: f64| -> Complex64 {
        (Complex64::new(0.0, -1.0) * (p.omega * (half_sigma0 + n) * t)).exp()
    };
    let g_phase = p.g / p.g_abs();
    let idx = |d: usize, n: usize| d * field_dim + n;

    for n in 0..field_dim {
        let (c_n, s_n) = cn_sn(n, t, p);
        let (c_n1, s_n1) = cn_sn(n + 1, t, p);
        // ground-ground
        u[(idx(0, n), idx(0, n))] =
            phase(-0.5, n as f64) * (c_n + Complex64::new(0.0, 1.0) * dt * s_n) * damp;
        // excited-excited
        u[(idx(1, n), idx(1, n))] =
            phase(0.5, n as f64) * (c_n1 - Complex64::new(0.0, 1.0) * dt * s_n1) * damp;
        // |g,n> -> |e,n-1>
        if n >= 1 {
            u[(idx(1, n - 1), idx(0, n))] = phase(0.5, (n - 1) as f64)
                * (Complex64::new(0.0, -1.0) * g_phase * s_n * (n as f64).sqrt())
                * damp;
        }
        // |e,n> -> |g,n+1>
        if n + 1 < field_dim {
            u[(idx(0, n + 1), idx(1, n))] = phase(-0.5, (n + 1) as f64)
                * (Complex64::new(0.0, -1.0) * g_phase.conj() * s_n1 * ((n + 1) as f64).sqrt())
                * damp;
        }
    }
    Ok(JCEvolution { t, field_dim, u })
}

/// Effective Hamiltonian matrix on the joint space, same basis ordering as
/// [`jc_evolution`]. Used by the matrix-exponential cross-checks.
pub fn h_eff_matrix(p: &JCParams, field_dim: usize) -> Array2<Complex64> {
    let dim = 2 * field_dim;
    let mut h = Array2::<Complex64>::zeros((dim, dim));
    let idx = |d: usize, n: usize| d * field_dim + n;
    let half_w0 = Complex64::new(0.5 * p.omega0, -0.5 * p.lambda);
    let const_term = Complex64::new(0.0, -0.5 * p.lambda);
    for n in 0..field_dim {
        h[(idx(0, n), idx(0, n))] = -half_w0 + p.omega * n as f64 + const_term;
        h[(idx(1, n), idx(1, n))] = half_w0 + p.omega * n as f64 + const_term;
        // g a sigma_+ : |g,n> -> |e,n-1>
        if n >= 1 {
            h[(idx(1, n - 1), idx(0, n))] = p.g * (n as f64).sqrt();
            h[(idx(0, n), idx(1, n - 1))] = p.g.conj() * (n as f64).sqrt();
        }
    }
    h
}

/// Time-dependent transition operator
/// Gamma(t) = -i (g/|g|) exp(-lambda t/2 - i omega n t) S_{n+1}(t) a
/// acting on the field space.
pub fn transition_operator(p: &JCParams, t: f64, field_dim: usize) -> Result<FockOperator, JcError> {
    if field_dim < 2 {
        return Err(FockError::InvalidDimension(field_dim).into());
    }
    let damp = (-0.5 * p.lambda * t).exp();
    let g_phase = p.g / p.g_abs();
    let mut entries = Array2::<Complex64>::zeros((field_dim, field_dim));
    for n in 1..field_dim {
        let (_, s_n) = cn_sn(n, t, p);
        let phase = (Complex64::new(0.0, -1.0) * (p.omega * (n - 1) as f64 * t)).exp();
        entries[(n - 1, n)] =
            Complex64::new(0.0, -1.0) * g_phase * phase * s_n * (n as f64).sqrt() * damp;
    }
    Ok(FockOperator::from_matrix(entries)?)
}

/// Transition super-operator Xi(t) rho = 2 lambda Gamma(t) rho Gamma(t)^dag.
/// Its trace is the waiting density p(t).
pub fn transition_superop(p: &JCParams, t: f64, rho: &DensityMatrix) -> Result<DensityMatrix, JcError> {
    let gamma = transition_operator(p, t, rho.dim())?;
    Ok(gamma.sandwich(rho)?.scale(2.0 * p.lambda))
}

/// Small-interval jump with the free-field phases retained:
/// exp(-i omega n dt) [2 lambda (|g| dt)^2 a rho a^dag] exp(+i omega n dt).
#[derive(Debug, Clone)]
pub struct SdJump {
    pub rho: DensityMatrix,
    /// |g| dt sqrt(N_max + 1); the short-time replacement of sin by its
    /// argument is valid when this is much less than one.
    pub validity: f64,
}

pub fn small_dt_qjs(p: &JCParams, dt: f64, rho: &DensityMatrix) -> Result<SdJump, JcError> {
    let dim = rho.dim();
    let (a, _, _) = crate::fock::ladder_ops(dim)?;
    let core = a.sandwich(rho)?;
    let gamma_sd = 2.0 * p.lambda * (p.g_abs() * dt).powi(2);
    let mut out = Array2::<Complex64>::zeros((dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            let ph = (Complex64::new(0.0, -1.0) * (p.omega * dt * (i as f64 - j as f64))).exp();
            out[(i, j)] = core.get(i, j) * gamma_sd * ph;
        }
    }
    Ok(SdJump {
        rho: DensityMatrix::from_parts(dim, out),
        validity: p.g_abs() * dt * (dim as f64).sqrt(),
    })
}

/// gamma_SD = 2 lambda (|g| dt)^2.
pub fn gamma_sd(p: &JCParams, dt: f64) -> f64 {
    2.0 * p.lambda * (p.g_abs() * dt).powi(2)
}

/// e^{i omega (n-m) t - lambda t} S_m(t) S_n*(t), evaluated so that the
/// damping is fused into the hyperbolic growth of deeply overdamped modes:
/// sin(z_m) sin(conj(z_n)) e^{-lambda t} is expanded into four exponentials
/// whose real exponents are all bounded by -rate * t <= 0, where rate is
/// the envelope decay rate. The plain sinc product would overflow once
/// |Im z| passes ~700 even though the product itself decays.
fn fmn_integrand(p: &JCParams, m: usize, n: usize, upper: f64) -> impl Fn(f64) -> Complex64 + '_ {
    let delta_freq = p.omega * (n as f64 - m as f64);
    let lambda = p.lambda;
    let g = p.g_abs();
    let b_m = p.b_n(m);
    let b_nc = p.b_n(n).conj();
    let exp_form = g * upper * (b_m.im.abs() + b_nc.im.abs()) > 500.0;
    let p = p.clone();
    move |t: f64| {
        let phase = Complex64::new(0.0, delta_freq * t).exp();
        if exp_form {
            // both modes are deep in the overdamped regime here, so the
            // denominator is bounded away from zero
            let i = Complex64::new(0.0, 1.0);
            let zm = b_m * (g * t);
            let znc = b_nc * (g * t);
            let damp = Complex64::new(-lambda * t, 0.0);
            let sum = (damp + i * (zm - znc)).exp() + (damp - i * (zm - znc)).exp()
                - (damp + i * (zm + znc)).exp()
                - (damp - i * (zm + znc)).exp();
            phase * sum / (4.0 * b_m * b_nc)
        } else {
            let (_, s_m) = cn_sn(m, t, &p);
            let (_, s_n) = cn_sn(n, t, &p);
            phase * (-lambda * t).exp() * s_m * s_n.conj()
        }
    }
}

fn fmn_spec(p: &JCParams, m: usize, n: usize) -> QuadratureSpec {
    let hint =
        (p.omega * (n as f64 - m as f64)).abs() + p.g_abs() * (p.b_n(m).re.abs() + p.b_n(n).re.abs());
    let diagonal = m == n;
    QuadratureSpec {
        rel_tol: if diagonal { 1e-10 } else { 1e-9 },
        abs_tol: if diagonal { 1e-18 } else { 1e-12 },
        max_subdivisions: 50_000,
        oscillation_frequency_hint: hint,
    }
}

/// Decay rate of the no-count envelope of the (m, n) integrand.
fn envelope_rate(p: &JCParams, m: usize, n: usize) -> f64 {
    p.lambda - p.g_abs() * (p.b_n(m).im.abs() + p.b_n(n).im.abs())
}

/// Time-averaged coefficient
/// `f_mn = (2 lambda / T) Int e^{i omega t (n-m) - lambda t} S_m(t) S_n*(t) dt`.
///
/// The upper limit is extended past T to the point where the damping
/// envelope has fallen below 1e-16 of its scale, so the result carries only
/// an O(e^{-lambda T}) neglected-window mismatch (reported separately by the
/// table builders as `tail_bound`). The conjugate on S_n makes
/// f_mn = conj(f_nm) hold exactly, which the averaged jump needs in order to
/// map hermitian states to hermitian states; on resonance with both modes
/// oscillatory, S is real and the conjugate is a no-op.
pub fn fmn(p: &JCParams, t_window: f64, m: usize, n: usize) -> Result<Complex64, JcError> {
    if m < 1 {
        return Err(JcError::InvalidMode(m));
    }
    if n < 1 {
        return Err(JcError::InvalidMode(n));
    }
    let rate = envelope_rate(p, m, n);
    if rate <= 0.0 {
        return Err(JcError::NonDecayingEnvelope { rate });
    }
    let upper = 47.0 / rate;
    let spec = fmn_spec(p, m, n);
    let r = quad::integrate_checked(fmn_integrand(p, m, n, upper), 0.0, upper, &spec)?;
    Ok(r.value * (2.0 * p.lambda / t_window))
}

/// Same integrand as [`fmn`] but integrated on the finite window [0, T]
/// exactly as averaged. Used to study the finite-window (plateau) behaviour
/// that the interpolation formula approximates.
pub fn fmn_windowed(p: &JCParams, t_window: f64, m: usize, n: usize) -> Result<Complex64, JcError> {
    if m < 1 {
        return Err(JcError::InvalidMode(m));
    }
    if n < 1 {
        return Err(JcError::InvalidMode(n));
    }
    let spec = fmn_spec(p, m, n);
    let r = quad::integrate_checked(fmn_integrand(p, m, n, t_window), 0.0, t_window, &spec)?;
    Ok(r.value * (2.0 * p.lambda / t_window))
}

/// Exact diagonal law f_nn = 1/(n T), independent of lambda and chi.
pub fn fnn_exact(n: usize, t_window: f64) -> f64 {
    1.0 / (n as f64 * t_window)
}

/// Finite-window interpolation
/// `f_nn = (T n)^-1 {1 - exp[-lambda T n / (2 chi^2)]}`,
/// valid for n/chi^2 << 1 and lambda T >> 1. Saturates to 1/(nT) for large
/// exponent and flattens into the n-independent plateau
/// lambda/(2 chi^2 T) for small exponent.
#[derive(Debug, Clone, Copy)]
pub struct InterpValue {
    pub value: f64,
    /// The saturation exponent lambda T n / (2 chi^2).
    pub exponent: f64,
    /// Regime ratio n / chi^2; the formula assumes this is small.
    pub n_over_chi2: f64,
}

pub fn fnn_interp(n: usize, t_window: f64, p: &JCParams) -> InterpValue {
    let chi2 = p.chi() * p.chi();
    let exponent = p.lambda * t_window * n as f64 / (2.0 * chi2);
    InterpValue {
        value: (1.0 - (-exponent).exp()) / (n as f64 * t_window),
        exponent,
        n_over_chi2: n as f64 / chi2,
    }
}
