//! Harmonic-oscillator detector model: su(1,1)-factorized evolution, the
//! transition operator, the diagonal coefficient integrals in all three
//! damping regimes, their closed forms, and the saddle-point asymptotics.

use ndarray::Array2;
use num_complex::Complex64;
use thiserror::Error;

use crate::fock::{FockError, FockOperator};
use crate::quad::{self, log_factorial, QuadError, QuadratureSpec};
use crate::util::sinc;

const CRITICAL_WINDOW: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum OscError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error("mode index must be >= 1, got {0}")]
    InvalidMode(usize),
    #[error("factorization is singular at t = {t}: |Upsilon| = {upsilon_abs:e}")]
    SingularFactorization { t: f64, upsilon_abs: f64 },
    #[error("off-diagonal coefficients are only defined in the underdamped regime (chi = {chi})")]
    UnsupportedRegime { chi: f64 },
    #[error("coefficient integrals require omega_a == omega_b (detuning {detuning:e})")]
    Detuned { detuning: f64 },
    #[error(
        "saddle-point form invalid for n = {n} <= n* ~ 4 chi^2 exp(-lambda T) = {n_star:.3} (approximate threshold)"
    )]
    RegimeViolation { n: usize, n_star: f64 },
}

/// Damping regime classified by chi = lambda/(2|g|), with a 1e-6 window
/// around the critical point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Sub,
    Critical,
    Super,
}

/// Physical parameters of the damped two-oscillator detector.
#[derive(Debug, Clone)]
pub struct OscParams {
    /// Field mode frequency.
    pub omega_a: f64,
    /// Detector mode frequency.
    pub omega_b: f64,
    /// Mode-mode coupling.
    pub g: Complex64,
    /// Half the detector decay rate.
    pub lambda: f64,
}

impl OscParams {
    /// Resonant parameter set with |g| = 1.
    pub fn resonant(chi: f64, omega: f64) -> Self {
        Self {
            omega_a: omega,
            omega_b: omega,
            g: Complex64::new(1.0, 0.0),
            lambda: 2.0 * chi,
        }
    }

    pub fn g_abs(&self) -> f64 {
        self.g.norm()
    }

    pub fn chi(&self) -> f64 {
        self.lambda / (2.0 * self.g_abs())
    }

    pub fn regime(&self) -> Regime {
        let chi = self.chi();
        if chi < 1.0 - CRITICAL_WINDOW {
            Regime::Sub
        } else if chi > 1.0 + CRITICAL_WINDOW {
            Regime::Super
        } else {
            Regime::Critical
        }
    }

    /// xi = chi / sqrt(1 - chi^2), underdamped regime.
    pub fn xi(&self) -> f64 {
        let chi = self.chi();
        chi / (1.0 - chi * chi).sqrt()
    }

    /// zeta = chi / sqrt(chi^2 - 1), overdamped regime.
    pub fn zeta(&self) -> f64 {
        let chi = self.chi();
        chi / (chi * chi - 1.0).sqrt()
    }

    /// omega_bar = omega / (|g| sqrt(1 - chi^2)), the oscillation frequency
    /// of the off-diagonal phase factor per unit of the scaled time z.
    pub fn omega_bar(&self) -> f64 {
        let chi = self.chi();
        self.omega_a / (self.g_abs() * (1.0 - chi * chi).sqrt())
    }

    /// omega_ba = omega_b - omega_a - i lambda.
    pub fn omega_ba(&self) -> Complex64 {
        Complex64::new(self.omega_b - self.omega_a, -self.lambda)
    }

    /// eta = sqrt(|g|^2 + omega_ba^2 / 4).
    pub fn eta(&self) -> Complex64 {
        let oba = self.omega_ba();
        (Complex64::new(self.g_abs() * self.g_abs(), 0.0) + oba * oba * 0.25).sqrt()
    }

    /// eta0 = sqrt(|g|^2 - lambda^2/4): real when chi < 1, imaginary when
    /// chi > 1.
    pub fn eta0(&self) -> Complex64 {
        Complex64::new(self.g_abs() * self.g_abs() - 0.25 * self.lambda * self.lambda, 0.0).sqrt()
    }

    /// Omega = omega_b + omega_a - i lambda.
    pub fn omega_big(&self) -> Complex64 {
        Complex64::new(self.omega_b + self.omega_a, -self.lambda)
    }

    fn detuning(&self) -> f64 {
        (self.omega_b - self.omega_a).abs()
    }
}

/// Upsilon(t) = cos(eta t) + i [omega_ba/(2 eta)] sin(eta t), evaluated
/// without dividing by eta. On resonance this is real in the underdamped
/// regime and has isolated zeros where the disentangling breaks down.
pub fn upsilon(p: &OscParams, t: f64) -> Complex64 {
    let eta = p.eta();
    let z = eta * t;
    z.cos() + Complex64::new(0.0, 1.0) * p.omega_ba() * 0.5 * t * sinc(z)
}

/// The entire combination W(t) = A(t) Upsilon(t) = -i g* sin(eta t)/eta.
/// Unlike A itself, W is regular at the zeros of Upsilon.
fn w_amplitude(p: &OscParams, t: f64) -> Complex64 {
    let z = p.eta() * t;
    Complex64::new(0.0, -1.0) * p.g.conj() * t * sinc(z)
}

/// Disentangled evolution coefficients at time t.
#[derive(Debug, Clone)]
pub struct Su11Coefficients {
    pub t: f64,
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub upsilon: Complex64,
}

/// Coefficients of U(t) = e^{-i Omega t N} e^{A K+} e^{B K0} e^{C K-}.
///
/// B = -2 ln Upsilon with the argument unwound continuously in t from 0.
/// When Upsilon crosses zero on the real axis (resonant underdamped case)
/// the accumulated argument jumps by +pi; any integer power of Upsilon --
/// which is all the evolution operator ever uses -- is independent of that
/// convention.
pub fn su11_coefficients(p: &OscParams, t: f64) -> Result<Su11Coefficients, OscError> {
    let ups = upsilon(p, t);
    if ups.norm() < 1e-14 {
        return Err(OscError::SingularFactorization {
            t,
            upsilon_abs: ups.norm(),
        });
    }
    let w = w_amplitude(p, t);
    let a = w / ups;
    let c = Complex64::new(0.0, 1.0) * p.g * t * sinc(p.eta() * t) / ups;

    // unwind arg(Upsilon) along [0, t]
    let rate = p.eta().norm() + p.omega_ba().norm();
    let steps = ((rate * t / 0.5).ceil() as usize).max(1);
    let mut arg = 0.0;
    let mut prev = Complex64::new(1.0, 0.0); // Upsilon(0)
    for k in 1..=steps {
        let tk = t * k as f64 / steps as f64;
        let cur = upsilon(p, tk);
        arg += (cur / prev).arg();
        prev = cur;
    }
    let b = Complex64::new(-2.0 * ups.norm().ln(), -2.0 * arg);

    Ok(Su11Coefficients {
        t,
        a,
        b,
        c,
        upsilon: ups,
    })
}

/// Dense evolution matrix on the joint detector (x) field space, assembled
/// from the factorized form. Basis ordering: index = n_b * dim_a + n_a.
///
/// The generators conserve the total photon number, so the assembly is
/// exact on every complete total-number block of the truncated space.
pub fn su11_evolution_matrix(
    p: &OscParams,
    t: f64,
    dim_b: usize,
    dim_a: usize,
) -> Result<Array2<Complex64>, OscError> {
    let coeffs = su11_coefficients(p, t)?;
    let dim = dim_b * dim_a;
    let idx = |nb: usize, na: usize| nb * dim_a + na;

    let mut k_plus = Array2::<Complex64>::zeros((dim, dim));
    let mut k_minus = Array2::<Complex64>::zeros((dim, dim));
    for nb in 0..dim_b {
        for na in 0..dim_a {
            // K+ = b^dag a : |nb, na> -> sqrt(nb+1) sqrt(na) |nb+1, na-1>
            if na >= 1 && nb + 1 < dim_b {
                k_plus[(idx(nb + 1, na - 1), idx(nb, na))] =
                    Complex64::new(((nb + 1) as f64).sqrt() * (na as f64).sqrt(), 0.0);
            }
            // K- = -b a^dag : |nb, na> -> -sqrt(nb) sqrt(na+1) |nb-1, na+1>
            if nb >= 1 && na + 1 < dim_a {
                k_minus[(idx(nb - 1, na + 1), idx(nb, na))] =
                    Complex64::new(-((nb as f64).sqrt() * ((na + 1) as f64).sqrt()), 0.0);
            }
        }
    }

    // K+ and K- are nilpotent on the truncated space, so the exponentials
    // are exact finite sums.
    let nilpotent_exp = |m: &Array2<Complex64>, coeff: Complex64| -> Array2<Complex64> {
        let mut result = Array2::<Complex64>::eye(dim);
        let mut term = Array2::<Complex64>::eye(dim);
        for j in 1..=dim_a.max(dim_b) {
            term = term.dot(m).mapv(|z| z * (coeff / j as f64));
            let norm: f64 = term.iter().map(|z| z.norm()).sum();
            result = &result + &term;
            if norm == 0.0 {
                break;
            }
        }
        result
    };

    let e_plus = nilpotent_exp(&k_plus, coeffs.a);
    let e_minus = nilpotent_exp(&k_minus, coeffs.c);

    let mut u = e_plus;
    // e^{B K0} = Upsilon^{-(nb - na)} applied between the ladder factors
    for nb in 0..dim_b {
        for na in 0..dim_a {
            let col = idx(nb, na);
            let factor = coeffs.upsilon.powi(-(nb as i32 - na as i32));
            for row in 0..dim {
                u[(row, col)] *= factor;
            }
        }
    }
    let u = u.dot(&e_minus);

    // left diagonal phase e^{-i Omega t N}
    let omega_big = p.omega_big();
    let mut out = u;
    for nb in 0..dim_b {
        for na in 0..dim_a {
            let row = idx(nb, na);
            let ph = (Complex64::new(0.0, -0.5) * omega_big * t * (nb + na) as f64).exp();
            for col in 0..dim {
                out[(row, col)] *= ph;
            }
        }
    }
    Ok(out)
}

/// Effective Hamiltonian on the joint space (same basis ordering as
/// [`su11_evolution_matrix`]) for the matrix-exponential cross-check.
pub fn h_eff_matrix(p: &OscParams, dim_b: usize, dim_a: usize) -> Array2<Complex64> {
    let dim = dim_b * dim_a;
    let idx = |nb: usize, na: usize| nb * dim_a + na;
    let mut h = Array2::<Complex64>::zeros((dim, dim));
    for nb in 0..dim_b {
        for na in 0..dim_a {
            h[(idx(nb, na), idx(nb, na))] = Complex64::new(p.omega_b * nb as f64, 0.0)
                + Complex64::new(0.0, -p.lambda * nb as f64)
                + Complex64::new(p.omega_a * na as f64, 0.0);
            // g b a^dag : |nb, na> -> g sqrt(nb) sqrt(na+1) |nb-1, na+1>
            if nb >= 1 && na + 1 < dim_a {
                h[(idx(nb - 1, na + 1), idx(nb, na))] =
                    p.g * ((nb as f64).sqrt() * ((na + 1) as f64).sqrt());
            }
            // g* b^dag a : |nb, na> -> g* sqrt(nb+1) sqrt(na) |nb+1, na-1>
            if na >= 1 && nb + 1 < dim_b {
                h[(idx(nb + 1, na - 1), idx(nb, na))] =
                    p.g.conj() * (((nb + 1) as f64).sqrt() * (na as f64).sqrt());
            }
        }
    }
    h
}

/// Field-space transition operator for a detector starting in its ground
/// state: `<n-1| Gamma(t) |n> = W(t) Upsilon(t)^(n-1) e^{-i Omega t n / 2} sqrt(n)`.
///
/// Evaluated through W = A Upsilon, so it stays regular at the zeros of
/// Upsilon where the raw factorization coefficients blow up.
pub fn transition_operator(p: &OscParams, t: f64, field_dim: usize) -> Result<FockOperator, OscError> {
    if field_dim < 2 {
        return Err(FockError::InvalidDimension(field_dim).into());
    }
    let w = w_amplitude(p, t);
    let ups = upsilon(p, t);
    let omega_big = p.omega_big();
    let mut entries = Array2::<Complex64>::zeros((field_dim, field_dim));
    for n in 1..field_dim {
        let phase = (Complex64::new(0.0, -0.5) * omega_big * t * n as f64).exp();
        entries[(n - 1, n)] = w * ups.powi(n as i32 - 1) * phase * (n as f64).sqrt();
    }
    Ok(FockOperator::from_matrix(entries)?)
}

/// Waiting-density weight of Fock level n:
/// `2 lambda n |W|^2 |Upsilon|^(2n-2) e^{-lambda n t}`; the waiting density
/// of a diagonal state is the rho_nn-weighted sum of these.
pub fn waiting_weight(p: &OscParams, t: f64, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let w2 = w_amplitude(p, t).norm_sqr();
    let u2 = upsilon(p, t).norm_sqr();
    2.0 * p.lambda * n as f64 * w2 * u2.powi(n as i32 - 1) * (-p.lambda * n as f64 * t).exp()
}

/// sign * exp(power * ln|base|) with 0^0 = 1.
fn signed_pow(base: f64, power: i32) -> f64 {
    if power == 0 {
        return 1.0;
    }
    if base == 0.0 {
        return 0.0;
    }
    let sign = if base < 0.0 && power % 2 != 0 { -1.0 } else { 1.0 };
    sign * (power as f64 * base.abs().ln()).exp()
}

fn check_resonant(p: &OscParams) -> Result<(), OscError> {
    let det = p.detuning();
    if det > 1e-9 * p.omega_a.abs().max(1.0) {
        return Err(OscError::Detuned { detuning: det });
    }
    Ok(())
}

/// Diagonal (and, in the underdamped regime, off-diagonal) time-averaged
/// coefficients of the oscillator detector, by quadrature of the scaled-time
/// integral with the finite upper limit set by lambda T.
///
/// Underdamped: prefactor `4 chi / (T (1-chi^2)^{3/2})`, integrand
/// `[cos z + xi sin z]^{m+n-2} sin^2 z exp[i omega_bar z (n-m) - xi z (m+n)]`
/// on [0, lambda T / (2 xi)].
/// Critical (|chi - 1| <= 1e-6): `4/T Int y^2 (1+y)^{2n-2} e^{-2ny} dy` on
/// [0, lambda T / 2], diagonal only.
/// Overdamped: prefactor `4 chi / (T (chi^2-1)^{3/2})`, integrand
/// `[cosh z + zeta sinh z]^{2n-2} sinh^2 z e^{-2 n zeta z}` on
/// [0, lambda T / (2 zeta)], diagonal only.
pub fn fnn_integral(p: &OscParams, t_window: f64, m: usize, n: usize) -> Result<Complex64, OscError> {
    if m < 1 {
        return Err(OscError::InvalidMode(m));
    }
    if n < 1 {
        return Err(OscError::InvalidMode(n));
    }
    check_resonant(p)?;
    let chi = p.chi();
    let lambda_t = p.lambda * t_window;
    let diagonal = m == n;

    let spec = |hint: f64| QuadratureSpec {
        rel_tol: if diagonal { 1e-10 } else { 1e-9 },
        abs_tol: if diagonal { 1e-18 } else { 1e-12 },
        max_subdivisions: 50_000,
        oscillation_frequency_hint: hint,
    };

    match p.regime() {
        Regime::Sub => {
            let xi = p.xi();
            let omega_bar = p.omega_bar();
            let z_max = lambda_t / (2.0 * xi);
            let power = (m + n) as i32 - 2;
            let damp = xi * (m + n) as f64;
            let freq = omega_bar * (n as f64 - m as f64);
            let f = move |z: f64| -> Complex64 {
                let envelope = z.sin().powi(2)
                    * signed_pow(z.cos() + xi * z.sin(), power)
                    * (-damp * z).exp();
                Complex64::new(0.0, freq * z).exp() * envelope
            };
            // past the first few damped humps the integrand is below any
            // tolerance; cut there rather than paying for the whole window
            let decay_per_period = damp * std::f64::consts::PI;
            let periods = (47.0 / decay_per_period).ceil() + 2.0;
            let upper = z_max.min(std::f64::consts::PI * periods);
            let hint = freq.abs().max(2.0);
            let r = quad::integrate_checked(f, 0.0, upper, &spec(hint))?;
            let pref = 4.0 * chi / (t_window * (1.0 - chi * chi).powf(1.5));
            Ok(r.value * pref)
        }
        Regime::Critical => {
            if !diagonal {
                return Err(OscError::UnsupportedRegime { chi });
            }
            let nf = n as f64;
            let f = move |y: f64| -> f64 {
                if y <= 0.0 {
                    return 0.0;
                }
                (2.0 * y.ln() + (2.0 * nf - 2.0) * y.ln_1p() - 2.0 * nf * y).exp()
            };
            let r = quad::integrate_real(f, 0.0, 0.5 * lambda_t, &spec(0.0))?;
            if !r.converged {
                return Err(QuadError::NoConvergence {
                    error_estimate: r.error_estimate,
                    subdivisions: r.subdivisions_used,
                }
                .into());
            }
            Ok(Complex64::new(4.0 / t_window * r.value.re, 0.0))
        }
        Regime::Super => {
            if !diagonal {
                return Err(OscError::UnsupportedRegime { chi });
            }
            let zeta = p.zeta();
            let nf = n as f64;
            let y_max = lambda_t / (2.0 * zeta);
            let f = move |z: f64| -> f64 {
                if z <= 0.0 {
                    return 0.0;
                }
                let sh = z.sinh();
                let base = z.cosh() + zeta * sh;
                (2.0 * sh.ln() + (2.0 * nf - 2.0) * base.ln() - 2.0 * nf * zeta * z).exp()
            };
            let r = quad::integrate_real(f, 0.0, y_max, &spec(0.0))?;
            if !r.converged {
                return Err(QuadError::NoConvergence {
                    error_estimate: r.error_estimate,
                    subdivisions: r.subdivisions_used,
                }
                .into());
            }
            let pref = 4.0 * chi / (t_window * (chi * chi - 1.0).powf(1.5));
            Ok(Complex64::new(pref * r.value.re, 0.0))
        }
    }
}

/// Closed form for chi << 1: `f_nn = 4 (2n-2)! / (T (2^n n!)^2)`, with its
/// Stirling approximant `(T sqrt(pi n^5))^{-1}`.
#[derive(Debug, Clone, Copy)]
pub struct SmallChiForm {
    pub exact: f64,
    pub stirling: f64,
}

pub fn fnn_small_chi(n: usize, t_window: f64) -> Result<SmallChiForm, OscError> {
    if n < 1 {
        return Err(OscError::InvalidMode(n));
    }
    let nf = n as f64;
    let ln_exact = (4.0f64).ln() + log_factorial(2 * n as u64 - 2)
        - 2.0 * (nf * (2.0f64).ln() + log_factorial(n as u64))
        - t_window.ln();
    Ok(SmallChiForm {
        exact: ln_exact.exp(),
        stirling: 1.0 / (t_window * (std::f64::consts::PI * nf.powi(5)).sqrt()),
    })
}

/// Saddle diagnostics accompanying the steepest-descent value.
#[derive(Debug, Clone)]
pub enum SaddleData {
    /// Underdamped: maxima at z_k = +-z0 + k pi with a common second
    /// derivative; the k-sum is carried out in closed form (the coth
    /// factor), but the first few exp[G(z_k)] are reported.
    Sub {
        mu: f64,
        z0: f64,
        second_derivative: f64,
        saddle_values: Vec<f64>,
    },
    /// Critical point: single maximum of the y-integrand at y* = n^{-1/2}.
    Critical {
        y_star: f64,
        second_derivative: f64,
        saddle_value: f64,
    },
    /// Overdamped: single maximum at z_max = atanh(nu).
    Super {
        nu: f64,
        z_max: f64,
        second_derivative: f64,
        saddle_value: f64,
    },
}

impl SaddleData {
    pub fn second_derivative(&self) -> f64 {
        match self {
            SaddleData::Sub {
                second_derivative, ..
            }
            | SaddleData::Critical {
                second_derivative, ..
            }
            | SaddleData::Super {
                second_derivative, ..
            } => *second_derivative,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SteepestDescent {
    pub value: f64,
    pub saddle: SaddleData,
}

fn ln_coth(x: f64) -> f64 {
    if x > 20.0 {
        0.0
    } else {
        (1.0 / x.tanh()).ln()
    }
}

/// Saddle-point (steepest-descent) closed form for the diagonal
/// coefficients, continuous through chi = 1.
///
/// Underdamped:
/// `f_nn = chi sqrt(8 pi) (1+xi mu)^{2n-3/2} e^{-2 z0 xi n} coth(xi n pi)
///         / [T sqrt(n) (n + chi^2 - 1) (1+mu^2)^n]`,
/// mu = (xi^2 n + n - 1)^{-1/2}, z0 = atan(mu). At n = 1 this reduces to
/// `T f_11 = 4 chi sqrt(pi) coth(pi xi) exp[-2 xi atan(1/xi)]`.
///
/// Overdamped:
/// `f_nn = chi sqrt(8 pi) (1+zeta nu)^{2n-3/2} (1-nu)^{n(zeta-1)}
///         / [T sqrt(n) (n + chi^2 - 1) (1+nu)^{n(zeta+1)}]`,
/// nu = [(zeta^2-1) n + 1]^{-1/2}, z_max = atanh(nu); valid only above the
/// plateau crossover n* ~ 4 chi^2 e^{-lambda T}.
///
/// In the 1e-6 window around chi = 1 both branches degenerate to their
/// common limit
/// `f_nn = sqrt(8 pi) (1+n^{-1/2})^{2n-3/2} e^{-2 sqrt(n)} / (T n^{3/2})`.
pub fn fnn_steepest_descent(
    p: &OscParams,
    n: usize,
    t_window: f64,
) -> Result<SteepestDescent, OscError> {
    if n < 1 {
        return Err(OscError::InvalidMode(n));
    }
    let chi = p.chi();
    let nf = n as f64;
    let ln_8pi_half = 0.5 * (8.0 * std::f64::consts::PI).ln();

    match p.regime() {
        Regime::Sub => {
            let xi = p.xi();
            let mu = 1.0 / (xi * xi * nf + nf - 1.0).sqrt();
            let z0 = mu.atan();
            let ln_val = chi.ln() + ln_8pi_half + (2.0 * nf - 1.5) * mu.mul_add(xi, 0.0).ln_1p()
                - 2.0 * z0 * xi * nf
                + ln_coth(xi * nf * std::f64::consts::PI)
                - t_window.ln()
                - 0.5 * nf.ln()
                - (nf + chi * chi - 1.0).ln()
                - nf * (mu * mu).ln_1p();
            let second_derivative = -4.0 * nf * (xi * xi + 1.0) / (1.0 + xi * mu);
            let ln_g0 = 2.0 * mu.ln() + (2.0 * nf - 2.0) * (xi * mu).ln_1p()
                - nf * (mu * mu).ln_1p()
                - 2.0 * z0 * xi * nf;
            let saddle_values = (0..3)
                .map(|k| (ln_g0 - 2.0 * xi * std::f64::consts::PI * nf * k as f64).exp())
                .collect();
            Ok(SteepestDescent {
                value: ln_val.exp(),
                saddle: SaddleData::Sub {
                    mu,
                    z0,
                    second_derivative,
                    saddle_values,
                },
            })
        }
        Regime::Critical => {
            let root = nf.sqrt();
            let ln_val = ln_8pi_half + (2.0 * nf - 1.5) * (1.0 / root).ln_1p() - 2.0 * root
                - t_window.ln()
                - 1.5 * nf.ln();
            let y_star = 1.0 / root;
            let second_derivative = -2.0 * nf - (2.0 * nf - 2.0) / (1.0 + y_star).powi(2);
            let saddle_value =
                (-nf.ln() + (2.0 * nf - 2.0) * y_star.ln_1p() - 2.0 * root).exp();
            Ok(SteepestDescent {
                value: ln_val.exp(),
                saddle: SaddleData::Critical {
                    y_star,
                    second_derivative,
                    saddle_value,
                },
            })
        }
        Regime::Super => {
            let n_star = 4.0 * chi * chi * (-p.lambda * t_window).exp();
            if nf <= n_star {
                return Err(OscError::RegimeViolation { n, n_star });
            }
            let zeta = p.zeta();
            let nu = 1.0 / ((zeta * zeta - 1.0) * nf + 1.0).sqrt();
            let z_max = nu.atanh();
            let ln_val = chi.ln() + ln_8pi_half + (2.0 * nf - 1.5) * (zeta * nu).ln_1p()
                + nf * (zeta - 1.0) * (-nu).ln_1p()
                - nf * (zeta + 1.0) * nu.ln_1p()
                - t_window.ln()
                - 0.5 * nf.ln()
                - (nf + chi * chi - 1.0).ln();
            let second_derivative = -4.0 * nf * (zeta * zeta - 1.0) / (1.0 + zeta * nu);
            let ln_g = 2.0 * nu.ln() - (1.0 - nu * nu).ln()
                + (2.0 * nf - 2.0) * ((zeta * nu).ln_1p() - 0.5 * (1.0 - nu * nu).ln())
                + nf * zeta * ((-nu).ln_1p() - nu.ln_1p());
            Ok(SteepestDescent {
                value: ln_val.exp(),
                saddle: SaddleData::Super {
                    nu,
                    z_max,
                    second_derivative,
                    saddle_value: ln_g.exp(),
                },
            })
        }
    }
}

/// Asymptotic nonlinearity classes of the derived jump super-operator,
/// `F(n) = (n+1)^{-beta}` with the n-independent prefactor gamma (reported
/// per unit 1/T).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticRegime {
    /// chi << 1.
    SmallChi,
    /// chi of order one or larger (with n >> chi^2).
    OrderOneOrAbove,
}

#[derive(Debug, Clone, Copy)]
pub struct BetaLaw {
    pub beta: f64,
    /// gamma as a multiple of 1/T.
    pub gamma_coeff: f64,
}

pub fn asymptotic_beta(regime: AsymptoticRegime, chi: f64) -> BetaLaw {
    match regime {
        AsymptoticRegime::SmallChi => BetaLaw {
            beta: 1.25,
            gamma_coeff: 1.0 / std::f64::consts::PI.sqrt(),
        },
        AsymptoticRegime::OrderOneOrAbove => BetaLaw {
            beta: 0.75,
            gamma_coeff: chi * (8.0 * std::f64::consts::PI).sqrt() / std::f64::consts::E,
        },
    }
}

/// Ratio of the saddle-point small-chi prefactor gamma' = (eT)^{-1} sqrt(8/pi)
/// to the Stirling prefactor gamma_5 = (T sqrt(pi))^{-1}: sqrt(8)/e ~ 1.04.
pub fn stirling_prefactor_ratio() -> f64 {
    8.0f64.sqrt() / std::f64::consts::E
}
