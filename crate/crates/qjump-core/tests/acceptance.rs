//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test -p qjump-core --test acceptance -- --nocapture` to
//! see the lines for passing criteria too).
//!
//! Criteria 3, 4, and 5 contain sub-checks whose target tolerances the
//! closed-form approximations measurably cannot meet at the pinned
//! parameters; they are asserted anyway and fail honestly. The measured
//! values and the analysis behind each gap are pinned by module-level
//! regression tests (see the inline comments at the failing checks).

use std::time::Instant;

use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qjump_core::fock::DensityMatrix;
use qjump_core::jc::{self, JCParams};
use qjump_core::linalg;
use qjump_core::oracle;
use qjump_core::oscillator::{self, OscParams};
use qjump_core::quad;
use qjump_core::table::CoefficientTable;
use qjump_core::trajectories::{self, DetectorModel, TrajectoryConfig};

struct Criterion {
    id: u32,
    name: &'static str,
    start: Instant,
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Self {
            id,
            name,
            start: Instant::now(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail);
        }
    }

    fn finish(mut self, runtime_limit: Option<f64>) {
        let secs = self.start.elapsed().as_secs_f64();
        if let Some(limit) = runtime_limit {
            self.check(
                secs < limit,
                format!("runtime {secs:.1} s exceeds the {limit:.0} s budget"),
            );
        }
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {:02} [{}] {} ({:.1} s, {} checks, {} failed)",
            self.id,
            self.name,
            status,
            secs,
            self.checks,
            self.failures.len()
        );
        for f in &self.failures {
            println!("    - {f}");
        }
        assert!(
            self.failures.is_empty(),
            "criterion {:02} [{}]: {} of {} checks failed",
            self.id,
            self.name,
            self.failures.len(),
            self.checks
        );
    }
}

/// Resonant two-level parameters at the given chi, lambda T (with T = 1)
/// and omega/|g| ratio.
fn jc_params(chi: f64, lambda_t: f64, omega_over_g: f64) -> JCParams {
    let lambda = lambda_t;
    let g = lambda / (2.0 * chi);
    JCParams {
        omega: omega_over_g * g,
        omega0: omega_over_g * g,
        g: Complex64::new(g, 0.0),
        lambda,
    }
}

fn osc_params(chi: f64, lambda_t: f64) -> OscParams {
    let lambda = lambda_t;
    let g = lambda / (2.0 * chi);
    OscParams {
        omega_a: 1000.0 * g,
        omega_b: 1000.0 * g,
        g: Complex64::new(g, 0.0),
        lambda,
    }
}

#[test]
fn criterion_01_jc_exact_law() {
    let mut c = Criterion::new(1, "jc-exact-law");
    let t_window = 1.0;
    for &chi in &[0.2f64, 0.5, 2.0] {
        let p = jc_params(chi, 20.0, 1e3);
        for n in 1..=50usize {
            let f = jc::fmn(&p, t_window, n, n).unwrap();
            let tnf = t_window * n as f64 * f.re;
            c.check(
                (tnf - 1.0).abs() < 0.01,
                format!("chi = {chi}, n = {n}: |T n f_nn - 1| = {:.2e}", (tnf - 1.0).abs()),
            );
        }
    }
    c.finish(Some(30.0));
}

#[test]
fn criterion_02_oscillator_universal_point() {
    let mut c = Criterion::new(2, "oscillator-universal-point");
    let t_window = 1.0;
    for &chi in &[0.1f64, 0.5, 1.0, 2.0, 5.0] {
        // lambda T >= 15, scaled up with chi^2 so the scaled-time window
        // lambda T/(2 zeta) actually contains the integrand
        let lambda_t = (15.0f64).max(12.0 * chi * chi);
        let p = osc_params(chi, lambda_t);
        let f = oscillator::fnn_integral(&p, t_window, 1, 1).unwrap();
        let tf = t_window * f.re;
        c.check(
            (tf - 1.0).abs() < 0.005,
            format!("chi = {chi} (lambda T = {lambda_t}): T f_11 = {tf:.5}"),
        );
    }
    c.finish(Some(10.0));
}

#[test]
fn criterion_03_figure_1_2_reproduction() {
    let mut c = Criterion::new(3, "figure-1-2-reproduction");
    let t_window = 1.0;
    let lambda_t = 10.0;

    // Figure 1 families: monotone decreasing in n
    for &chi in &[0.1f64, 0.3, 0.5, 0.8, 1.1] {
        let p = osc_params(chi, lambda_t);
        let mut prev = f64::INFINITY;
        let mut monotone = true;
        for n in 1..=60usize {
            let f = oscillator::fnn_integral(&p, t_window, n, n).unwrap().re;
            if f > prev {
                monotone = false;
            }
            prev = f;
        }
        c.check(monotone, format!("fig1 chi = {chi}: f_nn(n) not monotone decreasing"));
    }

    // Figure 2 families
    let chis = [5.0f64, 10.0, 20.0, 40.0, 70.0];
    let sparse_n = [1usize, 2, 3, 4, 5, 8, 12, 20, 35, 60, 100, 200, 300];
    let mut plateau_heights = Vec::new();
    for &chi in &chis {
        let p = osc_params(chi, lambda_t);
        let values: Vec<f64> = sparse_n
            .iter()
            .map(|&n| oscillator::fnn_integral(&p, t_window, n, n).unwrap().re)
            .collect();
        let monotone = values.windows(2).all(|w| w[1] <= w[0]);
        c.check(monotone, format!("fig2 chi = {chi}: f_nn(n) not monotone decreasing"));

        // plateau flatness over n in [1, 5]; quantified at chi = 40 (at
        // chi = 5 the exponent lambda T n/(2 chi^2) = 0.2 n is not yet
        // small and even the interpolation formula varies ~30% there)
        if chi == 40.0 {
            let plateau = &values[..5];
            let lo = plateau.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = plateau.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            c.check(
                (hi - lo) / hi < 0.10,
                format!("fig2 chi = {chi}: plateau varies {:.1}%", 100.0 * (hi - lo) / hi),
            );
        }

        // plateau height vs the interpolation formula, within 5%.
        // Known defect: the printed formula keeps only the leading order in
        // 1/(lambda T); the true ratio is 1 - 3/(2 lambda T) ~ 0.85 here.
        let interp = (1.0 - (-lambda_t / (2.0 * chi * chi)).exp()) / t_window;
        let ratio = values[0] / interp;
        c.check(
            (ratio - 1.0).abs() < 0.05,
            format!("fig2 chi = {chi}: plateau height / interp = {ratio:.4} (outside 5%)"),
        );
        plateau_heights.push(values[0] * chi * chi);
    }

    // chi^-2 scaling of plateau heights across the list, within 10%
    let mean: f64 = plateau_heights.iter().sum::<f64>() / plateau_heights.len() as f64;
    for (&chi, &scaled) in chis.iter().zip(&plateau_heights) {
        c.check(
            (scaled / mean - 1.0).abs() < 0.10,
            format!("chi = {chi}: plateau * chi^2 deviates {:.1}% from mean", 100.0 * (scaled / mean - 1.0).abs()),
        );
    }
    c.finish(Some(120.0));
}

#[test]
fn criterion_04_figure_3_reproduction() {
    let mut c = Criterion::new(4, "figure-3-reproduction");
    let t_window = 1.0;
    let lambda_t = 10.0;
    // Known defect: the Gaussian-peak error of Eqs. (59)/(63) does not
    // decay with n and exceeds 5% at chi = 3 (n = 20) and chi = 4
    // (n <= 40); those cells fail honestly.
    for &chi in &[0.5f64, 1.1, 2.0, 3.0, 4.0] {
        let p = osc_params(chi, lambda_t);
        for &n in &[20usize, 30, 40, 60, 100, 200, 300] {
            let numeric = oscillator::fnn_integral(&p, t_window, n, n).unwrap().re;
            let analytic = oscillator::fnn_steepest_descent(&p, n, t_window)
                .unwrap()
                .value;
            let er = (numeric - analytic) / numeric;
            c.check(
                er.abs() < 0.05,
                format!("chi = {chi}, n = {n}: Er = {er:+.3}"),
            );
        }
    }
    c.finish(Some(120.0));
}

#[test]
fn criterion_05_power_law_exponents() {
    let mut c = Criterion::new(5, "power-law-exponents");
    let t_window = 1.0;

    let jc_table =
        CoefficientTable::build_jc_diagonal(&jc_params(0.5, 20.0, 1e3), t_window, 300).unwrap();
    let fit = jc_table.fit_power_law(50, 300).unwrap();
    c.check(
        (fit.slope + 1.0).abs() < 0.02,
        format!("jc slope = {:.4}, expected -1.00 +- 0.02", fit.slope),
    );
    c.check(
        (fit.implied_beta() - 0.5).abs() < 0.01,
        format!("jc implied beta = {:.4}", fit.implied_beta()),
    );

    // Known defect: at chi = 0.05 the fit window [50, 300] lies beyond the
    // coth crossover n ~ 1/(pi xi) ~ 6, where the diagonal already falls
    // as n^{-3/2}; the stated -2.50 gate cannot be met there (the beta=5/4
    // law holds at chi ~ 1e-4, pinned by a module test).
    let t005 =
        CoefficientTable::build_osc_diagonal(&osc_params(0.05, 20.0), t_window, 300).unwrap();
    let fit = t005.fit_power_law(50, 300).unwrap();
    c.check(
        (fit.slope + 2.5).abs() < 0.05,
        format!("osc chi = 0.05 slope = {:.4}, expected -2.50 +- 0.05", fit.slope),
    );

    // Known defect: the n^{-3/2} law carries an O(n^{-1/2}) correction that
    // biases the [50, 300] fit to -1.434 (the saddle form gives -1.425 over
    // the same window); outside the stated +-0.05.
    let t2 = CoefficientTable::build_osc_diagonal(&osc_params(2.0, 10.0), t_window, 300).unwrap();
    let fit = t2.fit_power_law(50, 300).unwrap();
    c.check(
        (fit.slope + 1.5).abs() < 0.05,
        format!("osc chi = 2 slope = {:.4}, expected -1.50 +- 0.05", fit.slope),
    );
    c.finish(Some(180.0));
}

#[test]
fn criterion_06_stirling_prefactor() {
    let mut c = Criterion::new(6, "stirling-prefactor");
    let form = oscillator::fnn_small_chi(200, 1.0).unwrap();
    let ratio = form.exact / form.stirling;
    c.check(
        (0.97..=1.03).contains(&ratio),
        format!("exact/Stirling at n = 200: {ratio:.5}"),
    );
    let gamma_ratio = oscillator::stirling_prefactor_ratio();
    c.check(
        (gamma_ratio / 1.04 - 1.0).abs() < 0.01,
        format!("gamma'/gamma_5 = {gamma_ratio:.5}, expected ~1.04"),
    );
    c.finish(None);
}

#[test]
fn criterion_07_special_function_identities() {
    let mut c = Criterion::new(7, "special-function-identities");
    let t_window = 1.0;
    let p = osc_params(1.0, 30.0);
    for n in 1..=50usize {
        let quad_val = oscillator::fnn_integral(&p, t_window, n, n).unwrap().re;
        let psi = 8.0 / t_window * quad::tricomi_psi_3(n as u64).unwrap();
        let rel = (quad_val / psi - 1.0).abs();
        c.check(
            rel < 1e-6,
            format!("n = {n}: (8/T) Psi vs quadrature rel err {rel:.2e}"),
        );
    }
    for n in [2u64, 3, 4] {
        let integral = quad::tricomi_psi_3(n).unwrap();
        let laguerre = quad::tricomi_psi_3_laguerre(n).unwrap();
        let rel = (integral / laguerre - 1.0).abs();
        c.check(
            rel < 1e-8,
            format!("Laguerre identity n = {n}: rel err {rel:.2e}"),
        );
    }
    c.finish(None);
}

#[test]
fn criterion_08_critical_point_continuity() {
    let mut c = Criterion::new(8, "critical-point-continuity");
    let t_window = 1.0;
    for &n in &[10usize, 50] {
        let below = oscillator::fnn_steepest_descent(&osc_params(1.0 - 1e-4, 10.0), n, t_window)
            .unwrap()
            .value;
        let above = oscillator::fnn_steepest_descent(&osc_params(1.0 + 1e-4, 10.0), n, t_window)
            .unwrap()
            .value;
        let rel = (below / above - 1.0).abs();
        c.check(
            rel < 1e-3,
            format!("saddle branches at chi = 1 +- 1e-4, n = {n}: rel {rel:.2e}"),
        );
        let q_below = oscillator::fnn_integral(&osc_params(1.0 - 1e-4, 10.0), t_window, n, n)
            .unwrap()
            .re;
        let q_above = oscillator::fnn_integral(&osc_params(1.0 + 1e-4, 10.0), t_window, n, n)
            .unwrap()
            .re;
        let rel = (q_below / q_above - 1.0).abs();
        c.check(
            rel < 1e-3,
            format!("quadrature across chi = 1 +- 1e-4, n = {n}: rel {rel:.2e}"),
        );
    }
    c.finish(None);
}

#[test]
fn criterion_09_off_diagonal_suppression() {
    let mut c = Criterion::new(9, "off-diagonal-suppression");
    let t_window = 15.0;
    let chi = 0.5;
    {
        let p = JCParams::resonant(chi, 1000.0);
        let f21 = jc::fmn(&p, t_window, 2, 1).unwrap().norm();
        let f11 = jc::fmn(&p, t_window, 1, 1).unwrap().re;
        let bound = 10.0 * p.lambda / p.omega;
        c.check(
            f21 / f11 <= bound,
            format!("jc |f21|/f11 = {:.2e} > {bound:.2e}", f21 / f11),
        );
    }
    {
        let p = OscParams::resonant(chi, 1000.0);
        let f21 = oscillator::fnn_integral(&p, t_window, 2, 1).unwrap().norm();
        let f11 = oscillator::fnn_integral(&p, t_window, 1, 1).unwrap().re;
        let bound = 10.0 * p.lambda / p.omega_a;
        c.check(
            f21 / f11 <= bound,
            format!("osc |f21|/f11 = {:.2e} > {bound:.2e}", f21 / f11),
        );
    }
    c.finish(None);
}

fn max_block_deviation(
    u: &Array2<Complex64>,
    v: &Array2<Complex64>,
    dim_b: usize,
    dim_a: usize,
    max_total: usize,
) -> f64 {
    let mut worst = 0.0f64;
    for nb in 0..dim_b {
        for na in 0..dim_a {
            for mb in 0..dim_b {
                for ma in 0..dim_a {
                    if nb + na > max_total || mb + ma > max_total {
                        continue;
                    }
                    let (i, j) = (nb * dim_a + na, mb * dim_a + ma);
                    worst = worst.max((u[(i, j)] - v[(i, j)]).norm());
                }
            }
        }
    }
    worst
}

#[test]
fn criterion_10_factorization_oracle() {
    let mut c = Criterion::new(10, "factorization-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acce597);

    // su(1,1) assembly vs dense matrix exponential, 20 samples
    let mut done = 0;
    while done < 20 {
        let omega_a = 1.0 + 8.0 * rng.random::<f64>();
        let detuned = done % 2 == 1;
        let p = OscParams {
            omega_a,
            omega_b: if detuned { omega_a + rng.random::<f64>() } else { omega_a },
            g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
            lambda: 0.05 + rng.random::<f64>(),
        };
        let t = 0.1 + 2.0 * rng.random::<f64>();
        let u = match oscillator::su11_evolution_matrix(&p, t, 4, 4) {
            Ok(u) => u,
            Err(_) => continue,
        };
        let h = oscillator::h_eff_matrix(&p, 4, 4).mapv(|z| z * Complex64::new(0.0, -t));
        let dev = max_block_deviation(&u, &oracle::expm(&h), 4, 4, 3);
        c.check(
            dev < 1e-9,
            format!("su(1,1) sample {done}: max deviation {dev:.2e}"),
        );
        done += 1;
    }

    // Jaynes-Cummings closed-form blocks vs dense matrix exponential
    for k in 0..20 {
        let p = JCParams {
            omega: 1.0 + 20.0 * rng.random::<f64>(),
            omega0: 1.0 + 20.0 * rng.random::<f64>(),
            g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
            lambda: 0.05 + rng.random::<f64>(),
        };
        let t = 2.0 * rng.random::<f64>();
        let field_dim = 5;
        let ev = jc::jc_evolution(&p, t, field_dim).unwrap();
        let h = jc::h_eff_matrix(&p, field_dim).mapv(|z| z * Complex64::new(0.0, -t));
        let u_ref = oracle::expm(&h);
        let top = 2 * field_dim - 1;
        let mut worst = 0.0f64;
        for i in 0..2 * field_dim {
            for j in 0..2 * field_dim {
                if i == top || j == top {
                    continue;
                }
                worst = worst.max((ev.matrix()[(i, j)] - u_ref[(i, j)]).norm());
            }
        }
        c.check(worst < 1e-9, format!("jc sample {k}: max deviation {worst:.2e}"));
    }

    // contraction on 100 random damped samples (both models)
    let mut contraction_ok = true;
    for k in 0..100 {
        if k % 2 == 0 {
            let p = JCParams {
                omega: 1.0 + 30.0 * rng.random::<f64>(),
                omega0: 1.0 + 30.0 * rng.random::<f64>(),
                g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                lambda: 0.05 + 2.0 * rng.random::<f64>(),
            };
            let t = rng.random::<f64>() * 10.0 / p.lambda;
            let ev = jc::jc_evolution(&p, t, 6).unwrap();
            let sv = linalg::singular_values(ev.matrix());
            contraction_ok &= sv[0] <= 1.0 + 1e-10;
        } else {
            let omega_a = 1.0 + 8.0 * rng.random::<f64>();
            let p = OscParams {
                omega_a,
                omega_b: omega_a + 0.3 * (rng.random::<f64>() - 0.5),
                g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                lambda: 0.05 + 2.0 * rng.random::<f64>(),
            };
            let t = rng.random::<f64>() * 10.0 / p.lambda;
            if let Ok(u) = oscillator::su11_evolution_matrix(&p, t, 4, 4) {
                let sv = linalg::singular_values(&u);
                contraction_ok &= sv[0] <= 1.0 + 1e-10;
            }
        }
    }
    c.check(contraction_ok, "contraction violated on a random sample".into());

    // lossless evolution unitary away from the truncation edge,
    // 100 random samples
    let mut unitary_ok = true;
    for k in 0..100 {
        let t = 3.0 * rng.random::<f64>();
        if k % 2 == 0 {
            let p = JCParams {
                omega: 1.0 + 20.0 * rng.random::<f64>(),
                omega0: 1.0 + 20.0 * rng.random::<f64>(),
                g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                lambda: 0.0,
            };
            let field_dim = 6;
            let ev = jc::jc_evolution(&p, t, field_dim).unwrap();
            let u = ev.matrix();
            let udag_u = u.t().mapv(|z| z.conj()).dot(u);
            let top = 2 * field_dim - 1;
            for i in 0..top {
                for j in 0..top {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    unitary_ok &=
                        (udag_u[(i, j)] - Complex64::new(expect, 0.0)).norm() < 1e-12;
                }
            }
        } else {
            let omega_a = 1.0 + 8.0 * rng.random::<f64>();
            let p = OscParams {
                omega_a,
                omega_b: omega_a,
                g: Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
                lambda: 0.0,
            };
            let (dim_b, dim_a) = (5usize, 5usize);
            let u = match oscillator::su11_evolution_matrix(&p, t, dim_b, dim_a) {
                Ok(u) => u,
                Err(_) => continue,
            };
            let udag_u = u.t().mapv(|z| z.conj()).dot(&u);
            for nb in 0..dim_b {
                for na in 0..dim_a {
                    for mb in 0..dim_b {
                        for ma in 0..dim_a {
                            if nb + na >= dim_a || mb + ma >= dim_a {
                                continue;
                            }
                            let (i, j) = (nb * dim_a + na, mb * dim_a + ma);
                            let expect = if i == j { 1.0 } else { 0.0 };
                            unitary_ok &=
                                (udag_u[(i, j)] - Complex64::new(expect, 0.0)).norm() < 1e-12;
                        }
                    }
                }
            }
        }
    }
    c.check(unitary_ok, "lossless evolution not unitary inside truncation".into());
    c.finish(None);
}

#[test]
fn criterion_11_trajectory_validation() {
    let mut c = Criterion::new(11, "trajectory-validation");

    // JC |5>, chi = 0.5, lambda T = 10
    {
        let p = JCParams::resonant(0.5, 100.0);
        let t_window = 10.0 / p.lambda;
        let cfg = TrajectoryConfig::new(
            DetectorModel::Jc(p.clone()),
            t_window,
            DensityMatrix::fock_state(8, 5).unwrap(),
            100_000,
            0x5eed,
        );
        let ens = trajectories::sample_first_jumps(&cfg).unwrap();
        let rerun = trajectories::sample_first_jumps(&cfg).unwrap();
        let identical = ens
            .first_jump_times
            .iter()
            .zip(&rerun.first_jump_times)
            .all(|(a, b)| a.map(f64::to_bits) == b.map(f64::to_bits));
        c.check(identical, "jc rerun with the same seed differs".into());
        let emp = ens.empirical_fnn.unwrap();
        let reference = jc::fmn(&p, t_window, 5, 5).unwrap().re;
        let z = (emp.value - reference) / emp.std_error;
        c.check(
            z.abs() <= 3.0,
            format!("jc |5>: z = {z:.2} vs quadrature reference"),
        );
    }

    // oscillator |1>, chi = 0.3, lambda T = 15
    {
        let p = OscParams::resonant(0.3, 100.0);
        let t_window = 15.0 / p.lambda;
        let cfg = TrajectoryConfig::new(
            DetectorModel::Oscillator(p.clone()),
            t_window,
            DensityMatrix::fock_state(4, 1).unwrap(),
            100_000,
            0x5eed,
        );
        let ens = trajectories::sample_first_jumps(&cfg).unwrap();
        let emp = ens.empirical_fnn.unwrap();
        let reference = oscillator::fnn_integral(&p, t_window, 1, 1).unwrap().re;
        // when every trajectory jumps the empirical error degenerates; fall
        // back on the binomial error of the reference jump probability
        let p_ref = reference * t_window;
        let se_ref = (p_ref * (1.0 - p_ref) / 1e5).sqrt().max(1e-12) / t_window;
        let se = emp.std_error.max(se_ref);
        let z = (emp.value - reference) / se;
        c.check(
            z.abs() <= 3.0,
            format!("osc |1>: z = {z:.2} vs quadrature reference"),
        );
    }
    c.finish(Some(60.0));
}

#[test]
fn criterion_12_sd_limit() {
    let mut c = Criterion::new(12, "sd-limit");
    // chi is free here; pick it tiny so the linear lambda*dt term of the
    // ratio e^{-lambda dt} sinc^2(|g| B_n dt) is negligible against the
    // quadratic (|g| dt)^2 (n - chi^2)/3 term and the convergence is
    // cleanly quadratic.
    let p = JCParams::resonant(1e-7, 50.0);
    for n in 1..=5usize {
        let rho = DensityMatrix::fock_state(n + 3, n).unwrap();
        let mut errs = Vec::new();
        for scale in [1e-3, 5e-4, 2.5e-4] {
            let dt = scale / (p.g_abs() * ((n + 1) as f64).sqrt());
            let exact = jc::transition_superop(&p, dt, &rho).unwrap().trace();
            let sd = jc::small_dt_qjs(&p, dt, &rho).unwrap().rho.trace();
            errs.push((exact / sd - 1.0).abs());
        }
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            c.check(
                (3.5..=4.5).contains(&ratio),
                format!("n = {n}: halving dt shrank the error by {ratio:.2}, expected ~4"),
            );
        }
    }
    c.finish(None);
}
