//! Independent reference implementations used by the validation suite.
//!
//! Nothing here is on any production code path: the dense trapezoid rule
//! cross-checks the adaptive integrator, and the scaling-and-squaring matrix
//! exponential cross-checks the closed-form evolution operators.

use ndarray::Array2;
use num_complex::Complex64;

/// Dense-grid trapezoid rule with compensated summation.
pub fn trapezoid<F>(f: F, lo: f64, hi: f64, points: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    assert!(points >= 2);
    let h = (hi - lo) / (points - 1) as f64;
    let mut sum = 0.5 * (f(lo) + f(hi));
    let mut comp = 0.0;
    for k in 1..points - 1 {
        let x = lo + k as f64 * h;
        let y = f(x) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum * h
}

/// Complex trapezoid rule.
pub fn trapezoid_complex<F>(f: F, lo: f64, hi: f64, points: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(points >= 2);
    let h = (hi - lo) / (points - 1) as f64;
    let mut sum = (f(lo) + f(hi)) * 0.5;
    for k in 1..points - 1 {
        sum += f(lo + k as f64 * h);
    }
    sum * h
}

fn one_norm(a: &Array2<Complex64>) -> f64 {
    let mut best = 0.0f64;
    for col in a.columns() {
        let s: f64 = col.iter().map(|z| z.norm()).sum();
        best = best.max(s);
    }
    best
}

/// Matrix exponential by scaling and squaring with a Taylor kernel.
///
/// The argument is scaled so its 1-norm is below 1/2, the series is summed to
/// machine precision, and the result is squared back up.
pub fn expm(a: &Array2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm requires a square matrix");
    let norm = one_norm(a);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scale = 0.5f64.powi(squarings as i32);
    let scaled = a.mapv(|z| z * scale);

    let mut result = Array2::<Complex64>::eye(n);
    let mut term = Array2::<Complex64>::eye(n);
    for k in 1..=24 {
        term = term.dot(&scaled) / Complex64::new(k as f64, 0.0);
        result = &result + &term;
        if one_norm(&term) < 1e-18 * one_norm(&result).max(1.0) {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.dot(&result);
    }
    result
}
