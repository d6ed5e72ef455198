//! Minimal dense linear algebra for validation: hermitian eigenvalues and
//! singular values via cyclic Jacobi on the real symmetric embedding.
//!
//! The matrices involved never exceed a few hundred rows, so the O(n^3)
//! Jacobi sweep is plenty and avoids a LAPACK dependency.

use ndarray::Array2;
use num_complex::Complex64;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// ascending order.
fn symmetric_eigenvalues(mut a: Array2<f64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    if n == 1 {
        return vec![a[(0, 0)]];
    }
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off.sqrt() < 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Embed a hermitian complex matrix H = X + iY as the real symmetric
/// [[X, -Y], [Y, X]]; its spectrum is that of H with every eigenvalue
/// doubled.
fn real_embedding(h: &Array2<Complex64>) -> Array2<f64> {
    let n = h.nrows();
    let mut m = Array2::<f64>::zeros((2 * n, 2 * n));
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            m[(i, j)] = z.re;
            m[(i, j + n)] = -z.im;
            m[(i + n, j)] = z.im;
            m[(i + n, j + n)] = z.re;
        }
    }
    m
}

/// Eigenvalues of a hermitian complex matrix, ascending.
pub fn hermitian_eigenvalues(h: &Array2<Complex64>) -> Vec<f64> {
    let n = h.nrows();
    assert_eq!(n, h.ncols(), "hermitian_eigenvalues requires square input");
    let doubled = symmetric_eigenvalues(real_embedding(h));
    // each eigenvalue appears twice in the embedding; take every other one
    doubled.into_iter().step_by(2).take(n).collect()
}

/// Singular values (descending) of a general complex matrix, as square roots
/// of the eigenvalues of A^dagger A.
pub fn singular_values(a: &Array2<Complex64>) -> Vec<f64> {
    let ada = a.t().mapv(|z| z.conj()).dot(a);
    let mut sv: Vec<f64> = hermitian_eigenvalues(&ada)
        .into_iter()
        .map(|ev| ev.max(0.0).sqrt())
        .collect();
    sv.reverse();
    sv
}
