//! Small shared numeric helpers.

use num_complex::Complex64;

/// sin(z)/z with the removable singularity handled by series.
pub(crate) fn sinc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        Complex64::new(1.0, 0.0) - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Run an indexed map, in parallel when the `parallel` feature is enabled.
/// Results are collected by index, so the outcome is identical to the
/// sequential path regardless of scheduling.
pub(crate) fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], kept unconditionally for benchmarks.
pub(crate) fn map_indexed_seq<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_at_zero_and_small() {
        assert_eq!(sinc(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
        // series and direct branch agree near the crossover
        let z = Complex64::new(2e-4, 1e-5);
        let direct = z.sin() / z;
        assert!((sinc(z * 0.49) - (z * 0.49).sin() / (z * 0.49)).norm() < 1e-15);
        assert!((sinc(z) - direct).norm() < 1e-15);
    }

    #[test]
    fn sinc_imaginary_is_sinh_ratio() {
        // sin(ix)/(ix) = sinh(x)/x
        let x = 0.8;
        let z = Complex64::new(0.0, x);
        let expect = x.sinh() / x;
        assert!((sinc(z).re - expect).abs() < 1e-14);
        assert!(sinc(z).im.abs() < 1e-15);
    }

    #[test]
    fn map_variants_agree() {
        let a = map_indexed(100, |i| i * i);
        let b = map_indexed_seq(100, |i| i * i);
        assert_eq!(a, b);
    }
}
