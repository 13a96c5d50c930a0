use num_complex::Complex;

use super::{bin_spacing_for, ComplexSequence, Spectrum};
use crate::{Error, Real, Result};

/// Quadratic-time DFT: the product of the N×N kernel matrix
/// `W[k][n] = exp(-2πi·nk/N)` with the input, streamed one row at a time.
///
/// Accepts any length N ≥ 1. Matrix entries are looked up from the N distinct
/// roots of unity by `(n·k) mod N`, so no entry suffers the phase error of
/// evaluating `exp` at a large angle.
pub fn dft_naive<T: Real>(x: &ComplexSequence<T>) -> Result<Spectrum<T>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let roots = roots_of_unity::<T>(n, -1.0);
    let bins = (0..n)
        .map(|k| {
            let mut acc = Complex::new(T::zero(), T::zero());
            let mut idx = 0usize;
            for sample in &x.samples {
                acc += *sample * roots[idx];
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            acc
        })
        .collect();
    Ok(Spectrum {
        bins,
        bin_spacing: bin_spacing_for(n, x.sample_interval),
    })
}

/// `exp(sign · 2πi·j/n)` for `j` in `0..n`.
pub(super) fn roots_of_unity<T: Real>(n: usize, sign: f64) -> Vec<Complex<T>> {
    (0..n)
        .map(|j| {
            let angle = sign * std::f64::consts::TAU * j as f64 / n as f64;
            Complex::new(T::of(angle.cos()), T::of(angle.sin()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(re: &[f64]) -> ComplexSequence<f64> {
        ComplexSequence::from_real(re)
    }

    fn assert_close(got: &[Complex<f64>], want: &[Complex<f64>], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (k, (g, w)) in got.iter().zip(want).enumerate() {
            assert!((g - w).norm() <= tol, "bin {k}: {g} vs {w}");
        }
    }

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn impulse_is_flat() {
        let out = dft_naive(&seq(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_close(&out.bins, &[c(1.0, 0.0); 4], 1e-15);
    }

    #[test]
    fn constant_is_dc_spike() {
        let out = dft_naive(&seq(&[1.0; 4])).unwrap();
        assert_close(&out.bins, &[c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 1e-15);
    }

    #[test]
    fn cosine_bin_one_of_eight() {
        let x: Vec<f64> = (0..8).map(|n| (std::f64::consts::TAU * n as f64 / 8.0).cos()).collect();
        let out = dft_naive(&seq(&x)).unwrap();
        let mut want = [c(0.0, 0.0); 8];
        want[1] = c(4.0, 0.0);
        want[7] = c(4.0, 0.0);
        assert_close(&out.bins, &want, 1e-12);
    }

    #[test]
    fn odd_lengths_are_supported() {
        let out = dft_naive(&seq(&[1.0, 2.0, 3.0])).unwrap();
        // hand-evaluated: F0 = 6, F1 = -1.5 + i·√3/2, F2 = conj(F1)
        let h = 3f64.sqrt() / 2.0;
        assert_close(&out.bins, &[c(6.0, 0.0), c(-1.5, h), c(-1.5, -h)], 1e-12);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(dft_naive(&seq(&[])), Err(Error::EmptyInput)));
    }

    #[test]
    fn bin_spacing_follows_sample_interval() {
        let x = seq(&[0.0; 8]).with_sample_interval(0.5);
        assert_eq!(dft_naive(&x).unwrap().bin_spacing, Some(0.25));
    }
}
