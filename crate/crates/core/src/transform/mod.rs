//! Discrete Fourier transforms.
//!
//! Sign and scale convention: the forward transform is unnormalized,
//!
//! ```text
//! F[k] = Σ_{n=0}^{N-1} x[n] · exp(-2πi·nk/N)
//! ```
//!
//! and the inverse carries the 1/N factor, so `ifft(fft(x)) == x`. Samples are
//! stored at indices `0..N`. Because the kernel is N-periodic in `n`, this is
//! bin-for-bin identical to summing over a window centred on zero
//! (`n = -N/2+1 ..= N/2`) with negative indices wrapped.
//!
//! [`dft_naive`] evaluates the transform as a dense matrix-vector product in
//! O(N²) for any length and is the reference that [`fft`] is checked against.

mod axis;
mod dft;
mod fft;

pub use axis::{frequency_axis, speedup_ratio, FrequencyAxis};
pub use dft::dft_naive;
pub use fft::{fft, ifft, FftPlan};

use num_complex::Complex;

use crate::Real;

/// Time-domain samples, optionally tagged with their spacing in seconds.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSequence<T> {
    pub samples: Vec<Complex<T>>,
    pub sample_interval: Option<T>,
}

impl<T: Real> ComplexSequence<T> {
    pub fn new(samples: Vec<Complex<T>>) -> Self {
        Self {
            samples,
            sample_interval: None,
        }
    }

    pub fn from_real(samples: &[T]) -> Self {
        Self::new(samples.iter().map(|&re| Complex::new(re, T::zero())).collect())
    }

    pub fn with_sample_interval(mut self, dt: T) -> Self {
        self.sample_interval = Some(dt);
        self
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Frequency-domain bins `F[0..N]`, optionally tagged with their spacing in Hz.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    pub bins: Vec<Complex<T>>,
    pub bin_spacing: Option<T>,
}

impl<T: Real> Spectrum<T> {
    pub fn new(bins: Vec<Complex<T>>) -> Self {
        Self {
            bins,
            bin_spacing: None,
        }
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn magnitudes(&self) -> Vec<T> {
        self.bins.iter().map(|c| c.norm()).collect()
    }
}

/// Δν = 1/(N·Δt), when the sequence carries a sample interval.
fn bin_spacing_for<T: Real>(n: usize, sample_interval: Option<T>) -> Option<T> {
    sample_interval.map(|dt| T::one() / (T::of_usize(n) * dt))
}
