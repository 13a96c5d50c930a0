use num_complex::Complex;

use super::dft::roots_of_unity;
use super::{bin_spacing_for, ComplexSequence, Spectrum};
use crate::{Error, Real, Result};

/// Precomputed twiddle factors and bit-reversal permutation for one
/// power-of-two length. A plan is immutable once built and can be shared
/// between threads.
#[derive(Clone, Debug)]
pub struct FftPlan<T> {
    len: usize,
    twiddles: Vec<Complex<T>>,
    bit_reverse: Vec<usize>,
}

impl<T: Real> FftPlan<T> {
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        if !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { len });
        }
        let bits = len.trailing_zeros();
        let bit_reverse = (0..len)
            .map(|i| {
                if bits == 0 {
                    0
                } else {
                    i.reverse_bits() >> (usize::BITS - bits)
                }
            })
            .collect();
        let mut twiddles = roots_of_unity::<T>(len, -1.0);
        twiddles.truncate(len / 2);
        Ok(Self {
            len,
            twiddles,
            bit_reverse,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Unnormalized forward transform, in place.
    pub fn forward(&self, data: &mut [Complex<T>]) -> Result<()> {
        self.check_len(data.len())?;
        self.permute(data);
        let n = self.len;
        let mut size = 2;
        while size <= n {
            let half = size / 2;
            let stride = n / size;
            for block in data.chunks_exact_mut(size) {
                let (lo, hi) = block.split_at_mut(half);
                for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                    let t = *b * self.twiddles[j * stride];
                    *b = *a - t;
                    *a += t;
                }
            }
            size *= 2;
        }
        Ok(())
    }

    /// Inverse transform including the 1/N factor, in place.
    pub fn inverse(&self, data: &mut [Complex<T>]) -> Result<()> {
        self.check_len(data.len())?;
        data.iter_mut().for_each(|c| *c = c.conj());
        self.forward(data)?;
        let scale = T::one() / T::of_usize(self.len);
        data.iter_mut().for_each(|c| *c = c.conj() * scale);
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.len {
            return Err(Error::Domain(format!("plan is for length {}, got {len}", self.len)));
        }
        Ok(())
    }

    fn permute(&self, data: &mut [Complex<T>]) {
        for (i, &j) in self.bit_reverse.iter().enumerate() {
            if i < j {
                data.swap(i, j);
            }
        }
    }
}

/// Radix-2 decimation-in-time FFT. Same values as [`dft_naive`](super::dft_naive),
/// restricted to power-of-two lengths.
pub fn fft<T: Real>(x: &ComplexSequence<T>) -> Result<Spectrum<T>> {
    let plan = FftPlan::new(x.len())?;
    let mut bins = x.samples.clone();
    plan.forward(&mut bins)?;
    Ok(Spectrum {
        bins,
        bin_spacing: bin_spacing_for(x.len(), x.sample_interval),
    })
}

/// Inverse of [`fft`]: `x[n] = (1/N) Σ_k F[k] · exp(+2πi·nk/N)`.
pub fn ifft<T: Real>(spectrum: &Spectrum<T>) -> Result<ComplexSequence<T>> {
    let plan = FftPlan::new(spectrum.len())?;
    let mut samples = spectrum.bins.clone();
    plan.inverse(&mut samples)?;
    Ok(ComplexSequence {
        samples,
        sample_interval: bin_spacing_for(spectrum.len(), spectrum.bin_spacing),
    })
}
