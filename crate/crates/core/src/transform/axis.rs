use crate::{Error, Real, Result};

/// Time and frequency grids of an N-point transform.
///
/// With N samples spaced Δt apart the record spans L = N·Δt. The lowest
/// resolvable frequency, and so the bin spacing, is Δν = 1/L, and the N bins
/// together cover Ω = N·Δν = N/L. Equivalently Δt·Δν = 1/N.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrequencyAxis<T> {
    pub len: usize,
    pub sample_interval: T,
}

impl<T: Real> FrequencyAxis<T> {
    /// L = N·Δt.
    pub fn duration(&self) -> T {
        T::of_usize(self.len) * self.sample_interval
    }

    /// Δν = 1/L.
    pub fn bin_spacing(&self) -> T {
        T::one() / self.duration()
    }

    /// Ω = N·Δν.
    pub fn bandwidth(&self) -> T {
        T::of_usize(self.len) * self.bin_spacing()
    }

    pub fn sample_rate(&self) -> T {
        T::one() / self.sample_interval
    }

    pub fn nyquist(&self) -> T {
        self.bandwidth() / T::of(2.0)
    }

    /// Signed frequency of bin `k`: k·Δν up to N/2, then (k−N)·Δν.
    pub fn bin_frequency(&self, k: usize) -> T {
        let k = k % self.len;
        if k <= self.len / 2 {
            T::of_usize(k) * self.bin_spacing()
        } else {
            -(T::of_usize(self.len - k) * self.bin_spacing())
        }
    }

    /// Nearest bin index to a non-negative frequency.
    pub fn nearest_bin(&self, frequency: T) -> usize {
        (frequency / self.bin_spacing()).round().to_usize().unwrap_or(0)
    }
}

pub fn frequency_axis<T: Real>(len: usize, sample_interval: T) -> Result<FrequencyAxis<T>> {
    if len == 0 {
        return Err(Error::EmptyInput);
    }
    if !(sample_interval > T::zero()) || !sample_interval.is_finite() {
        return Err(Error::NonPositive {
            what: "sample interval",
            value: sample_interval.to_f64_lossy(),
        });
    }
    Ok(FrequencyAxis { len, sample_interval })
}

/// Operation-count advantage of an O(n log n) transform over O(n²):
/// n² / (n·log₂ n) = n / log₂ n.
pub fn speedup_ratio(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("speedup ratio needs n >= 2, got {n}")));
    }
    let n = n as f64;
    Ok(n / n.log2())
}
