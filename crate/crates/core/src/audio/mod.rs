//! Audio buffers, sinusoid synthesis and 16-bit PCM WAV I/O.

mod synth;
mod wav;

pub use synth::{scale_pitches, synth, SynthEvent, SynthSpec, DEFAULT_SYNTH_RATE, FADE_SECONDS};
pub use wav::{read_wav, write_wav, WavError};

use crate::{Error, Real, Result};

/// Mono samples in `[-1, 1]` at an integer sample rate.
#[derive(Clone, Debug, PartialEq)]
pub struct AudioBuffer<T> {
    pub samples: Vec<T>,
    pub sample_rate: u32,
}

impl<T: Real> AudioBuffer<T> {
    /// Rejects a zero sample rate and any sample that is non-finite or
    /// outside `[-1, 1]`.
    pub fn new(samples: Vec<T>, sample_rate: u32) -> Result<Self> {
        check_rate(sample_rate)?;
        if let Some((i, x)) = samples
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_finite() || x.abs() > T::one())
        {
            return Err(Error::Domain(format!("sample {i} = {x} is outside [-1, 1]")));
        }
        Ok(Self { samples, sample_rate })
    }

    /// Like [`AudioBuffer::new`] but clamps out-of-range samples to ±1,
    /// logging a warning. Non-finite samples are still rejected.
    pub fn clamped(mut samples: Vec<T>, sample_rate: u32) -> Result<Self> {
        check_rate(sample_rate)?;
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite sample".into()));
        }
        let mut clipped = 0usize;
        for x in samples.iter_mut() {
            if x.abs() > T::one() {
                *x = x.signum();
                clipped += 1;
            }
        }
        if clipped > 0 {
            log::warn!("clamped {clipped} samples to [-1, 1]");
        }
        Ok(Self { samples, sample_rate })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Seconds.
    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    pub fn sample_rate_hz(&self) -> T {
        T::of(self.sample_rate as f64)
    }

    /// Appends another buffer at the same rate.
    pub fn concat(mut self, other: &AudioBuffer<T>) -> Result<Self> {
        if other.sample_rate != self.sample_rate {
            return Err(Error::Domain(format!(
                "sample rates differ: {} vs {}",
                self.sample_rate, other.sample_rate
            )));
        }
        self.samples.extend_from_slice(&other.samples);
        Ok(self)
    }
}

fn check_rate(sample_rate: u32) -> Result<()> {
    if sample_rate == 0 {
        return Err(Error::NonPositive {
            what: "sample rate",
            value: 0.0,
        });
    }
    Ok(())
}
