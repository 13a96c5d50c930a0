//! Short-time Fourier analysis: the signal is cut into overlapping windows,
//! each window is tapered and transformed, and the non-negative-frequency
//! magnitudes are stacked into a spectrogram.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rayon::prelude::*;

use crate::transform::{frequency_axis, FftPlan, FrequencyAxis};
use crate::{Error, Real, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WindowFn {
    Rectangular,
    #[default]
    Hann,
}

impl WindowFn {
    pub fn coefficients<T: Real>(self, len: usize) -> Vec<T> {
        match self {
            WindowFn::Rectangular => vec![T::one(); len],
            WindowFn::Hann => hann_window(len),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WindowFn::Rectangular => "rectangular",
            WindowFn::Hann => "hann",
        }
    }
}

impl fmt::Display for WindowFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WindowFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rectangular" | "rect" | "boxcar" => Ok(WindowFn::Rectangular),
            "hann" | "hanning" => Ok(WindowFn::Hann),
            _ => Err(Error::Parse {
                what: "window function",
                input: s.to_string(),
            }),
        }
    }
}

/// Symmetric Hann window `0.5·(1 − cos(2πj/(n−1)))`; `[1]` for `n == 1`.
pub fn hann_window<T: Real>(n: usize) -> Vec<T> {
    if n == 1 {
        return vec![T::one()];
    }
    let denom = (n - 1) as f64;
    (0..n)
        .map(|j| T::of(0.5 * (1.0 - (std::f64::consts::TAU * j as f64 / denom).cos())))
        .collect()
}

pub const DEFAULT_WINDOW: usize = 4096;
pub const DEFAULT_HOP: usize = 1024;
pub const DEFAULT_SAMPLE_RATE: f64 = 11025.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StftConfig<T> {
    /// Samples per frame, a power of two.
    pub window_size: usize,
    /// Samples between frame starts, `1..=window_size`.
    pub hop: usize,
    pub window_fn: WindowFn,
    /// Hz.
    pub sample_rate: T,
}

impl<T: Real> Default for StftConfig<T> {
    /// 4096-sample Hann frames every 1024 samples at 11025 Hz, which gives
    /// 75 % overlap and bins about 2.7 Hz apart.
    fn default() -> Self {
        Self {
            window_size: DEFAULT_WINDOW,
            hop: DEFAULT_HOP,
            window_fn: WindowFn::Hann,
            sample_rate: T::of(DEFAULT_SAMPLE_RATE),
        }
    }
}

impl<T: Real> StftConfig<T> {
    pub fn with_sample_rate(sample_rate: T) -> Self {
        Self {
            sample_rate,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.window_size == 0 || !self.window_size.is_power_of_two() {
            return Err(Error::InvalidConfig(format!(
                "window size must be a power of two, got {}",
                self.window_size
            )));
        }
        if self.hop == 0 || self.hop > self.window_size {
            return Err(Error::InvalidConfig(format!(
                "hop must be in 1..={}, got {}",
                self.window_size, self.hop
            )));
        }
        if !(self.sample_rate > T::zero()) || !self.sample_rate.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "sample rate must be positive, got {}",
                self.sample_rate
            )));
        }
        Ok(())
    }

    /// Number of whole frames that fit in `len` samples; trailing samples
    /// that do not fill a window are dropped.
    pub fn frame_count(&self, len: usize) -> usize {
        if len < self.window_size {
            0
        } else {
            (len - self.window_size) / self.hop + 1
        }
    }

    /// Bins kept per frame: `0..=window_size/2`.
    pub fn bins(&self) -> usize {
        self.window_size / 2 + 1
    }

    pub fn frequency_axis(&self) -> Result<FrequencyAxis<T>> {
        frequency_axis(self.window_size, T::one() / self.sample_rate)
    }
}

/// Magnitude spectrogram. Frame `j` covers samples
/// `j·hop .. j·hop + window_size` and is stamped with its centre time.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrogram<T> {
    pub frames: Vec<Vec<T>>,
    pub frame_times: Vec<T>,
    pub config: StftConfig<T>,
    /// Length of the analysed signal in seconds.
    pub duration: T,
}

impl<T: Real> Spectrogram<T> {
    pub fn frequency_axis(&self) -> Result<FrequencyAxis<T>> {
        self.config.frequency_axis()
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }
}

pub fn stft<T: Real>(signal: &[T], config: &StftConfig<T>) -> Result<Spectrogram<T>> {
    config.validate()?;
    let n = config.window_size;
    if signal.len() < n {
        return Err(Error::SignalTooShort {
            len: signal.len(),
            window: n,
        });
    }
    let plan = FftPlan::<T>::new(n)?;
    let window: Vec<T> = config.window_fn.coefficients(n);
    let count = config.frame_count(signal.len());

    let frames = (0..count)
        .into_par_iter()
        .map(|j| {
            let start = j * config.hop;
            let mut buf: Vec<Complex<T>> = signal[start..start + n]
                .iter()
                .zip(&window)
                .map(|(&s, &w)| Complex::new(s * w, T::zero()))
                .collect();
            plan.forward(&mut buf)?;
            Ok(buf[..config.bins()].iter().map(|c| c.norm()).collect())
        })
        .collect::<Result<Vec<Vec<T>>>>()?;

    let half = T::of_usize(n) / T::of(2.0);
    let frame_times = (0..count)
        .map(|j| (T::of_usize(j * config.hop) + half) / config.sample_rate)
        .collect();

    Ok(Spectrogram {
        frames,
        frame_times,
        config: *config,
        duration: T::of_usize(signal.len()) / config.sample_rate,
    })
}
