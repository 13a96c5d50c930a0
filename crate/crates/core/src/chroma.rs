//! Octave folding of magnitude spectra into 12-bin chroma vectors (pitch
//! class profiles) and the chromagram built from them.
//!
//! Each in-band bin adds its energy (magnitude squared) to the pitch class of
//! the nearest equal-tempered pitch, tuned to A4 = 440 Hz. Vectors are then
//! L2-normalized per frame; silent frames stay all-zero.

use rayon::prelude::*;

use crate::stft::Spectrogram;
use crate::theory::{frequency_to_pitch, PitchClass, A4_HZ};
use crate::transform::FrequencyAxis;
use crate::{Error, Real, Result};

pub const DEFAULT_BAND_LO: f64 = 55.0;
pub const DEFAULT_BAND_HI: f64 = 2000.0;

/// Inclusive frequency band in Hz.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Default for Band<T> {
    fn default() -> Self {
        Self {
            lo: T::of(DEFAULT_BAND_LO),
            hi: T::of(DEFAULT_BAND_HI),
        }
    }
}

impl<T: Real> Band<T> {
    pub fn new(lo: T, hi: T) -> Self {
        Self { lo, hi }
    }

    /// Requires `0 < lo < hi <= Nyquist`.
    pub fn validate(&self, axis: &FrequencyAxis<T>) -> Result<()> {
        let nyquist = axis.nyquist();
        if self.lo > T::zero() && self.lo < self.hi && self.hi <= nyquist {
            Ok(())
        } else {
            Err(Error::InvalidBand {
                lo: self.lo.to_f64_lossy(),
                hi: self.hi.to_f64_lossy(),
                nyquist: nyquist.to_f64_lossy(),
            })
        }
    }

    pub fn contains(&self, frequency: T) -> bool {
        frequency >= self.lo && frequency <= self.hi
    }
}

/// Chroma intensities indexed by pitch class (0 = C).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChromaVector<T> {
    pub intensity: [T; 12],
    /// Energy folded into the vector before normalization.
    pub energy: T,
}

impl<T: Real> ChromaVector<T> {
    pub fn zero() -> Self {
        Self {
            intensity: [T::zero(); 12],
            energy: T::zero(),
        }
    }

    /// Normalizes raw per-class energies, recording their sum as the energy.
    pub fn from_energies(raw: [T; 12]) -> Self {
        let energy = raw.iter().copied().sum();
        let mut v = Self { intensity: raw, energy };
        let norm = v.norm();
        if norm > T::zero() {
            v.intensity.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }

    pub fn norm(&self) -> T {
        self.intensity.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.intensity.iter().all(|&x| x == T::zero())
    }

    /// Pitch class with the largest intensity (lowest index on ties), or
    /// `None` for a silent vector.
    pub fn dominant(&self) -> Option<PitchClass> {
        if self.is_zero() {
            return None;
        }
        let mut best = 0;
        for (i, &x) in self.intensity.iter().enumerate() {
            if x > self.intensity[best] {
                best = i;
            }
        }
        Some(PitchClass::new(best as i32))
    }

    /// Circular shift by `semitones`: class `c` moves to `c + semitones`.
    pub fn rotate(&self, semitones: i32) -> Self {
        let mut intensity = [T::zero(); 12];
        for (i, &x) in self.intensity.iter().enumerate() {
            intensity[PitchClass::new(i as i32 + semitones).index() as usize] = x;
        }
        Self {
            intensity,
            energy: self.energy,
        }
    }
}

/// Bin-to-class lookup for one frequency axis and band. Build once and fold
/// many frames.
#[derive(Clone, Debug)]
pub struct ChromaFolder {
    classes: Vec<Option<u8>>,
}

impl ChromaFolder {
    pub fn new<T: Real>(axis: &FrequencyAxis<T>, band: &Band<T>) -> Result<Self> {
        band.validate(axis)?;
        let reference = T::of(A4_HZ);
        let classes = (0..=axis.len / 2)
            .map(|k| {
                let f = T::of_usize(k) * axis.bin_spacing();
                if band.contains(f) {
                    frequency_to_pitch(f, reference).map(|(p, _)| Some(p.class.index()))
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { classes })
    }

    /// Pitch class index assigned to bin `k`, if the bin is in band.
    pub fn class_of_bin(&self, k: usize) -> Option<u8> {
        self.classes.get(k).copied().flatten()
    }

    pub fn fold<T: Real>(&self, frame: &[T]) -> ChromaVector<T> {
        let mut raw = [T::zero(); 12];
        for (&m, class) in frame.iter().zip(&self.classes) {
            if let Some(c) = class {
                raw[*c as usize] += m * m;
            }
        }
        ChromaVector::from_energies(raw)
    }
}

/// Folds one magnitude frame (bins `0..=N/2` of a real-input transform).
pub fn fold_to_chroma<T: Real>(frame: &[T], axis: &FrequencyAxis<T>, band: &Band<T>) -> Result<ChromaVector<T>> {
    Ok(ChromaFolder::new(axis, band)?.fold(frame))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chromagram<T> {
    pub frames: Vec<ChromaVector<T>>,
    pub frame_times: Vec<T>,
    /// Length of the analysed signal in seconds.
    pub duration: T,
}

impl<T: Real> Chromagram<T> {
    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn max_energy(&self) -> T {
        self.frames.iter().map(|f| f.energy).fold(T::zero(), |a, b| a.max(b))
    }
}

pub fn chromagram<T: Real>(spectrogram: &Spectrogram<T>, band: &Band<T>) -> Result<Chromagram<T>> {
    let folder = ChromaFolder::new(&spectrogram.frequency_axis()?, band)?;
    let frames = spectrogram.frames.par_iter().map(|frame| folder.fold(frame)).collect();
    Ok(Chromagram {
        frames,
        frame_times: spectrogram.frame_times.clone(),
        duration: spectrogram.duration,
    })
}
