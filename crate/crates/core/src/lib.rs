//! Spectral analysis and chord detection built from first principles.
//!
//! The crate covers the whole path from music theory to labelled audio:
//!
//! * [`theory`]: equal-temperament pitch arithmetic, scales, chords, inversions
//!   and the spelled-chord catalog.
//! * [`transform`]: the discrete Fourier transform (a quadratic matrix form used
//!   as an oracle, and an iterative radix-2 FFT), its inverse, and the
//!   frequency-axis reciprocity helpers.
//! * [`stft`]: windowed short-time analysis into magnitude spectrograms.
//! * [`chroma`]: octave folding of spectrogram frames into 12-bin chroma.
//! * [`detect`]: cosine template matching and modal smoothing of chord labels.
//! * [`audio`]: sinusoid synthesis and 16-bit PCM WAV I/O.
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`). The `*64` and `*32`
//! aliases below name the common concrete instantiations.
//!
//! ```
//! use chromakit::audio::{synth, SynthSpec};
//! use chromakit::chroma::{chromagram, Band};
//! use chromakit::detect::{label_track, ChordTemplate, TrackOptions};
//! use chromakit::stft::{stft, StftConfig};
//! use chromakit::theory::{build_chord, ChordFamily, PitchClass};
//!
//! # fn main() -> chromakit::Result<()> {
//! let chord = build_chord(PitchClass::new(0), ChordFamily::Maj, 4);
//! let audio = synth::<f64>(&SynthSpec::chord(&chord, 2.0, 11025))?;
//! let spec = stft(&audio.samples, &StftConfig::with_sample_rate(11025.0))?;
//! let chroma = chromagram(&spec, &Band::default())?;
//! let segments = label_track(&chroma, &ChordTemplate::all(), &TrackOptions::default())?;
//! assert_eq!(segments[0].label.name(), "C:maj");
//! # Ok(())
//! # }
//! ```

// negated comparisons are used on purpose so NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audio;
pub mod chroma;
pub mod detect;
mod error;
mod scalar;
pub mod stft;
pub mod theory;
pub mod transform;

pub use error::{Error, Result};
pub use scalar::Real;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;

pub type ComplexSequence64 = transform::ComplexSequence<f64>;
pub type ComplexSequence32 = transform::ComplexSequence<f32>;
pub type Spectrum64 = transform::Spectrum<f64>;
pub type Spectrum32 = transform::Spectrum<f32>;
pub type FrequencyAxis64 = transform::FrequencyAxis<f64>;
pub type FftPlan64 = transform::FftPlan<f64>;
pub type FftPlan32 = transform::FftPlan<f32>;

pub type StftConfig64 = stft::StftConfig<f64>;
pub type Spectrogram64 = stft::Spectrogram<f64>;
pub type Spectrogram32 = stft::Spectrogram<f32>;

pub type ChromaVector64 = chroma::ChromaVector<f64>;
pub type Chromagram64 = chroma::Chromagram<f64>;
pub type Chromagram32 = chroma::Chromagram<f32>;
pub type Band64 = chroma::Band<f64>;

pub type ChordTemplate64 = detect::ChordTemplate<f64>;
pub type ChordLabel64 = detect::ChordLabel<f64>;
pub type Segment64 = detect::Segment<f64>;

pub type AudioBuffer64 = audio::AudioBuffer<f64>;
pub type AudioBuffer32 = audio::AudioBuffer<f32>;
