use thiserror::Error;

use crate::audio::WavError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input sequence is empty")]
    EmptyInput,

    #[error("FFT length must be a power of two, got {len}")]
    NotPowerOfTwo { len: usize },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },

    #[error("{0}")]
    Domain(String),

    #[error("scale steps must sum to 12 semitones, got {sum}")]
    InvalidScale { sum: u32 },

    #[error("invalid STFT configuration: {0}")]
    InvalidConfig(String),

    #[error("signal of {len} samples is shorter than one window of {window}")]
    SignalTooShort { len: usize, window: usize },

    #[error("invalid frequency band [{lo}, {hi}] Hz (Nyquist {nyquist} Hz)")]
    InvalidBand { lo: f64, hi: f64, nyquist: f64 },

    #[error("smoothing window must be odd and at least 1, got {0}")]
    InvalidMedianWindow(usize),

    #[error("no chord templates supplied")]
    NoTemplates,

    #[error("simultaneous amplitude {total} exceeds 1 at t = {time} s")]
    AmplitudeOverflow { total: f64, time: f64 },

    #[error("invalid synthesis event {index}: {reason}")]
    InvalidEvent { index: usize, reason: String },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(transparent)]
    Wav(#[from] WavError),
}
