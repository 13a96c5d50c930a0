//! Minimal RIFF/WAVE support: 16-bit little-endian PCM, mono or stereo.
//!
//! Reading folds stereo to mono by averaging and skips chunks other than
//! `fmt ` and `data`. Writing always produces a canonical 44-byte-header mono
//! file.

use thiserror::Error;

use super::AudioBuffer;
use crate::Real;

const PCM: u16 = 1;
const FULL_SCALE: f64 = 32768.0;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WavError {
    #[error("missing RIFF tag")]
    NotRiff,

    #[error("RIFF form type is not WAVE")]
    NotWave,

    #[error("truncated {what}: need {needed} bytes, {available} available")]
    Truncated {
        what: &'static str,
        needed: usize,
        available: usize,
    },

    #[error("missing {0:?} chunk")]
    MissingChunk(&'static str),

    #[error("fmt chunk is {0} bytes, expected at least 16")]
    ShortFmt(u32),

    #[error("unsupported format tag {0:#06x}, only PCM (1) is supported")]
    UnsupportedFormat(u16),

    #[error("unsupported bit depth {0}, only 16-bit PCM is supported")]
    UnsupportedBitDepth(u16),

    #[error("unsupported channel count {0}, expected 1 or 2")]
    UnsupportedChannels(u16),

    #[error("sample rate must be positive")]
    ZeroSampleRate,

    #[error("{field} is {found}, expected {expected}")]
    InconsistentHeader {
        field: &'static str,
        expected: u32,
        found: u32,
    },

    #[error("data chunk of {len} bytes is not a whole number of {block_align}-byte frames")]
    PartialFrame { len: usize, block_align: u16 },
}

struct Fmt {
    channels: u16,
    sample_rate: u32,
}

fn take<'a>(bytes: &'a [u8], at: usize, len: usize, what: &'static str) -> Result<&'a [u8], WavError> {
    bytes.get(at..at + len).ok_or(WavError::Truncated {
        what,
        needed: len,
        available: bytes.len().saturating_sub(at),
    })
}

fn u16_at(b: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([b[at], b[at + 1]])
}

fn u32_at(b: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([b[at], b[at + 1], b[at + 2], b[at + 3]])
}

fn parse_fmt(body: &[u8]) -> Result<Fmt, WavError> {
    if body.len() < 16 {
        return Err(WavError::ShortFmt(body.len() as u32));
    }
    let format = u16_at(body, 0);
    let channels = u16_at(body, 2);
    let sample_rate = u32_at(body, 4);
    let byte_rate = u32_at(body, 8);
    let block_align = u16_at(body, 12);
    let bits = u16_at(body, 14);

    if format != PCM {
        return Err(WavError::UnsupportedFormat(format));
    }
    if bits != 16 {
        return Err(WavError::UnsupportedBitDepth(bits));
    }
    if channels != 1 && channels != 2 {
        return Err(WavError::UnsupportedChannels(channels));
    }
    if sample_rate == 0 {
        return Err(WavError::ZeroSampleRate);
    }
    let expected_align = channels as u32 * 2;
    if block_align as u32 != expected_align {
        return Err(WavError::InconsistentHeader {
            field: "block align",
            expected: expected_align,
            found: block_align as u32,
        });
    }
    let expected_rate = sample_rate * expected_align;
    if byte_rate != expected_rate {
        return Err(WavError::InconsistentHeader {
            field: "byte rate",
            expected: expected_rate,
            found: byte_rate,
        });
    }
    Ok(Fmt { channels, sample_rate })
}

/// Decodes a 16-bit PCM WAV file. Samples are scaled by 1/32768 into
/// `[-1, 1)`; stereo frames are averaged.
pub fn read_wav<T: Real>(bytes: &[u8]) -> Result<AudioBuffer<T>, WavError> {
    let header = take(bytes, 0, 12, "RIFF header")?;
    if &header[0..4] != b"RIFF" {
        return Err(WavError::NotRiff);
    }
    if &header[8..12] != b"WAVE" {
        return Err(WavError::NotWave);
    }

    let mut fmt: Option<Fmt> = None;
    let mut pos = 12;
    while pos < bytes.len() {
        let chunk = take(bytes, pos, 8, "chunk header")?;
        let id = &chunk[0..4];
        let size = u32_at(chunk, 4) as usize;
        let body_at = pos + 8;
        match id {
            b"fmt " => {
                fmt = Some(parse_fmt(take(bytes, body_at, size, "fmt chunk")?)?);
            }
            b"data" => {
                let fmt = fmt.ok_or(WavError::MissingChunk("fmt "))?;
                let data = take(bytes, body_at, size, "data chunk")?;
                return decode(data, &fmt);
            }
            _ => {
                take(bytes, body_at, size, "chunk body")?;
            }
        }
        // chunk bodies are padded to even length
        pos = body_at + size + (size & 1);
    }
    Err(WavError::MissingChunk(if fmt.is_some() { "data" } else { "fmt " }))
}

fn decode<T: Real>(data: &[u8], fmt: &Fmt) -> Result<AudioBuffer<T>, WavError> {
    let block_align = fmt.channels * 2;
    if !data.len().is_multiple_of(block_align as usize) {
        return Err(WavError::PartialFrame {
            len: data.len(),
            block_align,
        });
    }
    let samples = data
        .chunks_exact(block_align as usize)
        .map(|frame| {
            let sum: f64 = frame
                .chunks_exact(2)
                .map(|s| i16::from_le_bytes([s[0], s[1]]) as f64)
                .sum();
            T::of(sum / fmt.channels as f64 / FULL_SCALE)
        })
        .collect();
    Ok(AudioBuffer {
        samples,
        sample_rate: fmt.sample_rate,
    })
}

fn quantize<T: Real>(x: T) -> i16 {
    (x.to_f64_lossy() * FULL_SCALE).round().clamp(-32768.0, 32767.0) as i16
}

/// Encodes as mono 16-bit PCM. Samples are rounded to the nearest step of
/// 1/32768, with +1.0 saturating to 32767.
pub fn write_wav<T: Real>(buffer: &AudioBuffer<T>) -> Vec<u8> {
    let data_len = buffer.samples.len() * 2;
    let mut out = Vec::with_capacity(44 + data_len);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&((36 + data_len) as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&PCM.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes());
    out.extend_from_slice(&buffer.sample_rate.to_le_bytes());
    out.extend_from_slice(&(buffer.sample_rate * 2).to_le_bytes());
    out.extend_from_slice(&2u16.to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for &x in &buffer.samples {
        out.extend_from_slice(&quantize(x).to_le_bytes());
    }
    out
}
