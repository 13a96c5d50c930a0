use std::f64::consts::TAU;

use super::AudioBuffer;
use crate::theory::{pitch_to_frequency, Direction, Pitch, ScaleSpec, VoicedChord, A4_HZ};
use crate::{Error, Real, Result};

pub const DEFAULT_SYNTH_RATE: u32 = 11025;

/// Linear fade applied at both ends of every event.
pub const FADE_SECONDS: f64 = 0.010;

const AMPLITUDE_SLACK: f64 = 1e-9;
// back-to-back events whose computed boundaries differ by rounding do not overlap
const TIME_SLACK: f64 = 1e-9;

/// One or more simultaneous sine tones `A·sin(2πνt + φ)`, where `t` is
/// measured from the event's start.
#[derive(Clone, Debug, PartialEq)]
pub struct SynthEvent {
    /// Seconds.
    pub start: f64,
    /// Seconds, positive.
    pub duration: f64,
    pub pitches: Vec<Pitch>,
    /// Per-tone amplitude.
    pub amplitude: f64,
    /// Radians.
    pub phase: f64,
}

impl SynthEvent {
    pub fn new(start: f64, duration: f64, pitches: Vec<Pitch>, amplitude: f64) -> Self {
        Self {
            start,
            duration,
            pitches,
            amplitude,
            phase: 0.0,
        }
    }

    fn end(&self) -> f64 {
        self.start + self.duration
    }

    fn total_amplitude(&self) -> f64 {
        self.amplitude * self.pitches.len() as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthSpec {
    pub events: Vec<SynthEvent>,
    pub sample_rate: u32,
    /// Frequency of A4 in Hz.
    pub reference: f64,
}

impl SynthSpec {
    pub fn new(sample_rate: u32) -> Self {
        Self {
            events: Vec::new(),
            sample_rate,
            reference: A4_HZ,
        }
    }

    pub fn push(mut self, event: SynthEvent) -> Self {
        self.events.push(event);
        self
    }

    /// A single tone starting at zero.
    pub fn tone(pitch: Pitch, duration: f64, amplitude: f64, sample_rate: u32) -> Self {
        Self::new(sample_rate).push(SynthEvent::new(0.0, duration, vec![pitch], amplitude))
    }

    /// All chord notes sounding together, each at `1/n` amplitude.
    pub fn chord(chord: &VoicedChord, duration: f64, sample_rate: u32) -> Self {
        let n = chord.notes().len() as f64;
        Self::new(sample_rate).push(SynthEvent::new(0.0, duration, chord.notes().to_vec(), 1.0 / n))
    }

    /// Back-to-back notes of `note_duration` seconds each.
    pub fn sequence(pitches: &[Pitch], note_duration: f64, amplitude: f64, sample_rate: u32) -> Self {
        let events = pitches
            .iter()
            .enumerate()
            .map(|(i, &p)| SynthEvent::new(i as f64 * note_duration, note_duration, vec![p], amplitude))
            .collect();
        Self {
            events,
            sample_rate,
            reference: A4_HZ,
        }
    }

    /// End of the last event, in seconds.
    pub fn duration(&self) -> f64 {
        self.events.iter().map(SynthEvent::end).fold(0.0, f64::max)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sample_rate == 0 {
            return Err(Error::NonPositive {
                what: "sample rate",
                value: 0.0,
            });
        }
        if !(self.reference > 0.0) {
            return Err(Error::NonPositive {
                what: "reference frequency",
                value: self.reference,
            });
        }
        for (index, e) in self.events.iter().enumerate() {
            let reason = if !(e.duration > 0.0 && e.duration.is_finite()) {
                Some(format!("duration {} must be positive", e.duration))
            } else if !(e.start >= 0.0 && e.start.is_finite()) {
                Some(format!("start {} must be non-negative", e.start))
            } else if !(e.amplitude >= 0.0 && e.amplitude.is_finite()) {
                Some(format!("amplitude {} must be non-negative", e.amplitude))
            } else if !e.phase.is_finite() {
                Some("phase must be finite".to_string())
            } else if e.pitches.is_empty() {
                Some("no pitches".to_string())
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::InvalidEvent { index, reason });
            }
        }
        // the summed amplitude only rises at event starts
        for e in &self.events {
            let t = e.start;
            let total: f64 = self
                .events
                .iter()
                .filter(|o| o.start <= t + TIME_SLACK && t + TIME_SLACK < o.end())
                .map(SynthEvent::total_amplitude)
                .sum();
            if total > 1.0 + AMPLITUDE_SLACK {
                return Err(Error::AmplitudeOverflow { total, time: t });
            }
        }
        Ok(())
    }
}

/// Pitches of a scale walked from `root`, closing on the octave.
pub fn scale_pitches(root: Pitch, spec: &ScaleSpec, direction: Direction) -> Result<Vec<Pitch>> {
    spec.validate()?;
    let sign = match direction {
        Direction::Ascending => 1,
        Direction::Descending => -1,
    };
    let steps: Vec<i32> = match direction {
        Direction::Ascending => spec.steps.iter().map(|s| s.semitones() as i32).collect(),
        Direction::Descending => spec.steps.iter().rev().map(|s| s.semitones() as i32).collect(),
    };
    let mut out = vec![root];
    let mut offset = 0;
    for s in steps {
        offset += sign * s;
        out.push(root.transpose(offset));
    }
    Ok(out)
}

/// Renders `spec` sample by sample. Each event is shaped by a linear fade in
/// and out of [`FADE_SECONDS`] (or half its length, if shorter). Output is
/// bit-identical for identical specs.
pub fn synth<T: Real>(spec: &SynthSpec) -> Result<AudioBuffer<T>> {
    spec.validate()?;
    let rate = spec.sample_rate as f64;
    let len = (spec.duration() * rate).round() as usize;
    let mut out = vec![0.0f64; len];

    for e in &spec.events {
        let freqs: Vec<f64> = e
            .pitches
            .iter()
            .map(|&p| pitch_to_frequency(p, spec.reference))
            .collect();
        let fade = FADE_SECONDS.min(e.duration / 2.0);
        let first = (e.start * rate).ceil() as usize;
        let last = ((e.end() * rate).ceil() as usize).min(len);
        for (k, sample) in out.iter_mut().enumerate().take(last).skip(first) {
            let t = k as f64 / rate - e.start;
            if t < 0.0 || t >= e.duration {
                continue;
            }
            let envelope = (t / fade).min((e.duration - t) / fade).min(1.0);
            let tone: f64 = freqs.iter().map(|f| (TAU * f * t + e.phase).sin()).sum();
            *sample += e.amplitude * envelope * tone;
        }
    }

    let samples = out.into_iter().map(|x| T::of(x.clamp(-1.0, 1.0))).collect();
    AudioBuffer::new(samples, spec.sample_rate)
}
