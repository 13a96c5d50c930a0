//! Frame-wise chord labelling by template matching.
//!
//! Every (root, family) pair over the 12 sounding pitch classes gives a binary
//! chroma mask. A frame is labelled with the template of highest cosine
//! similarity, frames below a silence threshold get [`ChordLabel::NoChord`],
//! and a modal filter over neighbouring frames removes isolated flips before
//! runs of equal labels are merged into timed segments.
//!
//! Octave folding erases voicing, so all inversions of a chord map to the same
//! label, and the augmented triad's mask is shared by the three roots a major
//! third apart (C, E and G♯ augmented are one vector). Exact score ties are
//! broken toward the lowest root index, then family order
//! maj, min, dim, aug, maj7, min7, dom7.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::chroma::{ChromaVector, Chromagram};
use crate::theory::{ChordFamily, PitchClass};
use crate::{Error, Real, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordTemplate<T> {
    pub root: PitchClass,
    pub family: ChordFamily,
    pub mask: [bool; 12],
    /// `mask / ‖mask‖`.
    pub weights: [T; 12],
}

impl<T: Real> ChordTemplate<T> {
    pub fn new(root: PitchClass, family: ChordFamily) -> Self {
        let mut mask = [false; 12];
        for &d in family.degrees() {
            mask[root.transpose(d as i32).index() as usize] = true;
        }
        let w = T::one() / T::of_usize(family.degrees().len()).sqrt();
        let weights = mask.map(|on| if on { w } else { T::zero() });
        Self {
            root: PitchClass::new(root.index() as i32),
            family,
            mask,
            weights,
        }
    }

    /// All 84 templates, ordered by root index then family.
    pub fn all() -> Vec<Self> {
        PitchClass::all()
            .flat_map(|root| ChordFamily::ALL.into_iter().map(move |fam| Self::new(root, fam)))
            .collect()
    }

    /// Cosine similarity with `chroma`; zero for a silent vector.
    pub fn score(&self, chroma: &ChromaVector<T>) -> T {
        let norm = chroma.norm();
        if norm == T::zero() {
            return T::zero();
        }
        let dot: T = chroma.intensity.iter().zip(&self.weights).map(|(&c, &w)| c * w).sum();
        dot / norm
    }

    fn key(&self) -> (u8, ChordFamily) {
        (self.root.index(), self.family)
    }

    pub fn label(&self, score: T) -> ChordLabel<T> {
        ChordLabel::Chord {
            root: self.root,
            family: self.family,
            score,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChordLabel<T> {
    NoChord,
    Chord {
        root: PitchClass,
        family: ChordFamily,
        /// Cosine similarity in `[-1, 1]`.
        score: T,
    },
}

impl<T: Real> ChordLabel<T> {
    pub fn score(&self) -> Option<T> {
        match self {
            ChordLabel::NoChord => None,
            ChordLabel::Chord { score, .. } => Some(*score),
        }
    }

    /// Identity of the label without its score.
    pub fn key(&self) -> Option<(u8, ChordFamily)> {
        match self {
            ChordLabel::NoChord => None,
            ChordLabel::Chord { root, family, .. } => Some((root.index(), *family)),
        }
    }

    pub fn same_chord(&self, other: &Self) -> bool {
        self.key() == other.key()
    }

    /// `C#:maj` style name using sharps only; `N` for no chord.
    pub fn name(&self) -> String {
        match self {
            ChordLabel::NoChord => "N".to_string(),
            ChordLabel::Chord { root, family, .. } => format!("{}:{}", root.sharp_name(), family),
        }
    }
}

impl<T: Real> fmt::Display for ChordLabel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `Ordering::Greater` when `a` should win over `b`.
fn preference<T: Real>(a: (T, (u8, ChordFamily)), b: (T, (u8, ChordFamily))) -> Ordering {
    a.0.partial_cmp(&b.0)
        .unwrap_or(Ordering::Equal)
        .then_with(|| b.1.cmp(&a.1))
}

/// Template indices with their scores, best first, using the documented
/// tie-break.
pub fn rank_templates<T: Real>(chroma: &ChromaVector<T>, templates: &[ChordTemplate<T>]) -> Vec<(usize, T)> {
    let mut ranked: Vec<(usize, T)> = templates
        .iter()
        .enumerate()
        .map(|(i, t)| (i, t.score(chroma)))
        .collect();
    ranked.sort_by(|a, b| preference((b.1, templates[b.0].key()), (a.1, templates[a.0].key())));
    ranked
}

/// Labels one frame. Frames whose pre-normalization energy is below
/// `silence_threshold`, or which are all-zero, are [`ChordLabel::NoChord`].
pub fn match_frame<T: Real>(
    chroma: &ChromaVector<T>,
    templates: &[ChordTemplate<T>],
    silence_threshold: T,
) -> Result<ChordLabel<T>> {
    if templates.is_empty() {
        return Err(Error::NoTemplates);
    }
    if chroma.is_zero() || chroma.energy < silence_threshold {
        return Ok(ChordLabel::NoChord);
    }
    let mut best = &templates[0];
    let mut best_score = best.score(chroma);
    for t in &templates[1..] {
        let s = t.score(chroma);
        if preference((s, t.key()), (best_score, best.key())) == Ordering::Greater {
            best = t;
            best_score = s;
        }
    }
    Ok(best.label(best_score))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SilenceThreshold<T> {
    /// Energy floor in the chroma's own units.
    Absolute(T),
    /// Fraction of the loudest frame's energy in the track.
    Relative(T),
}

impl<T: Real> Default for SilenceThreshold<T> {
    fn default() -> Self {
        SilenceThreshold::Relative(T::of(1e-4))
    }
}

impl<T: Real> SilenceThreshold<T> {
    pub fn resolve(&self, chromagram: &Chromagram<T>) -> T {
        match *self {
            SilenceThreshold::Absolute(e) => e,
            SilenceThreshold::Relative(r) => r * chromagram.max_energy(),
        }
    }
}

pub const DEFAULT_MEDIAN_WINDOW: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrackOptions<T> {
    /// Odd number of frames in the modal filter; 1 disables smoothing.
    pub median_window: usize,
    pub silence: SilenceThreshold<T>,
}

impl<T: Real> Default for TrackOptions<T> {
    fn default() -> Self {
        Self {
            median_window: DEFAULT_MEDIAN_WINDOW,
            silence: SilenceThreshold::default(),
        }
    }
}

/// A run of frames sharing one label.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment<T> {
    pub start: T,
    pub end: T,
    /// Score is the mean frame score over the run.
    pub label: ChordLabel<T>,
}

pub fn label_frames<T: Real>(
    chromagram: &Chromagram<T>,
    templates: &[ChordTemplate<T>],
    silence_threshold: T,
) -> Result<Vec<ChordLabel<T>>> {
    chromagram
        .frames
        .par_iter()
        .map(|c| match_frame(c, templates, silence_threshold))
        .collect()
}

/// Modal filter over labels. Each frame takes the most frequent label in the
/// centred window (clipped at the ends). If its own label is among the most
/// frequent it is kept; otherwise the earliest of the tied winners is used.
/// Returns, per frame, the index of the frame whose label it adopts.
pub fn smooth_labels<T: Real>(labels: &[ChordLabel<T>], window: usize) -> Result<Vec<usize>> {
    if window == 0 || window.is_multiple_of(2) {
        return Err(Error::InvalidMedianWindow(window));
    }
    let half = window / 2;
    let keys: Vec<_> = labels.iter().map(|l| l.key()).collect();
    Ok((0..keys.len())
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half + 1).min(keys.len());
            let count = |k: &Option<(u8, ChordFamily)>| keys[lo..hi].iter().filter(|x| *x == k).count();
            let own = count(&keys[i]);
            let mut best = (own, i);
            for (j, k) in keys.iter().enumerate().take(hi).skip(lo) {
                let c = count(k);
                if c > best.0 {
                    best = (c, j);
                }
            }
            best.1
        })
        .collect())
}

/// Matches, smooths and segments a chromagram. Segments tile
/// `[0, duration]`; boundaries between frames fall midway between their
/// centre times.
pub fn label_track<T: Real>(
    chromagram: &Chromagram<T>,
    templates: &[ChordTemplate<T>],
    options: &TrackOptions<T>,
) -> Result<Vec<Segment<T>>> {
    if options.median_window == 0 || options.median_window.is_multiple_of(2) {
        return Err(Error::InvalidMedianWindow(options.median_window));
    }
    let threshold = options.silence.resolve(chromagram);
    let raw = label_frames(chromagram, templates, threshold)?;
    let source = smooth_labels(&raw, options.median_window)?;
    let labels: Vec<ChordLabel<T>> = source
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            if i == j {
                return raw[i];
            }
            // rescore the adopted chord against this frame's own chroma
            match raw[j] {
                ChordLabel::NoChord => ChordLabel::NoChord,
                ChordLabel::Chord { root, family, .. } => {
                    let t = ChordTemplate::new(root, family);
                    t.label(t.score(&chromagram.frames[i]))
                }
            }
        })
        .collect();
    Ok(segments(&labels, &chromagram.frame_times, chromagram.duration))
}

fn segments<T: Real>(labels: &[ChordLabel<T>], times: &[T], duration: T) -> Vec<Segment<T>> {
    let two = T::of(2.0);
    let mut out = Vec::new();
    let mut start_idx = 0;
    for i in 1..=labels.len() {
        if i < labels.len() && labels[i].same_chord(&labels[start_idx]) {
            continue;
        }
        let start = if start_idx == 0 {
            T::zero()
        } else {
            (times[start_idx - 1] + times[start_idx]) / two
        };
        let end = if i == labels.len() {
            duration
        } else {
            (times[i - 1] + times[i]) / two
        };
        let label = match labels[start_idx] {
            ChordLabel::NoChord => ChordLabel::NoChord,
            ChordLabel::Chord { root, family, .. } => {
                let run = &labels[start_idx..i];
                let total: T = run.iter().filter_map(|l| l.score()).sum();
                ChordLabel::Chord {
                    root,
                    family,
                    score: total / T::of_usize(run.len()),
                }
            }
        };
        out.push(Segment { start, end, label });
        start_idx = i;
    }
    out
}
