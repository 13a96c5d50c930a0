use std::fmt;
use std::str::FromStr;

use super::pitch::{Pitch, PitchClass};
use crate::{Error, Result};

/// The seven chord families. Declaration order is the detection tie-break order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChordFamily {
    Maj,
    Min,
    Dim,
    Aug,
    Maj7,
    Min7,
    Dom7,
}

impl ChordFamily {
    pub const ALL: [ChordFamily; 7] = [
        ChordFamily::Maj,
        ChordFamily::Min,
        ChordFamily::Dim,
        ChordFamily::Aug,
        ChordFamily::Maj7,
        ChordFamily::Min7,
        ChordFamily::Dom7,
    ];

    pub const TRIADS: [ChordFamily; 4] = [ChordFamily::Maj, ChordFamily::Min, ChordFamily::Dim, ChordFamily::Aug];

    pub const SEVENTHS: [ChordFamily; 3] = [ChordFamily::Maj7, ChordFamily::Min7, ChordFamily::Dom7];

    /// Semitone offsets above the root, strictly increasing from 0.
    pub fn degrees(self) -> &'static [u8] {
        match self {
            ChordFamily::Maj => &[0, 4, 7],
            ChordFamily::Min => &[0, 3, 7],
            ChordFamily::Dim => &[0, 3, 6],
            ChordFamily::Aug => &[0, 4, 8],
            ChordFamily::Maj7 => &[0, 4, 7, 11],
            ChordFamily::Min7 => &[0, 3, 7, 10],
            ChordFamily::Dom7 => &[0, 4, 7, 10],
        }
    }

    pub fn is_seventh(self) -> bool {
        self.degrees().len() == 4
    }

    pub fn name(self) -> &'static str {
        match self {
            ChordFamily::Maj => "maj",
            ChordFamily::Min => "min",
            ChordFamily::Dim => "dim",
            ChordFamily::Aug => "aug",
            ChordFamily::Maj7 => "maj7",
            ChordFamily::Min7 => "min7",
            ChordFamily::Dom7 => "dom7",
        }
    }

    pub fn order(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ChordFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChordFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChordFamily::ALL
            .into_iter()
            .find(|fam| fam.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "chord family",
                input: s.to_string(),
            })
    }
}

/// A chord voiced as concrete pitches, lowest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoicedChord {
    notes: Vec<Pitch>,
    inversion: usize,
}

impl VoicedChord {
    /// Notes must be non-empty and strictly ascending; `inversion` must be
    /// below the note count.
    pub fn new(notes: Vec<Pitch>, inversion: usize) -> Result<Self> {
        if notes.is_empty() {
            return Err(Error::EmptyInput);
        }
        if notes.windows(2).any(|w| w[0].midi() >= w[1].midi()) {
            return Err(Error::Domain("chord notes must be strictly ascending".into()));
        }
        if inversion >= notes.len() {
            return Err(Error::Domain(format!(
                "inversion {inversion} out of range for {} notes",
                notes.len()
            )));
        }
        Ok(Self { notes, inversion })
    }

    pub fn notes(&self) -> &[Pitch] {
        &self.notes
    }

    pub fn inversion(&self) -> usize {
        self.inversion
    }

    pub fn classes(&self) -> Vec<PitchClass> {
        self.notes.iter().map(|p| p.class).collect()
    }
}

impl fmt::Display for VoicedChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.notes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Root-position chord stacked upward from `root` in `base_octave`.
pub fn build_chord(root: PitchClass, family: ChordFamily, base_octave: i32) -> VoicedChord {
    let root_spelling = root.spelling_or_default();
    let bass = Pitch::new(root, base_octave);
    let notes = family
        .degrees()
        .iter()
        .enumerate()
        .map(|(i, &deg)| {
            let pitch = bass.transpose(deg as i32);
            // chord tones sit on every other letter: root, third, fifth, seventh
            pitch.respell(root_spelling.relative(2 * i as i32, pitch.class.index()))
        })
        .collect();
    VoicedChord { notes, inversion: 0 }
}

/// Raises the lowest note an octave. After as many inversions as there are
/// notes the chord returns to root position, one octave higher.
pub fn invert(chord: &VoicedChord) -> VoicedChord {
    let mut notes = chord.notes.clone();
    let lowest = notes.remove(0);
    let raised = Pitch::new(lowest.class, lowest.octave + 1);
    let at = notes.partition_point(|p| p.midi() < raised.midi());
    notes.insert(at, raised);
    VoicedChord {
        inversion: (chord.inversion + 1) % notes.len(),
        notes,
    }
}
