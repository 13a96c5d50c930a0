//! Equal-temperament music theory: pitches, scales, chords and inversions.
//!
//! Pitch classes are indexed from C (`0 = C`, `9 = A`, `11 = B`). Spelled
//! names (C♯ vs D♭) are carried along for display and for the spelled chord
//! catalog, but never affect equality: two pitch classes with the same index
//! are the same sound.

mod chord;
mod enumerate;
mod pitch;
mod scale;

pub use chord::{build_chord, invert, ChordFamily, VoicedChord};
pub use enumerate::{
    enumerate_chords, CatalogEntry, ChordCatalog, SEVENTH_INVERSION_FORMS, SPELLED_ROOTS, TRIAD_INVERSION_FORMS,
};
pub use pitch::{frequency_to_pitch, pitch_to_frequency, Accidental, Letter, Pitch, PitchClass, Spelling, A4_HZ};
pub use scale::{build_scale, Direction, IntervalStep, ScaleKind, ScaleSpec};
