use super::chord::{build_chord, invert, ChordFamily, VoicedChord};
use super::pitch::{Accidental, Letter, PitchClass, Spelling};

/// Seven letters, each natural, sharp or flat.
pub const SPELLED_ROOTS: usize = 21;
/// Inversion forms counted per triad family.
pub const TRIAD_INVERSION_FORMS: u8 = 2;
/// Inversion forms counted per seventh family.
pub const SEVENTH_INVERSION_FORMS: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub root: Spelling,
    pub family: ChordFamily,
    /// 0 is root position.
    pub inversion: u8,
}

impl CatalogEntry {
    pub fn voiced(&self, base_octave: i32) -> VoicedChord {
        let mut chord = build_chord(PitchClass::spelled(self.root), self.family, base_octave);
        for _ in 0..self.inversion {
            chord = invert(&chord);
        }
        chord
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl ChordCatalog {
    pub fn count(&self) -> usize {
        self.entries.len()
    }
}

/// Every spelled root, family and counted inversion form.
///
/// Triads contribute two forms each and seventh chords three, which gives
/// 21 × (4·2 + 3·3) = 357 entries.
pub fn enumerate_chords() -> ChordCatalog {
    let mut entries = Vec::with_capacity(SPELLED_ROOTS * 17);
    for letter in Letter::ALL {
        for accidental in Accidental::ALL {
            let root = Spelling::new(letter, accidental);
            for family in ChordFamily::ALL {
                let forms = if family.is_seventh() {
                    SEVENTH_INVERSION_FORMS
                } else {
                    TRIAD_INVERSION_FORMS
                };
                entries.extend((0..forms).map(|inversion| CatalogEntry {
                    root,
                    family,
                    inversion,
                }));
            }
        }
    }
    ChordCatalog { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_count() {
        let catalog = enumerate_chords();
        assert_eq!(catalog.count(), 357);
        assert_eq!(catalog.count(), 21 * (4 * 2 + 3 * 3));
        let unique: HashSet<_> = catalog.entries.iter().collect();
        assert_eq!(unique.len(), 357);
    }

    #[test]
    fn per_root_contributions() {
        let catalog = enumerate_chords();
        let c = Spelling::new(Letter::C, Accidental::Natural);
        let for_c: Vec<_> = catalog.entries.iter().filter(|e| e.root == c).collect();
        let triads = for_c.iter().filter(|e| !e.family.is_seventh()).count();
        let sevenths = for_c.iter().filter(|e| e.family.is_seventh()).count();
        assert_eq!(triads, 8);
        assert_eq!(sevenths, 9);
        let roots: HashSet<_> = catalog.entries.iter().map(|e| e.root).collect();
        assert_eq!(roots.len(), SPELLED_ROOTS);
    }

    #[test]
    fn entries_voice_with_their_inversion() {
        let entry = CatalogEntry {
            root: "Eb".parse().unwrap(),
            family: ChordFamily::Dom7,
            inversion: 2,
        };
        let chord = entry.voiced(3);
        assert_eq!(chord.inversion(), 2);
        assert_eq!(chord.to_string(), "B♭3 D♭4 E♭4 G4");
    }
}
