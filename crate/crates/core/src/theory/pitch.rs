use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::{Error, Real, Result};

/// Concert pitch for A4.
pub const A4_HZ: f64 = 440.0;

const SEMITONES: i32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    C,
    D,
    E,
    F,
    G,
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
        Letter::A,
        Letter::B,
    ];

    /// Semitone offset of the natural note above C.
    pub fn semitone(self) -> i32 {
        match self {
            Letter::C => 0,
            Letter::D => 2,
            Letter::E => 4,
            Letter::F => 5,
            Letter::G => 7,
            Letter::A => 9,
            Letter::B => 11,
        }
    }

    pub fn position(self) -> usize {
        self as usize
    }

    /// The letter `steps` staff positions above (or below, if negative) this one.
    pub fn offset(self, steps: i32) -> Letter {
        Letter::ALL[(self.position() as i32 + steps).rem_euclid(7) as usize]
    }

    fn from_char(c: char) -> Option<Letter> {
        Some(match c.to_ascii_uppercase() {
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            'A' => Letter::A,
            'B' => Letter::B,
            _ => return None,
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ['C', 'D', 'E', 'F', 'G', 'A', 'B'][self.position()];
        write!(f, "{c}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Accidental {
    Natural,
    Sharp,
    Flat,
}

impl Accidental {
    pub const ALL: [Accidental; 3] = [Accidental::Natural, Accidental::Sharp, Accidental::Flat];

    pub fn shift(self) -> i32 {
        match self {
            Accidental::Natural => 0,
            Accidental::Sharp => 1,
            Accidental::Flat => -1,
        }
    }

    fn from_shift(shift: i32) -> Option<Accidental> {
        match shift {
            0 => Some(Accidental::Natural),
            1 => Some(Accidental::Sharp),
            -1 => Some(Accidental::Flat),
            _ => None,
        }
    }
}

/// A written note name such as `E♭` or `F♯`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spelling {
    pub letter: Letter,
    pub accidental: Accidental,
}

impl Spelling {
    pub const fn new(letter: Letter, accidental: Accidental) -> Self {
        Self { letter, accidental }
    }

    /// Unreduced semitone offset from C; `B♯` gives 12 and `C♭` gives -1.
    pub fn raw_semitone(self) -> i32 {
        self.letter.semitone() + self.accidental.shift()
    }

    pub fn index(self) -> u8 {
        self.raw_semitone().rem_euclid(SEMITONES) as u8
    }

    /// Sharp-preferring spelling of a pitch class index.
    pub fn default_for(index: u8) -> Spelling {
        use Accidental::*;
        use Letter::*;
        const TABLE: [Spelling; 12] = [
            Spelling::new(C, Natural),
            Spelling::new(C, Sharp),
            Spelling::new(D, Natural),
            Spelling::new(D, Sharp),
            Spelling::new(E, Natural),
            Spelling::new(F, Natural),
            Spelling::new(F, Sharp),
            Spelling::new(G, Natural),
            Spelling::new(G, Sharp),
            Spelling::new(A, Natural),
            Spelling::new(A, Sharp),
            Spelling::new(B, Natural),
        ];
        TABLE[index as usize % 12]
    }

    /// Spell `index` on the letter `letter_steps` above this spelling, if a
    /// single accidental suffices.
    pub(crate) fn relative(self, letter_steps: i32, index: u8) -> Option<Spelling> {
        let letter = self.letter.offset(letter_steps);
        let shift = (index as i32 - letter.semitone() + 6).rem_euclid(SEMITONES) - 6;
        Accidental::from_shift(shift).map(|acc| Spelling::new(letter, acc))
    }

    pub fn ascii(self) -> String {
        let acc = match self.accidental {
            Accidental::Natural => "",
            Accidental::Sharp => "#",
            Accidental::Flat => "b",
        };
        format!("{}{}", self.letter, acc)
    }
}

impl fmt::Display for Spelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let acc = match self.accidental {
            Accidental::Natural => "",
            Accidental::Sharp => "♯",
            Accidental::Flat => "♭",
        };
        write!(f, "{}{}", self.letter, acc)
    }
}

/// Parses a letter plus optional accidental, returning the rest of the input.
fn parse_spelling(s: &str) -> Option<(Spelling, &str)> {
    let mut chars = s.chars();
    let letter = Letter::from_char(chars.next()?)?;
    let rest = chars.as_str();
    let (accidental, rest) = match rest.chars().next() {
        Some('#') | Some('♯') => (Accidental::Sharp, &rest[rest.chars().next()?.len_utf8()..]),
        Some('b') | Some('♭') => (Accidental::Flat, &rest[rest.chars().next()?.len_utf8()..]),
        _ => (Accidental::Natural, rest),
    };
    Some((Spelling::new(letter, accidental), rest))
}

impl FromStr for Spelling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_spelling(s.trim()) {
            Some((spelling, "")) => Ok(spelling),
            _ => Err(Error::Parse {
                what: "note name",
                input: s.to_string(),
            }),
        }
    }
}

/// Octave-folded note identity. Equality, ordering and hashing use only the
/// index; the optional spelling is presentation.
#[derive(Clone, Copy, Debug)]
pub struct PitchClass {
    index: u8,
    spelling: Option<Spelling>,
}

impl PitchClass {
    pub const COUNT: usize = 12;

    /// Reduces `index` modulo 12.
    pub fn new(index: i32) -> Self {
        Self {
            index: index.rem_euclid(SEMITONES) as u8,
            spelling: None,
        }
    }

    pub fn spelled(spelling: Spelling) -> Self {
        Self {
            index: spelling.index(),
            spelling: Some(spelling),
        }
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn spelling(self) -> Option<Spelling> {
        self.spelling
    }

    /// The given spelling, or the sharp-preferring one.
    pub fn spelling_or_default(self) -> Spelling {
        self.spelling.unwrap_or_else(|| Spelling::default_for(self.index))
    }

    pub fn transpose(self, semitones: i32) -> Self {
        Self::new(self.index as i32 + semitones)
    }

    /// Sharp-only ASCII name (`C#`), used for detection labels and headers.
    pub fn sharp_name(self) -> String {
        Spelling::default_for(self.index).ascii()
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..SEMITONES).map(PitchClass::new)
    }
}

impl PartialEq for PitchClass {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
    }
}

impl Eq for PitchClass {}

impl Hash for PitchClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.index.hash(state);
    }
}

impl PartialOrd for PitchClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PitchClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index.cmp(&other.index)
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spelling_or_default())
    }
}

impl FromStr for PitchClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Spelling>().map(PitchClass::spelled)
    }
}

/// Octave-qualified note in scientific pitch notation (A4 = 440 Hz).
///
/// The octave counts from C, so `B3` is immediately followed by `C4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pitch {
    pub class: PitchClass,
    pub octave: i32,
}

impl Pitch {
    pub fn new(class: PitchClass, octave: i32) -> Self {
        Self { class, octave }
    }

    /// Builds a pitch from a spelling, carrying `B♯3` into `C4`, `C♭4` into `B3`.
    pub fn spelled(spelling: Spelling, written_octave: i32) -> Self {
        let raw = spelling.raw_semitone();
        Self {
            class: PitchClass::spelled(spelling),
            octave: written_octave + raw.div_euclid(SEMITONES),
        }
    }

    pub fn from_midi(number: i32) -> Self {
        Self::new(PitchClass::new(number), number.div_euclid(SEMITONES) - 1)
    }

    /// MIDI note number; C4 = 60, A4 = 69.
    pub fn midi(self) -> i32 {
        (self.octave + 1) * SEMITONES + self.class.index() as i32
    }

    /// Signed semitone distance from A4.
    pub fn semitones_from_a4(self) -> i32 {
        self.midi() - 69
    }

    pub fn transpose(self, semitones: i32) -> Self {
        Self::from_midi(self.midi() + semitones)
    }

    /// The same pitch with its class spelled as given (index must match).
    pub(crate) fn respell(mut self, spelling: Option<Spelling>) -> Self {
        if let Some(s) = spelling {
            debug_assert_eq!(s.index(), self.class.index());
            self.class = PitchClass::spelled(s);
        }
        self
    }

    fn written_octave(self) -> i32 {
        let raw = self.class.spelling_or_default().raw_semitone();
        self.octave - raw.div_euclid(SEMITONES)
    }
}

impl PartialOrd for Pitch {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pitch {
    fn cmp(&self, other: &Self) -> Ordering {
        self.midi().cmp(&other.midi())
    }
}

impl fmt::Display for Pitch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, self.written_octave())
    }
}

impl FromStr for Pitch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "pitch",
            input: s.to_string(),
        };
        let (spelling, rest) = parse_spelling(s.trim()).ok_or_else(err)?;
        let octave: i32 = rest.parse().map_err(|_| err())?;
        Ok(Pitch::spelled(spelling, octave))
    }
}

/// Equal-tempered frequency of `pitch` given the A4 `reference` in Hz.
///
/// Each semitone multiplies the frequency by 2^(1/12). The octave part of the
/// distance is applied as an exact power of two, so pitches an octave apart
/// differ by a factor of exactly 2.
pub fn pitch_to_frequency<T: Real>(pitch: Pitch, reference: T) -> T {
    debug_assert!(reference > T::zero());
    let semis = pitch.semitones_from_a4();
    let octaves = semis.div_euclid(SEMITONES);
    let within = semis.rem_euclid(SEMITONES);
    let twelfth = T::of(within as f64) / T::of(12.0);
    reference * T::of(2.0).powf(twelfth) * T::of(2.0).powi(octaves)
}

/// Nearest equal-tempered pitch to `frequency` and the signed deviation in
/// cents, which lies in `[-50, 50)`; an exact quarter-tone rounds up.
pub fn frequency_to_pitch<T: Real>(frequency: T, reference: T) -> Result<(Pitch, T)> {
    if !(frequency > T::zero()) {
        return Err(Error::NonPositive {
            what: "frequency",
            value: frequency.to_f64_lossy(),
        });
    }
    if !(reference > T::zero()) {
        return Err(Error::NonPositive {
            what: "reference frequency",
            value: reference.to_f64_lossy(),
        });
    }
    let semis = T::of(12.0) * (frequency / reference).log2();
    let nearest = (semis + T::of(0.5)).floor();
    let cents = T::of(100.0) * (semis - nearest);
    let offset = nearest
        .to_i32()
        .ok_or_else(|| Error::Domain(format!("frequency {} Hz is out of range", frequency)))?;
    Ok((Pitch::from_midi(69 + offset), cents))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pitch {
        s.parse().unwrap()
    }

    #[test]
    fn a4_is_reference() {
        assert_eq!(pitch_to_frequency(p("A4"), A4_HZ), 440.0);
        assert_eq!(pitch_to_frequency(p("A5"), A4_HZ), 880.0);
        assert_eq!(pitch_to_frequency(p("A3"), 440.0f32), 220.0);
    }

    #[test]
    fn a_sharp_4() {
        // 440 * 2^(1/12), 40-digit reference value
        let expected = 466.163_761_518_09_f64;
        let got = pitch_to_frequency(p("A#4"), A4_HZ);
        assert!(((got - expected) / expected).abs() < 1e-15, "{got}");
        assert_eq!(got, pitch_to_frequency(p("Bb4"), A4_HZ));
    }

    #[test]
    fn nearest_pitch_and_cents() {
        let (pitch, cents) = frequency_to_pitch(440.0, A4_HZ).unwrap();
        assert_eq!((pitch, cents), (p("A4"), 0.0));
        let (pitch, cents) = frequency_to_pitch(880.0, A4_HZ).unwrap();
        assert_eq!((pitch, cents), (p("A5"), 0.0));
        // 1200 log2(450/440)
        let (pitch, cents) = frequency_to_pitch(450.0, A4_HZ).unwrap();
        assert_eq!(pitch, p("A4"));
        assert!((cents - 38.905_773_230_852_945).abs() < 1e-9, "{cents}");
    }

    #[test]
    fn quarter_tone_rounds_up() {
        let f = 440.0 * 2f64.powf(0.5 / 12.0);
        let (pitch, cents) = frequency_to_pitch(f, A4_HZ).unwrap();
        // either exactly -50 on A#4 or just under +50 on A4, never +50
        assert!((-50.0..50.0).contains(&cents));
        assert!(pitch == p("A#4") || cents > 49.99);
    }

    #[test]
    fn non_positive_frequency_is_rejected() {
        assert!(frequency_to_pitch(0.0, A4_HZ).is_err());
        assert!(frequency_to_pitch(-3.0, A4_HZ).is_err());
        assert!(frequency_to_pitch(f64::NAN, A4_HZ).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("C4").midi(), 60);
        assert_eq!(p("c-1").midi(), 0);
        assert_eq!(p("B#3"), p("C4"));
        assert_eq!(p("Cb4"), p("B3"));
        assert_eq!(p("B#3").to_string(), "B♯3");
        assert_eq!(p("Eb4").to_string(), "E♭4");
        assert_eq!(Pitch::from_midi(61).to_string(), "C♯4");
        assert!("H4".parse::<Pitch>().is_err());
        assert!("C".parse::<Pitch>().is_err());
        assert!("C#x".parse::<PitchClass>().is_err());
    }

    #[test]
    fn enharmonic_classes_are_equal() {
        let cs: PitchClass = "C#".parse().unwrap();
        let db: PitchClass = "D♭".parse().unwrap();
        assert_eq!(cs, db);
        assert_ne!(cs.to_string(), db.to_string());
        assert_eq!(PitchClass::new(-1).index(), 11);
        assert_eq!(PitchClass::new(25).index(), 1);
    }

    #[test]
    fn relative_spelling() {
        let c = Spelling::new(Letter::C, Accidental::Natural);
        assert_eq!(c.relative(2, 3).unwrap().to_string(), "E♭");
        assert_eq!(c.relative(4, 8).unwrap().to_string(), "G♯");
        assert_eq!(c.relative(6, 10).unwrap().to_string(), "B♭");
        assert!(c.relative(1, 4).is_none());
    }
}
