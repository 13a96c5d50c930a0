use std::fmt;
use std::str::FromStr;

use super::pitch::{PitchClass, Spelling};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalStep {
    /// Half step, one semitone.
    H,
    /// Whole step, two semitones.
    W,
    /// Augmented second, three semitones.
    A,
}

impl IntervalStep {
    pub fn semitones(self) -> u32 {
        match self {
            IntervalStep::H => 1,
            IntervalStep::W => 2,
            IntervalStep::A => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScaleKind {
    Chromatic,
    Major,
    Minor,
    Diminished,
    Augmented,
}

impl ScaleKind {
    pub const ALL: [ScaleKind; 5] = [
        ScaleKind::Chromatic,
        ScaleKind::Major,
        ScaleKind::Minor,
        ScaleKind::Diminished,
        ScaleKind::Augmented,
    ];

    /// Defining step pattern, delimited by the root `R` at both ends.
    pub fn pattern(self) -> &'static str {
        match self {
            ScaleKind::Chromatic => "RHHHHHHHHHHHHR",
            ScaleKind::Major => "RWWHWWWHR",
            ScaleKind::Minor => "RWHWWHWWR",
            ScaleKind::Diminished => "RHWHWHWHWR",
            ScaleKind::Augmented => "RAHAHAHR",
        }
    }

    pub fn spec(self) -> ScaleSpec {
        ScaleSpec::from_pattern(self, self.pattern()).expect("built-in patterns are well formed")
    }

    pub fn name(self) -> &'static str {
        match self {
            ScaleKind::Chromatic => "chromatic",
            ScaleKind::Major => "major",
            ScaleKind::Minor => "minor",
            ScaleKind::Diminished => "diminished",
            ScaleKind::Augmented => "augmented",
        }
    }
}

impl fmt::Display for ScaleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScaleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScaleKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "scale kind",
                input: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

/// A scale family and its ascending interval sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleSpec {
    pub kind: ScaleKind,
    pub steps: Vec<IntervalStep>,
}

impl ScaleSpec {
    /// Parses a step string such as `RWWHWWWHR`. The `R` delimiters are
    /// optional. The result is not validated.
    pub fn from_pattern(kind: ScaleKind, pattern: &str) -> Result<Self> {
        let body = pattern.trim();
        let body = body.strip_prefix('R').unwrap_or(body);
        let body = body.strip_suffix('R').unwrap_or(body);
        let steps = body
            .chars()
            .map(|c| match c {
                'H' => Ok(IntervalStep::H),
                'W' => Ok(IntervalStep::W),
                'A' => Ok(IntervalStep::A),
                _ => Err(Error::Parse {
                    what: "interval pattern",
                    input: pattern.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind, steps })
    }

    pub fn span(&self) -> u32 {
        self.steps.iter().map(|s| s.semitones()).sum()
    }

    /// Steps must span exactly one octave so the scale closes on its root.
    pub fn validate(&self) -> Result<()> {
        match self.span() {
            12 => Ok(()),
            sum => Err(Error::InvalidScale { sum }),
        }
    }
}

/// Walks `spec` from `root`, returning every degree including the closing
/// root (so a major scale has 8 entries and the chromatic scale 13).
///
/// Descending scales apply the steps in reverse order, moving down. Seven-note
/// scales are spelled with one letter per degree (C minor gives E♭, A♭, B♭);
/// other scales keep the root's accidental preference.
pub fn build_scale(root: PitchClass, spec: &ScaleSpec, direction: Direction) -> Result<Vec<PitchClass>> {
    spec.validate()?;
    let root_spelling = root.spelling_or_default();
    let heptatonic = spec.steps.len() == 7;
    let prefer_flats = root_spelling.accidental == super::Accidental::Flat;

    let (sign, steps): (i32, Vec<IntervalStep>) = match direction {
        Direction::Ascending => (1, spec.steps.clone()),
        Direction::Descending => (-1, spec.steps.iter().rev().copied().collect()),
    };

    let mut out = Vec::with_capacity(steps.len() + 1);
    out.push(PitchClass::spelled(root_spelling));
    let mut offset = 0i32;
    for (degree, step) in steps.iter().enumerate() {
        offset += sign * step.semitones() as i32;
        let class = root.transpose(offset);
        let spelling = if degree + 1 == steps.len() {
            Some(root_spelling)
        } else if heptatonic {
            root_spelling.relative(sign * (degree as i32 + 1), class.index())
        } else {
            None
        };
        let spelling = spelling.unwrap_or_else(|| fallback_spelling(class.index(), prefer_flats));
        out.push(PitchClass::spelled(spelling));
    }
    Ok(out)
}

fn fallback_spelling(index: u8, prefer_flats: bool) -> Spelling {
    let sharp = Spelling::default_for(index);
    if prefer_flats && sharp.accidental == super::Accidental::Sharp {
        Spelling::new(sharp.letter.offset(1), super::Accidental::Flat)
    } else {
        sharp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(scale: &[PitchClass]) -> Vec<String> {
        scale.iter().map(|p| p.to_string()).collect()
    }

    fn c() -> PitchClass {
        "C".parse().unwrap()
    }

    #[test]
    fn builtin_scales_span_an_octave() {
        for kind in ScaleKind::ALL {
            assert_eq!(kind.spec().span(), 12, "{kind}");
        }
    }

    #[test]
    fn c_major() {
        let s = build_scale(c(), &ScaleKind::Major.spec(), Direction::Ascending).unwrap();
        assert_eq!(names(&s), ["C", "D", "E", "F", "G", "A", "B", "C"]);
    }

    #[test]
    fn c_minor_follows_the_step_table() {
        let s = build_scale(c(), &ScaleKind::Minor.spec(), Direction::Ascending).unwrap();
        assert_eq!(names(&s), ["C", "D", "E♭", "F", "G", "A♭", "B♭", "C"]);
    }

    #[test]
    fn chromatic_has_thirteen_entries() {
        let s = build_scale(c(), &ScaleKind::Chromatic.spec(), Direction::Ascending).unwrap();
        assert_eq!(s.len(), 13);
        assert_eq!(s.first(), s.last());
        let idx: Vec<u8> = s.iter().map(|p| p.index()).collect();
        assert_eq!(idx, [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0]);
    }

    #[test]
    fn descending_major() {
        let s = build_scale(c(), &ScaleKind::Major.spec(), Direction::Descending).unwrap();
        assert_eq!(names(&s), ["C", "B", "A", "G", "F", "E", "D", "C"]);
    }

    #[test]
    fn flat_root_spelling() {
        let bb: PitchClass = "Bb".parse().unwrap();
        let s = build_scale(bb, &ScaleKind::Major.spec(), Direction::Ascending).unwrap();
        assert_eq!(names(&s), ["B♭", "C", "D", "E♭", "F", "G", "A", "B♭"]);
        let s = build_scale(bb, &ScaleKind::Chromatic.spec(), Direction::Ascending).unwrap();
        assert_eq!(s[1].to_string(), "B");
        assert_eq!(s[2].to_string(), "C");
        assert_eq!(s[3].to_string(), "D♭");
    }

    #[test]
    fn malformed_spec_is_rejected() {
        let bad = ScaleSpec::from_pattern(ScaleKind::Major, "RWWHWWWR").unwrap();
        assert!(matches!(
            build_scale(c(), &bad, Direction::Ascending),
            Err(Error::InvalidScale { sum: 11 })
        ));
        assert!(ScaleSpec::from_pattern(ScaleKind::Major, "RWXR").is_err());
    }

    #[test]
    fn both_directions_visit_the_same_classes() {
        for kind in ScaleKind::ALL {
            for root in PitchClass::all() {
                let spec = kind.spec();
                let mut up: Vec<u8> = build_scale(root, &spec, Direction::Ascending)
                    .unwrap()
                    .iter()
                    .map(|p| p.index())
                    .collect();
                let mut down: Vec<u8> = build_scale(root, &spec, Direction::Descending)
                    .unwrap()
                    .iter()
                    .map(|p| p.index())
                    .collect();
                up.sort_unstable();
                up.dedup();
                down.sort_unstable();
                down.dedup();
                assert_eq!(up, down, "{kind} on {root}");
            }
        }
    }
}
