//! Command implementations behind the `chromakit` binary.

pub mod bench;
pub mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use chromakit::audio::{
    read_wav, scale_pitches, synth, write_wav, AudioBuffer, SynthSpec, WavError, DEFAULT_SYNTH_RATE,
};
use chromakit::chroma::{chromagram, Band, DEFAULT_BAND_HI, DEFAULT_BAND_LO};
use chromakit::detect::{label_track, ChordTemplate, SilenceThreshold, TrackOptions, DEFAULT_MEDIAN_WINDOW};
use chromakit::stft::{stft, StftConfig, WindowFn, DEFAULT_HOP, DEFAULT_WINDOW};
use chromakit::theory::{
    build_chord, build_scale, enumerate_chords, invert, ChordFamily, Direction, Pitch, PitchClass, ScaleKind, ScaleSpec,
};
use chromakit::Error;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{default_sizes, parse_size, run_bench, DEFAULT_REPS};
use crate::output::{Matrix, OutputFormat, Shading};

pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Spectrogram heatmaps bottom out here.
pub const DB_FLOOR: f64 = -80.0;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or arguments.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or unusable input data.
    #[error("{0}")]
    Data(String),
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) | CliError::Io(_) => EXIT_DATA,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPowerOfTwo { .. }
            | Error::NonPositive { .. }
            | Error::InvalidScale { .. }
            | Error::InvalidConfig(_)
            | Error::InvalidBand { .. }
            | Error::InvalidMedianWindow(_)
            | Error::AmplitudeOverflow { .. }
            | Error::InvalidEvent { .. }
            | Error::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<WavError> for CliError {
    fn from(e: WavError) -> Self {
        CliError::Data(format!("wav: {e}"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chromakit",
    version,
    about = "Pitch theory, Fourier analysis and chord recognition"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Render test signals to 16-bit mono WAV.
    #[command(subcommand)]
    Synth(SynthCommand),
    /// Magnitude spectrogram of a WAV file.
    Spectrogram(SpectrogramArgs),
    /// Twelve-bin chromagram of a WAV file.
    Chromagram(ChromagramArgs),
    /// Chord segments of a WAV file as JSON.
    Chords(ChordsArgs),
    /// Time the naive DFT against the FFT.
    Bench(BenchArgs),
    /// Scale, chord and catalogue queries.
    #[command(subcommand)]
    Theory(TheoryCommand),
}

#[derive(Debug, Subcommand)]
pub enum SynthCommand {
    /// One note per scale degree, back to back.
    Scale {
        #[arg(long)]
        root: Pitch,
        #[arg(long, default_value = "major")]
        kind: ScaleKind,
        /// Custom step string such as RWWHWWWHR, overriding the kind's.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        descending: bool,
        /// Seconds per note.
        #[arg(long, default_value_t = 0.5)]
        note_dur: f64,
        #[arg(long, default_value_t = 0.5)]
        amplitude: f64,
        #[command(flatten)]
        common: SynthOut,
    },
    /// A sustained chord, each voice at amplitude 1/n.
    Chord {
        /// Root with octave, for example C4.
        #[arg(long)]
        root: Pitch,
        #[arg(long)]
        family: ChordFamily,
        #[arg(long, default_value_t = 0)]
        inversion: usize,
        #[arg(long, default_value_t = 2.0)]
        dur: f64,
        #[command(flatten)]
        common: SynthOut,
    },
    /// A single sine tone.
    Tone {
        #[arg(long)]
        pitch: Pitch,
        #[arg(long, default_value_t = 1.0)]
        dur: f64,
        #[arg(long, default_value_t = 0.5)]
        amplitude: f64,
        #[command(flatten)]
        common: SynthOut,
    },
}

#[derive(Debug, Args)]
pub struct SynthOut {
    #[arg(long, default_value_t = DEFAULT_SYNTH_RATE)]
    pub sample_rate: u32,
    /// WAV path, or `-` for stdout.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct StftArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: usize,
    #[arg(long, default_value_t = DEFAULT_HOP)]
    pub hop: usize,
    #[arg(long, default_value = "hann")]
    pub window_fn: WindowFn,
}

#[derive(Debug, Args)]
pub struct BandArgs {
    #[arg(long, default_value_t = DEFAULT_BAND_LO)]
    pub band_lo: f64,
    #[arg(long, default_value_t = DEFAULT_BAND_HI)]
    pub band_hi: f64,
}

#[derive(Debug, Args)]
pub struct MatrixOut {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Output path, or `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SpectrogramArgs {
    #[command(flatten)]
    pub stft: StftArgs,
    #[command(flatten)]
    pub out: MatrixOut,
}

#[derive(Debug, Args)]
pub struct ChromagramArgs {
    #[command(flatten)]
    pub stft: StftArgs,
    #[command(flatten)]
    pub band: BandArgs,
    #[command(flatten)]
    pub out: MatrixOut,
}

#[derive(Debug, Args)]
pub struct ChordsArgs {
    #[command(flatten)]
    pub stft: StftArgs,
    #[command(flatten)]
    pub band: BandArgs,
    /// Odd modal-filter length in frames; 1 disables smoothing.
    #[arg(long, default_value_t = DEFAULT_MEDIAN_WINDOW)]
    pub median: usize,
    /// Frames below this fraction of the loudest frame's energy are `N`.
    #[arg(long, default_value_t = 1e-4)]
    pub silence_threshold: f64,
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated powers of two; defaults to 2..=4096.
    #[arg(long, value_delimiter = ',', value_parser = parse_size)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_REPS)]
    pub reps: usize,
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum TheoryCommand {
    /// Spell a scale, for example `--root C --kind major`.
    Scale {
        #[arg(long)]
        root: PitchClass,
        #[arg(long, default_value = "major")]
        kind: ScaleKind,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        descending: bool,
    },
    /// Spell a chord, lowest note first.
    Chord {
        #[arg(long)]
        root: PitchClass,
        #[arg(long)]
        family: ChordFamily,
        #[arg(long, default_value_t = 0)]
        inversion: usize,
        /// Print octave numbers, starting the root in this octave.
        #[arg(long)]
        octave: Option<i32>,
    },
    /// List every spelled root, family and inversion form.
    Enumerate {
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug, Serialize)]
struct SegmentRecord {
    start_s: f64,
    end_s: f64,
    label: String,
    score: Option<f64>,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Synth(cmd) => run_synth(cmd, stdout),
        Command::Spectrogram(args) => run_spectrogram(args, stdout),
        Command::Chromagram(args) => run_chromagram(args, stdout),
        Command::Chords(args) => run_chords(args, stdout),
        Command::Bench(args) => run_bench_command(args, stdout),
        Command::Theory(cmd) => run_theory(cmd, stdout),
    }
}

fn scale_spec(kind: ScaleKind, pattern: Option<&str>) -> Result<ScaleSpec, CliError> {
    let spec = match pattern {
        Some(p) => ScaleSpec::from_pattern(kind, p)?,
        None => kind.spec(),
    };
    spec.validate()?;
    Ok(spec)
}

fn direction(descending: bool) -> Direction {
    if descending {
        Direction::Descending
    } else {
        Direction::Ascending
    }
}

fn run_synth(cmd: SynthCommand, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (spec, common) = match cmd {
        SynthCommand::Scale {
            root,
            kind,
            pattern,
            descending,
            note_dur,
            amplitude,
            common,
        } => {
            let spec = scale_spec(kind, pattern.as_deref())?;
            let pitches = scale_pitches(root, &spec, direction(descending))?;
            (
                SynthSpec::sequence(&pitches, note_dur, amplitude, common.sample_rate),
                common,
            )
        }
        SynthCommand::Chord {
            root,
            family,
            inversion,
            dur,
            common,
        } => {
            let mut chord = build_chord(root.class, family, root.octave);
            for _ in 0..inversion {
                chord = invert(&chord);
            }
            (SynthSpec::chord(&chord, dur, common.sample_rate), common)
        }
        SynthCommand::Tone {
            pitch,
            dur,
            amplitude,
            common,
        } => (SynthSpec::tone(pitch, dur, amplitude, common.sample_rate), common),
    };
    let buffer: AudioBuffer<f64> = synth(&spec)?;
    let bytes = write_wav(&buffer);
    if is_stdout(&common.out) {
        stdout.write_all(&bytes)?;
    } else {
        fs::write(&common.out, &bytes)?;
        writeln!(
            stdout,
            "wrote {}: {:.3} s, {} samples at {} Hz",
            common.out.display(),
            buffer.duration(),
            buffer.len(),
            buffer.sample_rate
        )?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<AudioBuffer<f64>, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(read_wav(&bytes)?)
}

fn stft_config(args: &StftArgs, sample_rate: u32) -> StftConfig<f64> {
    StftConfig {
        window_size: args.window,
        hop: args.hop,
        window_fn: args.window_fn,
        sample_rate: sample_rate as f64,
    }
}

fn run_spectrogram(args: SpectrogramArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let audio = load(&args.stft.input)?;
    let config = stft_config(&args.stft, audio.sample_rate);
    config.validate()?;
    let spec = stft(&audio.samples, &config)?;
    let axis = spec.frequency_axis()?;
    let matrix = Matrix {
        columns: (0..config.bins())
            .map(|k| format!("{}", axis.bin_frequency(k)))
            .collect(),
        frame_times: spec.frame_times,
        values: spec.frames,
    };
    emit(&args.out.out, stdout, |w| {
        matrix.write(args.out.format, Shading::Decibels { floor_db: DB_FLOOR }, w)
    })
}

fn chroma_matrix(
    stft_args: &StftArgs,
    band: &BandArgs,
) -> Result<(AudioBuffer<f64>, chromakit::Chromagram64), CliError> {
    let audio = load(&stft_args.input)?;
    let config = stft_config(stft_args, audio.sample_rate);
    config.validate()?;
    let band = Band::new(band.band_lo, band.band_hi);
    band.validate(&config.frequency_axis()?)?;
    let spec = stft(&audio.samples, &config)?;
    let chroma = chromagram(&spec, &band)?;
    Ok((audio, chroma))
}

fn run_chromagram(args: ChromagramArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (_, chroma) = chroma_matrix(&args.stft, &args.band)?;
    let matrix = Matrix {
        columns: PitchClass::all().map(|c| c.sharp_name().to_string()).collect(),
        frame_times: chroma.frame_times,
        values: chroma.frames.iter().map(|c| c.intensity.to_vec()).collect(),
    };
    emit(&args.out.out, stdout, |w| {
        matrix.write(args.out.format, Shading::Linear, w)
    })
}

fn run_chords(args: ChordsArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.silence_threshold.is_nan() || args.silence_threshold < 0.0 {
        return Err(CliError::Usage(format!(
            "--silence-threshold must be non-negative, got {}",
            args.silence_threshold
        )));
    }
    let (_, chroma) = chroma_matrix(&args.stft, &args.band)?;
    let options = TrackOptions {
        median_window: args.median,
        silence: SilenceThreshold::Relative(args.silence_threshold),
    };
    let segments = label_track(&chroma, &ChordTemplate::all(), &options)?;
    let records: Vec<SegmentRecord> = segments
        .iter()
        .map(|s| SegmentRecord {
            start_s: s.start,
            end_s: s.end,
            label: s.label.name(),
            score: s.label.score(),
        })
        .collect();
    emit(&args.out, stdout, |w| {
        serde_json::to_writer_pretty(&mut *w, &records).map_err(|e| CliError::Data(e.to_string()))?;
        writeln!(w)?;
        Ok(())
    })
}

fn run_bench_command(args: BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let sizes = if args.sizes.is_empty() {
        default_sizes()
    } else {
        args.sizes
    };
    let rows = run_bench(&sizes, args.reps)?;
    emit(&args.out, stdout, |w| {
        let mut csv = csv::Writer::from_writer(w);
        for row in &rows {
            csv.serialize(row).map_err(|e| CliError::Data(e.to_string()))?;
        }
        csv.flush()?;
        Ok(())
    })
}

fn run_theory(cmd: TheoryCommand, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        TheoryCommand::Scale {
            root,
            kind,
            pattern,
            descending,
        } => {
            let spec = scale_spec(kind, pattern.as_deref())?;
            let classes = build_scale(root, &spec, direction(descending))?;
            writeln!(stdout, "{}", join(classes.iter()))?;
        }
        TheoryCommand::Chord {
            root,
            family,
            inversion,
            octave,
        } => {
            let mut chord = build_chord(root, family, octave.unwrap_or(4));
            for _ in 0..inversion {
                chord = invert(&chord);
            }
            match octave {
                Some(_) => writeln!(stdout, "{chord}")?,
                None => writeln!(stdout, "{}", join(chord.notes().iter().map(|p| p.class)))?,
            }
        }
        TheoryCommand::Enumerate { count_only } => {
            let catalog = enumerate_chords();
            if !count_only {
                for e in &catalog.entries {
                    writeln!(stdout, "{} {} {}", e.root, e.family, e.inversion)?;
                }
            }
            writeln!(stdout, "{}", catalog.count())?;
        }
    }
    Ok(())
}

fn join<I: IntoIterator>(items: I) -> String
where
    I::Item: std::fmt::Display,
{
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn is_stdout(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn emit(
    path: &Path,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    if is_stdout(path) {
        body(stdout)?;
        stdout.flush()?;
    } else {
        let mut file = io::BufWriter::new(fs::File::create(path)?);
        body(&mut file)?;
        file.flush()?;
    }
    Ok(())
}
