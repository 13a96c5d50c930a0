//! Naive DFT versus FFT wall-clock comparison.

use std::hint::black_box;
use std::time::{Duration, Instant};

use chromakit::transform::{dft_naive, speedup_ratio, ComplexSequence, FftPlan};
use chromakit::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::CliError;

pub const DEFAULT_REPS: usize = 5;
const DEFAULT_MAX_EXPONENT: u32 = 12;

/// Each repetition repeats the transform until at least this much time has
/// passed, so tiny sizes are not lost in timer resolution.
const MIN_SAMPLE_TIME: Duration = Duration::from_millis(2);

pub fn default_sizes() -> Vec<usize> {
    (1..=DEFAULT_MAX_EXPONENT).map(|e| 1usize << e).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub t_naive_s: f64,
    pub t_fft_s: f64,
    pub ratio: f64,
    pub predicted_ratio: f64,
}

pub fn parse_size(s: &str) -> Result<usize, String> {
    let n: usize = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    if n < 2 || !n.is_power_of_two() {
        return Err(format!("{n} is not a power of two of at least 2"));
    }
    Ok(n)
}

pub fn run_bench(sizes: &[usize], reps: usize) -> Result<Vec<BenchRow>, CliError> {
    if reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    sizes
        .iter()
        .map(|&n| {
            parse_size(&n.to_string()).map_err(CliError::Usage)?;
            let input: Vec<Complex64> = (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let seq = ComplexSequence::new(input.clone());
            let plan = FftPlan::<f64>::new(n)?;
            let t_naive_s = median_time(reps, || {
                black_box(dft_naive(black_box(&seq)).expect("non-empty input"));
            });
            let mut buf = input.clone();
            let t_fft_s = median_time(reps, || {
                buf.copy_from_slice(&input);
                plan.forward(black_box(&mut buf)).expect("plan length matches");
            });
            Ok(BenchRow {
                n,
                t_naive_s,
                t_fft_s,
                ratio: t_naive_s / t_fft_s,
                predicted_ratio: speedup_ratio(n as u64)?,
            })
        })
        .collect()
}

/// Median over `reps` of the mean per-call time.
fn median_time(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            let mut calls = 0u32;
            loop {
                f();
                calls += 1;
                let elapsed = start.elapsed();
                if elapsed >= MIN_SAMPLE_TIME {
                    return elapsed.as_secs_f64() / calls as f64;
                }
            }
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}
