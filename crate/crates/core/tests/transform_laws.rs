use std::f64::consts::TAU;

use chromakit::transform::{dft_naive, fft, frequency_axis, ifft, ComplexSequence, Spectrum};
use chromakit::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sequence(rng: &mut impl Rng, n: usize) -> ComplexSequence<f64> {
    ComplexSequence::new(
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

/// ‖a − b‖∞ / ‖b‖∞
fn rel_err(a: &[Complex64], b: &[Complex64]) -> f64 {
    let scale = b.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let diff = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

fn abs_err(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn fft_matches_naive_for_all_power_of_two_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for log_n in 0..=10 {
        let n = 1 << log_n;
        for _ in 0..5 {
            let x = random_sequence(&mut rng, n);
            let fast = fft(&x).unwrap();
            let slow = dft_naive(&x).unwrap();
            assert!(rel_err(&fast.bins, &slow.bins) <= 1e-9, "N = {n}");
        }
    }
}

#[test]
fn random_1024_bin_for_bin() {
    let mut rng = ChaCha8Rng::seed_from_u64(1024);
    let x = random_sequence(&mut rng, 1024);
    let fast = fft(&x).unwrap();
    let slow = dft_naive(&x).unwrap();
    for (k, (a, b)) in fast.bins.iter().zip(&slow.bins).enumerate() {
        assert!((a - b).norm() < 1e-10, "bin {k}");
    }
}

#[test]
fn round_trip_up_to_2_pow_16() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for log_n in [0, 1, 5, 8, 12, 16] {
        let x = random_sequence(&mut rng, 1 << log_n);
        let back = ifft(&fft(&x).unwrap()).unwrap();
        assert!(abs_err(&back.samples, &x.samples) <= 1e-9, "N = 2^{log_n}");
    }
}

#[test]
fn spectral_laws() {
    for n in [8usize, 64, 1024] {
        let mut impulse = vec![0.0; n];
        impulse[0] = 1.0;
        let f = fft(&ComplexSequence::from_real(&impulse)).unwrap();
        assert!(abs_err(&f.bins, &vec![Complex64::new(1.0, 0.0); n]) <= 1e-12);

        for k0 in [1, n / 4 - 1, n / 2 - 1].into_iter().filter(|&k| k > 0) {
            let cos: Vec<f64> = (0..n).map(|i| (TAU * (k0 * i) as f64 / n as f64).cos()).collect();
            let sin: Vec<f64> = (0..n).map(|i| (TAU * (k0 * i) as f64 / n as f64).sin()).collect();
            let fc = fft(&ComplexSequence::from_real(&cos)).unwrap();
            let fs = fft(&ComplexSequence::from_real(&sin)).unwrap();
            let half = n as f64 / 2.0;
            for k in 0..n {
                let (want_c, want_s) = if k == k0 {
                    (Complex64::new(half, 0.0), Complex64::new(0.0, -half))
                } else if k == n - k0 {
                    (Complex64::new(half, 0.0), Complex64::new(0.0, half))
                } else {
                    (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
                };
                assert!((fc.bins[k] - want_c).norm() <= 1e-9, "cos N={n} k0={k0} k={k}");
                assert!((fs.bins[k] - want_s).norm() <= 1e-9, "sin N={n} k0={k0} k={k}");
            }
        }
    }
}

#[test]
fn dc_spike_inverts_to_constant() {
    let n = 32;
    let mut bins = vec![Complex64::new(0.0, 0.0); n];
    bins[0] = Complex64::new(n as f64, 0.0);
    let x = ifft(&Spectrum::new(bins)).unwrap();
    assert!(abs_err(&x.samples, &vec![Complex64::new(1.0, 0.0); n]) < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linearity(seed in any::<u64>(), log_n in 0u32..11, ar in -2.0f64..2.0, ai in -2.0f64..2.0, br in -2.0f64..2.0, bi in -2.0f64..2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 1 << log_n;
        let x = random_sequence(&mut rng, n);
        let y = random_sequence(&mut rng, n);
        let (a, b) = (Complex64::new(ar, ai), Complex64::new(br, bi));
        let combo = ComplexSequence::new(x.samples.iter().zip(&y.samples).map(|(p, q)| a * p + b * q).collect());
        let lhs = fft(&combo).unwrap();
        let fx = fft(&x).unwrap();
        let fy = fft(&y).unwrap();
        let rhs: Vec<Complex64> = fx.bins.iter().zip(&fy.bins).map(|(p, q)| a * p + b * q).collect();
        prop_assert!(abs_err(&lhs.bins, &rhs) <= 1e-9);
    }

    #[test]
    fn conjugate_symmetry_for_real_input(seed in any::<u64>(), log_n in 0u32..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 1usize << log_n;
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = fft(&ComplexSequence::from_real(&x)).unwrap();
        for k in 0..n {
            prop_assert!((f.bins[k] - f.bins[(n - k) % n].conj()).norm() <= 1e-12);
        }
    }

    #[test]
    fn parseval(seed in any::<u64>(), log_n in 0u32..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 1usize << log_n;
        let x = random_sequence(&mut rng, n);
        let f = fft(&x).unwrap();
        let time: f64 = x.samples.iter().map(|z| z.norm_sqr()).sum();
        let freq: f64 = f.bins.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        prop_assert!(((time - freq) / time).abs() <= 1e-9);
    }

    #[test]
    fn naive_dft_handles_any_length(seed in any::<u64>(), n in 1usize..40) {
        // compare against an O(N²) evaluation with the kernel exponent taken
        // directly from the centred sum, n = -N/2+1 ..= N/2
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_sequence(&mut rng, n);
        let f = dft_naive(&x).unwrap();
        let lo = -(n as i64) / 2 + 1;
        let hi = lo + n as i64;
        for k in 0..n as i64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in lo..hi {
                let sample = x.samples[m.rem_euclid(n as i64) as usize];
                acc += sample * Complex64::from_polar(1.0, -TAU * (m * k) as f64 / n as f64);
            }
            prop_assert!((acc - f.bins[k as usize]).norm() <= 1e-10);
        }
    }

    #[test]
    fn reciprocity(log_n in 0u32..20, dt in 1e-6f64..10.0) {
        let n = 1usize << log_n;
        let axis = frequency_axis(n, dt).unwrap();
        prop_assert!((axis.bin_spacing() * axis.duration() - 1.0).abs() <= 1e-12);
        prop_assert!((axis.sample_interval * axis.bin_spacing() * n as f64 - 1.0).abs() <= 1e-12);
        prop_assert!(((axis.bandwidth() - n as f64 / axis.duration()) / axis.bandwidth()).abs() <= 1e-12);
    }
}
