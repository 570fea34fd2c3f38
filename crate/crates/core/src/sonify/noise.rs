//! Colored noise for the second auditory stream.
//!
//! Noise is shaped in the frequency domain: complex Gaussian bins weighted by
//! `f^(slope / 6.02)` in amplitude, inverse transformed, then scaled to a
//! fixed RMS. Brown, pink, white, blue and purple sit at color 0, 0.25, 0.5,
//! 0.75 and 1.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::equations::check_unit;
use super::synth::{pan_gains, AudioBlock, MIN_SAMPLE_RATE};
use crate::error::{Error, Result};

/// RMS of a raw noise block before level matching.
pub const NOISE_RMS: f64 = 0.25;
/// Below this frequency the spectral weight is held flat.
const SHAPING_FLOOR_HZ: f64 = 20.0;
const REFERENCE_HZ: f64 = 1000.0;

/// Power-spectral slope in dB per octave: -6 at color 0, +6 at color 1.
pub fn noise_slope_db_per_octave(color: f64) -> Result<f64> {
    Ok(-6.0 + 12.0 * check_unit("noise_color", color)?)
}

/// Mono colored noise at [`NOISE_RMS`], clamped to `[-1, 1]`. The generator
/// stream is selected by `start_frame`, so equal arguments give equal blocks.
pub fn colored_noise(
    color: f64,
    start_frame: u64,
    frames: usize,
    rate: u32,
    seed: u64,
) -> Result<Vec<f64>> {
    let slope = noise_slope_db_per_octave(color)?;
    if rate < MIN_SAMPLE_RATE {
        return Err(Error::InvalidSampleRate(rate));
    }
    if frames == 0 {
        return Ok(Vec::new());
    }

    let size = frames.next_power_of_two().max(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(start_frame);

    // Amplitude exponent: 20 log10(2^e) = slope dB per octave.
    let exponent = slope / (20.0 * 2f64.log10());
    let mut spectrum = vec![Complex::new(0.0, 0.0); size];
    let half = size / 2;
    for k in 1..=half {
        let f = (k as f64 * rate as f64 / size as f64).max(SHAPING_FLOOR_HZ);
        let weight = (f / REFERENCE_HZ).powf(exponent);
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = if k == half {
            0.0
        } else {
            StandardNormal.sample(&mut rng)
        };
        spectrum[k] = Complex::new(re * weight, im * weight);
        if k != half {
            spectrum[size - k] = spectrum[k].conj();
        }
    }
    FftPlanner::new()
        .plan_fft_inverse(size)
        .process(&mut spectrum);

    let mut out: Vec<f64> = spectrum[..frames].iter().map(|c| c.re).collect();
    let rms = (out.iter().map(|v| v * v).sum::<f64>() / frames as f64).sqrt();
    let scale = if rms > 0.0 { NOISE_RMS / rms } else { 0.0 };
    for v in &mut out {
        *v = (*v * scale).clamp(-1.0, 1.0);
    }
    Ok(out)
}

/// Stereo colored noise panned with constant-power gains.
pub fn noise_block(
    color: f64,
    pan: f64,
    start_frame: u64,
    frames: usize,
    rate: u32,
    seed: u64,
) -> Result<AudioBlock> {
    let (left, right) = pan_gains(pan)?;
    let mono = colored_noise(color, start_frame, frames, rate, seed)?;
    let samples = mono.iter().flat_map(|&s| [left * s, right * s]).collect();
    Ok(AudioBlock {
        rate,
        channels: 2,
        start_frame,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rms(it: impl Iterator<Item = f64>) -> f64 {
        let v: Vec<f64> = it.collect();
        (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt()
    }

    #[test]
    fn slope_mapping() {
        assert_eq!(noise_slope_db_per_octave(0.0).unwrap(), -6.0);
        assert_eq!(noise_slope_db_per_octave(0.25).unwrap(), -3.0);
        assert_eq!(noise_slope_db_per_octave(0.5).unwrap(), 0.0);
        assert_eq!(noise_slope_db_per_octave(1.0).unwrap(), 6.0);
    }

    #[test]
    fn seeded_and_deterministic() {
        let a = noise_block(0.3, 0.5, 480, 1000, 48_000, 7).unwrap();
        let b = noise_block(0.3, 0.5, 480, 1000, 48_000, 7).unwrap();
        let c = noise_block(0.3, 0.5, 480, 1000, 48_000, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn pan_balance() {
        let center = noise_block(0.5, 0.5, 0, 48_000, 48_000, 1).unwrap();
        let (l, r) = (rms(center.channel(0)), rms(center.channel(1)));
        assert!(((l - r) / l).abs() < 0.01);

        let left = noise_block(0.5, 0.0, 0, 48_000, 48_000, 1).unwrap();
        assert!(rms(left.channel(1)) < 0.01 * rms(left.channel(0)));
    }

    #[test]
    fn bounded_and_leveled() {
        for color in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let n = colored_noise(color, 0, 24_000, 48_000, 3).unwrap();
            assert!(n.iter().all(|v| v.abs() <= 1.0));
            assert!((rms(n.into_iter()) - NOISE_RMS).abs() < 0.01);
        }
        assert!(noise_block(0.5, 0.5, 0, 10, 4000, 0).is_err());
        assert!(noise_block(1.5, 0.5, 0, 10, 48_000, 0).is_err());
    }
}
