use std::f64::consts::{FRAC_PI_2, TAU};

use super::equations::{
    carrier_frequencies, check_unit, modulation_index, partial_amplitudes, tremolo_frequency,
    FM_FREQUENCY, PARTIALS,
};
use super::noise::{colored_noise, NOISE_RMS};
use super::params::SonifierParams;
use crate::error::{Error, Result};

pub const MIN_SAMPLE_RATE: u32 = 8000;
pub const DEFAULT_SAMPLE_RATE: u32 = 48_000;

/// Interleaved samples in `[-1, 1]` starting at an absolute frame position.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioBlock {
    pub rate: u32,
    pub channels: u16,
    /// Absolute frame index of the first frame; `t0 = start_frame / rate`.
    pub start_frame: u64,
    pub samples: Vec<f64>,
}

impl AudioBlock {
    pub fn t0(&self) -> f64 {
        self.start_frame as f64 / self.rate as f64
    }

    pub fn frames(&self) -> usize {
        self.samples.len() / self.channels as usize
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Samples of one channel.
    pub fn channel(&self, ch: usize) -> impl Iterator<Item = f64> + '_ {
        self.samples
            .iter()
            .skip(ch)
            .step_by(self.channels as usize)
            .copied()
    }

    pub fn peak(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, s| m.max(s.abs()))
    }

    /// Appends a block that starts where this one ends.
    pub fn append(&mut self, next: &AudioBlock) {
        debug_assert_eq!(self.rate, next.rate);
        debug_assert_eq!(self.channels, next.channels);
        debug_assert_eq!(self.start_frame + self.frames() as u64, next.start_frame);
        self.samples.extend_from_slice(&next.samples);
    }
}

/// Constant-power stereo gains `(cos θ, sin θ)` with `θ = x π/2`.
pub fn pan_gains(pan: f64) -> Result<(f64, f64)> {
    let theta = check_unit("pan", pan)? * FRAC_PI_2;
    Ok((theta.cos(), theta.sin()))
}

/// The Shepard tone for one parameter set, with every mapping evaluated up front.
#[derive(Debug, Clone, PartialEq)]
pub struct Voice {
    pub frequencies: [f64; PARTIALS],
    pub amplitudes: [f64; PARTIALS],
    pub index: f64,
    pub tremolo: f64,
    /// `1 / (2 max(1, Σ A_i))`: the tremolo can double the summed amplitude.
    pub gain: f64,
}

impl Voice {
    pub fn new(params: &SonifierParams) -> Result<Self> {
        params.validate()?;
        let frequencies = carrier_frequencies(params.chroma)?;
        let amplitudes = partial_amplitudes(&frequencies, params.sharpness)?;
        let sum: f64 = amplitudes.iter().sum();
        Ok(Voice {
            frequencies,
            amplitudes,
            index: modulation_index(params.roughness)?,
            tremolo: tremolo_frequency(params.fluctuation)?,
            gain: 1.0 / (2.0 * sum.max(1.0)),
        })
    }

    /// Output at absolute time `t` seconds.
    #[inline]
    pub fn sample(&self, t: f64) -> f64 {
        let am = 1.0 + (TAU * self.tremolo * t).sin();
        let fm = self.index * (TAU * FM_FREQUENCY * t).sin();
        let carriers: f64 = self
            .frequencies
            .iter()
            .zip(&self.amplitudes)
            .map(|(f, a)| a * (TAU * f * t + fm).sin())
            .sum();
        self.gain * am * carriers
    }

    /// Long-run RMS of [`Voice::sample`], from the partial amplitudes.
    pub fn rms(&self) -> f64 {
        let power: f64 = self.amplitudes.iter().map(|a| a * a / 2.0).sum();
        let am_power = if self.tremolo > 0.0 { 1.5 } else { 1.0 };
        self.gain * (power * am_power).sqrt()
    }
}

fn check_rate(rate: u32) -> Result<()> {
    if rate < MIN_SAMPLE_RATE {
        return Err(Error::InvalidSampleRate(rate));
    }
    Ok(())
}

#[inline]
fn frame_time(frame: u64, rate: u32) -> f64 {
    frame as f64 / rate as f64
}

/// Renders `frames` frames starting at absolute frame `start_frame`.
///
/// Output depends only on the parameters and the absolute frame index, so
/// consecutive calls concatenate bit-exactly. Basic parameters give a mono
/// block; extended parameters give stereo with the panned tone and a level
/// matched noise stream mixed at half gain each. The noise is seeded from
/// `noise_seed` and the block position.
pub fn synthesize_with_noise(
    params: &SonifierParams,
    start_frame: u64,
    frames: usize,
    rate: u32,
    noise_seed: u64,
) -> Result<AudioBlock> {
    check_rate(rate)?;
    let voice = Voice::new(params)?;
    let tone = (0..frames as u64).map(|k| voice.sample(frame_time(start_frame + k, rate)));

    let Some(ext) = params.extension else {
        return Ok(AudioBlock {
            rate,
            channels: 1,
            start_frame,
            samples: tone.collect(),
        });
    };

    let (tone_l, tone_r) = pan_gains(ext.tone_pan)?;
    let (noise_l, noise_r) = pan_gains(ext.noise_pan)?;
    let noise = colored_noise(ext.noise_color, start_frame, frames, rate, noise_seed)?;
    let level = voice.rms() / NOISE_RMS;
    let mut samples = Vec::with_capacity(frames * 2);
    for (s, n) in tone.zip(noise) {
        let n = (n * level).clamp(-1.0, 1.0);
        samples.push(0.5 * (tone_l * s + noise_l * n));
        samples.push(0.5 * (tone_r * s + noise_r * n));
    }
    Ok(AudioBlock {
        rate,
        channels: 2,
        start_frame,
        samples,
    })
}

pub fn synthesize(
    params: &SonifierParams,
    start_frame: u64,
    frames: usize,
    rate: u32,
) -> Result<AudioBlock> {
    synthesize_with_noise(params, start_frame, frames, rate, 0)
}
