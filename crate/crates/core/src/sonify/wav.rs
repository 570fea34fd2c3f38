use std::io::Cursor;
use std::path::Path;

use super::params::SonifierParams;
use super::synth::{synthesize_with_noise, AudioBlock, DEFAULT_SAMPLE_RATE};
use crate::error::{Error, Result};
use crate::fsutil::write_atomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSettings {
    pub rate: u32,
    /// Seeds the noise stream in extended mode.
    pub noise_seed: u64,
}

impl Default for RenderSettings {
    fn default() -> Self {
        RenderSettings {
            rate: DEFAULT_SAMPLE_RATE,
            noise_seed: 0,
        }
    }
}

/// 16-bit linear PCM RIFF/WAVE bytes for `block`.
pub fn encode_wav(block: &AudioBlock) -> Result<Vec<u8>> {
    let spec = hound::WavSpec {
        channels: block.channels,
        sample_rate: block.rate,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let enc = |e: hound::Error| Error::Encode {
        what: "wav",
        reason: e.to_string(),
    };
    let mut cursor = Cursor::new(Vec::new());
    let mut writer = hound::WavWriter::new(&mut cursor, spec).map_err(enc)?;
    for &s in &block.samples {
        writer
            .write_sample((s.clamp(-1.0, 1.0) * i16::MAX as f64).round() as i16)
            .map_err(enc)?;
    }
    writer.finalize().map_err(enc)?;
    Ok(cursor.into_inner())
}

/// Frames covering `[0, duration)` at `rate`.
pub fn frame_count(duration: f64, rate: u32) -> Result<usize> {
    if !(duration > 0.0 && duration.is_finite()) {
        return Err(Error::InvalidDuration(duration));
    }
    Ok((duration * rate as f64).round() as usize)
}

/// Renders `[0, duration)` and writes it as a WAV file: mono for the basic
/// tone, stereo in extended mode.
pub fn render_wav(
    params: &SonifierParams,
    duration: f64,
    settings: &RenderSettings,
    path: &Path,
) -> Result<AudioBlock> {
    let frames = frame_count(duration, settings.rate)?;
    let block = synthesize_with_noise(params, 0, frames, settings.rate, settings.noise_seed)?;
    write_atomic(path, &encode_wav(&block)?)?;
    Ok(block)
}
