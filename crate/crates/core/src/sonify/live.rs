use super::params::SonifierParams;
use super::synth::{synthesize_with_noise, AudioBlock, MIN_SAMPLE_RATE};
use crate::error::{Error, Result};

pub const DEFAULT_RAMP_MS: f64 = 30.0;

/// Block-by-block renderer whose parameters glide linearly toward a target.
///
/// Parameters are held constant within a block and evaluated at the block's
/// end frame, so a zero-length ramp lands on the next block. Time is the
/// absolute frame counter, which keeps phase continuous across changes.
#[derive(Debug, Clone)]
pub struct LiveSession {
    rate: u32,
    next_frame: u64,
    noise_seed: u64,
    from: Vec<f64>,
    to: Vec<f64>,
    ramp_start: u64,
    ramp_frames: u64,
    current: SonifierParams,
}

impl LiveSession {
    pub fn new(params: SonifierParams, rate: u32) -> Result<Self> {
        params.validate()?;
        if rate < MIN_SAMPLE_RATE {
            return Err(Error::InvalidSampleRate(rate));
        }
        let v = params.to_vec();
        Ok(LiveSession {
            rate,
            next_frame: 0,
            noise_seed: 0,
            from: v.clone(),
            to: v,
            ramp_start: 0,
            ramp_frames: 0,
            current: params,
        })
    }

    pub fn with_noise_seed(mut self, seed: u64) -> Self {
        self.noise_seed = seed;
        self
    }

    /// Parameters used for the most recent block (or the initial ones).
    pub fn current(&self) -> &SonifierParams {
        &self.current
    }

    pub fn next_frame(&self) -> u64 {
        self.next_frame
    }

    /// Starts a linear glide from the current parameters to `target` over `ramp_ms`.
    pub fn retarget(&mut self, target: SonifierParams, ramp_ms: f64) -> Result<()> {
        if ramp_ms < 0.0 || !ramp_ms.is_finite() {
            return Err(Error::NegativeRamp(ramp_ms));
        }
        target.validate()?;
        if target.is_extended() != self.current.is_extended() {
            return Err(Error::ParamCount {
                expected: self.current.active_slots().to_string(),
                found: target.active_slots(),
            });
        }
        self.from = self.current.to_vec();
        self.to = target.to_vec();
        self.ramp_start = self.next_frame;
        self.ramp_frames = (ramp_ms * self.rate as f64 / 1000.0).round() as u64;
        Ok(())
    }

    /// Interpolated parameters at absolute frame `frame`.
    pub fn params_at(&self, frame: u64) -> SonifierParams {
        let progress = if self.ramp_frames == 0 {
            1.0
        } else {
            (frame.saturating_sub(self.ramp_start) as f64 / self.ramp_frames as f64).min(1.0)
        };
        let values: Vec<f64> = self
            .from
            .iter()
            .zip(&self.to)
            .map(|(a, b)| {
                if progress >= 1.0 {
                    *b
                } else {
                    (a + (b - a) * progress).clamp(0.0, 1.0)
                }
            })
            .collect();
        SonifierParams::from_slice(&values).expect("interpolated values stay in range")
    }

    pub fn next_block(&mut self, frames: usize) -> Result<AudioBlock> {
        let params = self.params_at(self.next_frame + frames as u64);
        let block =
            synthesize_with_noise(&params, self.next_frame, frames, self.rate, self.noise_seed)?;
        self.current = params;
        self.next_frame += frames as u64;
        Ok(block)
    }
}
