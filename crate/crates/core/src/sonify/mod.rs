//! Psychoacoustic sonification of normalized feature vectors.
//!
//! Four dimensions drive a nine-partial Shepard tone: chroma shifts the
//! carriers, roughness sets a 30 Hz FM index, sharpness moves a Gaussian
//! spectral envelope and fluctuation sets a tremolo rate. The extended mode
//! adds a colored-noise stream with its own pan and pans the tone itself.

mod equations;
pub mod golden;
mod live;
mod matrix;
mod noise;
mod params;
mod synth;
mod wav;

pub use equations::*;
pub use live::{LiveSession, DEFAULT_RAMP_MS};
pub use matrix::{apply_mod_matrix, ModMatrix};
pub use noise::{colored_noise, noise_block, noise_slope_db_per_octave, NOISE_RMS};
pub use params::{Extension, Slot, SonifierParams};
pub use synth::{
    pan_gains, synthesize, synthesize_with_noise, AudioBlock, Voice, DEFAULT_SAMPLE_RATE,
    MIN_SAMPLE_RATE,
};
pub use wav::{encode_wav, frame_count, render_wav, RenderSettings};
