//! Per-parameter synthesis mappings. Each function depends on exactly one
//! normalized input, which keeps the four sound attributes orthogonal.

use crate::error::{Error, Result};

/// Number of octave-spaced partials in the Shepard tone.
pub const PARTIALS: usize = 9;
/// Frequency of the lowest partial at zero chroma, Hz.
pub const BASE_FREQUENCY: f64 = 25.0;
/// Total chroma shift across the `[0, 1]` range, semitones.
pub const CHROMA_SPAN_SEMITONES: f64 = 4.0;
/// Frequency of the shared FM modulator, Hz.
pub const FM_FREQUENCY: f64 = 30.0;
pub const INDEX_LOG_WEIGHT: f64 = 0.4;
pub const INDEX_LINEAR_WEIGHT: f64 = 0.6;
pub const INDEX_BASE: f64 = 5.0;
pub const INDEX_EXPONENT: f64 = 2.8;
/// Inverse width of the Gaussian spectral envelope over normalized log-frequency.
pub const ENVELOPE_STEEPNESS: f64 = 6.66;
/// Octaves spanned by the normalized log-frequency axis.
pub const ENVELOPE_OCTAVES: f64 = 9.0;
pub const ENVELOPE_CENTER: f64 = 0.5;
pub const ENVELOPE_SHIFT: f64 = 0.24;
/// Tremolo rate at full fluctuation, Hz.
pub const AM_MAX_FREQUENCY: f64 = 8.0;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::ParamOutOfRange { name, value })
    }
}

/// `25 * 2^(i + 4x/12)` for `i = 0..9`: octave-spaced partials shifted by up to
/// four semitones.
pub fn carrier_frequencies(chroma: f64) -> Result<[f64; PARTIALS]> {
    let x = check_unit("chroma", chroma)?;
    let shift = CHROMA_SPAN_SEMITONES * x / 12.0;
    let lowest = BASE_FREQUENCY * 2f64.powf(shift);
    Ok(std::array::from_fn(|i| lowest * (1u32 << i) as f64))
}

/// FM index `0.4 * 5^(2.8x) + 0.6 * x * 5^2.8`.
pub fn modulation_index(roughness: f64) -> Result<f64> {
    let x = check_unit("roughness", roughness)?;
    Ok(INDEX_LOG_WEIGHT * INDEX_BASE.powf(INDEX_EXPONENT * x)
        + INDEX_LINEAR_WEIGHT * x * INDEX_BASE.powf(INDEX_EXPONENT))
}

/// Center of the spectral envelope in normalized log-frequency units.
pub fn envelope_center(sharpness: f64) -> Result<f64> {
    let x = check_unit("sharpness", sharpness)?;
    Ok(ENVELOPE_CENTER + ENVELOPE_SHIFT * x)
}

/// Gaussian spectral envelope over `log2(f) / 9`, peaking at the sharpness-controlled center.
pub fn partial_amplitudes(
    frequencies: &[f64; PARTIALS],
    sharpness: f64,
) -> Result<[f64; PARTIALS]> {
    let center = envelope_center(sharpness)?;
    if let Some(&f) = frequencies.iter().find(|&&f| f <= 0.0 || f.is_nan()) {
        return Err(Error::NonPositiveFrequency(f));
    }
    Ok(frequencies.map(|f| {
        let z = ENVELOPE_STEEPNESS * (f.log2() / ENVELOPE_OCTAVES - center);
        (-0.5 * z * z).exp()
    }))
}

/// Loudness-fluctuation rate `8x` Hz.
pub fn tremolo_frequency(fluctuation: f64) -> Result<f64> {
    Ok(AM_MAX_FREQUENCY * check_unit("fluctuation", fluctuation)?)
}
