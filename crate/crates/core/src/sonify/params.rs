use serde::{Deserialize, Serialize};

use super::equations::check_unit;
use crate::error::{Error, Result};

/// A sound attribute that a data feature can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    Chroma,
    Roughness,
    Sharpness,
    Fluctuation,
    NoiseColor,
    NoisePan,
    TonePan,
}

impl Slot {
    pub const ALL: [Slot; 7] = [
        Slot::Chroma,
        Slot::Roughness,
        Slot::Sharpness,
        Slot::Fluctuation,
        Slot::NoiseColor,
        Slot::NoisePan,
        Slot::TonePan,
    ];
    pub const BASIC: usize = 4;
    pub const EXTENDED: usize = 7;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Chroma => "chroma",
            Slot::Roughness => "roughness",
            Slot::Sharpness => "sharpness",
            Slot::Fluctuation => "fluctuation",
            Slot::NoiseColor => "noise_color",
            Slot::NoisePan => "noise_pan",
            Slot::TonePan => "tone_pan",
        }
    }
}

/// Second-stream dimensions: a colored noise with its own pan, plus tone pan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extension {
    pub noise_color: f64,
    pub noise_pan: f64,
    pub tone_pan: f64,
}

/// Normalized sonification inputs, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SonifierParams {
    pub chroma: f64,
    pub roughness: f64,
    pub sharpness: f64,
    pub fluctuation: f64,
    pub extension: Option<Extension>,
}

impl SonifierParams {
    pub fn new(chroma: f64, roughness: f64, sharpness: f64, fluctuation: f64) -> Result<Self> {
        let p = SonifierParams {
            chroma,
            roughness,
            sharpness,
            fluctuation,
            extension: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_extension(
        mut self,
        noise_color: f64,
        noise_pan: f64,
        tone_pan: f64,
    ) -> Result<Self> {
        self.extension = Some(Extension {
            noise_color,
            noise_pan,
            tone_pan,
        });
        self.validate()?;
        Ok(self)
    }

    /// Four values for the basic tone, seven for the extended two-stream mode.
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        let p = match *values {
            [a, b, c, d] => SonifierParams {
                chroma: a,
                roughness: b,
                sharpness: c,
                fluctuation: d,
                extension: None,
            },
            [a, b, c, d, e, f, g] => SonifierParams {
                chroma: a,
                roughness: b,
                sharpness: c,
                fluctuation: d,
                extension: Some(Extension {
                    noise_color: e,
                    noise_pan: f,
                    tone_pan: g,
                }),
            },
            _ => {
                return Err(Error::ParamCount {
                    expected: "4 or 7".into(),
                    found: values.len(),
                })
            }
        };
        p.validate()?;
        Ok(p)
    }

    pub fn is_extended(&self) -> bool {
        self.extension.is_some()
    }

    pub fn active_slots(&self) -> usize {
        if self.is_extended() {
            Slot::EXTENDED
        } else {
            Slot::BASIC
        }
    }

    pub fn to_vec(&self) -> Vec<f64> {
        Slot::ALL[..self.active_slots()]
            .iter()
            .map(|&s| self.get(s).unwrap_or(0.0))
            .collect()
    }

    pub fn get(&self, slot: Slot) -> Option<f64> {
        let ext = self.extension.as_ref();
        match slot {
            Slot::Chroma => Some(self.chroma),
            Slot::Roughness => Some(self.roughness),
            Slot::Sharpness => Some(self.sharpness),
            Slot::Fluctuation => Some(self.fluctuation),
            Slot::NoiseColor => ext.map(|e| e.noise_color),
            Slot::NoisePan => ext.map(|e| e.noise_pan),
            Slot::TonePan => ext.map(|e| e.tone_pan),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for slot in &Slot::ALL[..self.active_slots()] {
            if let Some(v) = self.get(*slot) {
                check_unit(slot.name(), v)?;
            }
        }
        Ok(())
    }
}
