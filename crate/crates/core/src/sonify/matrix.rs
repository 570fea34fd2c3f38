use serde::{Deserialize, Serialize};

use super::equations::check_unit;
use super::params::{Extension, Slot, SonifierParams};
use crate::error::{Error, Result};

/// Routing from data features to sound slots, with per-route polarity and
/// per-slot muting. Unrouted and muted slots sit at 0, the least salient
/// setting of every attribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModMatrix {
    /// `routes[f]` is the slot driven by feature `f`, if any.
    pub routes: Vec<Option<Slot>>,
    /// `invert[f]` flips the polarity of feature `f`'s route.
    pub invert: Vec<bool>,
    /// Indexed by [`Slot::index`].
    pub mute: [bool; 7],
    pub extended: bool,
}

impl ModMatrix {
    /// Feature `i` drives slot `i`. More than four features switch on the
    /// extended slots; features past the seventh stay unrouted.
    pub fn identity(features: usize) -> Self {
        let extended = features > Slot::BASIC;
        let slots = if extended {
            Slot::EXTENDED
        } else {
            Slot::BASIC
        };
        ModMatrix {
            routes: (0..features)
                .map(|f| (f < slots).then(|| Slot::ALL[f]))
                .collect(),
            invert: vec![false; features],
            mute: [false; 7],
            extended,
        }
    }

    pub fn new(
        routes: Vec<Option<Slot>>,
        invert: Vec<bool>,
        mute: [bool; 7],
        extended: bool,
    ) -> Result<Self> {
        let m = ModMatrix {
            routes,
            invert,
            mute,
            extended,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn active_slots(&self) -> usize {
        if self.extended {
            Slot::EXTENDED
        } else {
            Slot::BASIC
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.invert.len() != self.routes.len() {
            return Err(Error::ModMatrix(format!(
                "{} polarity flags for {} routes",
                self.invert.len(),
                self.routes.len()
            )));
        }
        let mut seen = [false; 7];
        for (f, slot) in self.routes.iter().enumerate() {
            let Some(slot) = slot else { continue };
            if slot.index() >= self.active_slots() {
                return Err(Error::ModMatrix(format!(
                    "feature {f} routed to {} outside the active slots",
                    slot.name()
                )));
            }
            if std::mem::replace(&mut seen[slot.index()], true) {
                return Err(Error::ModMatrix(format!(
                    "slot {} is driven by more than one feature",
                    slot.name()
                )));
            }
        }
        Ok(())
    }

    pub fn set_route(&mut self, feature: usize, slot: Option<Slot>) -> Result<()> {
        let dim = self.routes.len();
        let entry = self
            .routes
            .get_mut(feature)
            .ok_or(Error::FeatureOutOfRange {
                index: feature,
                dim,
            })?;
        let previous = std::mem::replace(entry, slot);
        self.validate()
            .inspect_err(|_| self.routes[feature] = previous)
    }

    /// Builds the sonifier input for one normalized feature vector.
    pub fn apply(&self, features: &[f64]) -> Result<SonifierParams> {
        self.validate()?;
        if features.len() != self.routes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.routes.len(),
                found: features.len(),
            });
        }
        let mut values = [0.0; 7];
        for (f, (&x, slot)) in features.iter().zip(&self.routes).enumerate() {
            let x = check_unit("feature", x)?;
            if let Some(slot) = slot {
                values[slot.index()] = if self.invert[f] { 1.0 - x } else { x };
            }
        }
        for (v, &muted) in values.iter_mut().zip(&self.mute) {
            if muted {
                *v = 0.0;
            }
        }
        Ok(SonifierParams {
            chroma: values[0],
            roughness: values[1],
            sharpness: values[2],
            fluctuation: values[3],
            extension: self.extended.then(|| Extension {
                noise_color: values[4],
                noise_pan: values[5],
                tone_pan: values[6],
            }),
        })
    }
}

pub fn apply_mod_matrix(features: &[f64], matrix: &ModMatrix) -> Result<SonifierParams> {
    matrix.apply(features)
}
