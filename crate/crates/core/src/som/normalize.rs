use serde::{Deserialize, Serialize};

use super::Item;
use crate::error::{Error, Result};

/// Per-feature min/max scaling fitted on a training set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalizer {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

pub fn fit_normalizer(items: &[Item]) -> Result<Normalizer> {
    let first = items.first().ok_or(Error::EmptyItems)?;
    let dim = first.features.len();
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut min = vec![f64::INFINITY; dim];
    let mut max = vec![f64::NEG_INFINITY; dim];
    for item in items {
        if item.features.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: item.features.len(),
            });
        }
        for (f, &v) in item.features.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite(format!("item {:?} feature {f}", item.id)));
            }
            min[f] = min[f].min(v);
            max[f] = max[f].max(v);
        }
    }
    Ok(Normalizer { min, max })
}

impl Normalizer {
    pub fn dim(&self) -> usize {
        self.min.len()
    }

    /// A feature whose training values were all equal.
    pub fn is_degenerate(&self, feature: usize) -> bool {
        self.min[feature] == self.max[feature]
    }

    /// Maps raw values into `[0, 1]`. Degenerate features map to 0.5 and values
    /// outside the training range are clamped.
    pub fn normalize(&self, raw: &[f64]) -> Result<Vec<f64>> {
        if raw.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: raw.len(),
            });
        }
        raw.iter()
            .enumerate()
            .map(|(f, &v)| {
                if !v.is_finite() {
                    return Err(Error::NonFinite(format!("input feature {f}")));
                }
                if self.is_degenerate(f) {
                    return Ok(0.5);
                }
                let x = (v - self.min[f]) / (self.max[f] - self.min[f]);
                Ok(x.clamp(0.0, 1.0))
            })
            .collect()
    }

    pub fn normalize_items(&self, items: &[Item]) -> Result<Vec<Vec<f64>>> {
        items
            .iter()
            .map(|it| self.normalize(&it.features))
            .collect()
    }
}
