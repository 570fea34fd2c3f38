//! The map bundle: one JSON document carrying everything a viewer needs.
//!
//! Schema, version "1" (fields in this order):
//!
//! | field           | content                                                     |
//! |-----------------|-------------------------------------------------------------|
//! | `version`       | `"1"`; imports accept any `"1"` or `"1.x"`                  |
//! | `shape`         | `{ "rows", "cols" }`                                        |
//! | `feature_names` | `D` strings in feature order                                |
//! | `normalizer`    | `{ "min": [D], "max": [D] }` raw-unit training extrema      |
//! | `pointers`      | `rows * cols` row-major arrays of `D` numbers in `[0, 1]`   |
//! | `items`         | `{ "id", "label", "features", "normalized", "bmu": { "row", "col" } }` |
//! | `u_matrix`      | `rows` arrays of `cols` numbers                             |
//! | `training`      | `{ "rounds", "alpha_start", "alpha_end", "sigma_start", "sigma_end", "seed" }` |
//!
//! Numbers are written in shortest round-trip form and parsed exactly, so
//! import followed by export reproduces the file byte for byte. Unknown fields
//! are ignored.

pub mod colormap;
mod features;
mod image;

pub use self::image::{
    label_color, render_component_image, render_umatrix_image, ImageGrid, ImageOptions, ItemMarker,
    DEFAULT_CELL_SIZE, DEFAULT_DOT_RADIUS,
};
pub use features::{load_features, parse_features, FeatureTable};

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fsutil::write_atomic;
use crate::som::{
    u_matrix, GridShape, Item, NodeIndex, Normalizer, PlacedItem, Placement, SomGrid,
    TrainingConfig, UMatrix,
};

pub const BUNDLE_VERSION: &str = "1";
/// Largest allowed gap between stored and recomputed U-matrix values.
pub const UMATRIX_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BundleItem {
    pub id: String,
    pub label: String,
    pub features: Vec<f64>,
    pub normalized: Vec<f64>,
    pub bmu: NodeIndex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapBundle {
    pub version: String,
    pub shape: GridShape,
    pub feature_names: Vec<String>,
    pub normalizer: Normalizer,
    pub pointers: Vec<Vec<f64>>,
    pub items: Vec<BundleItem>,
    pub u_matrix: Vec<Vec<f64>>,
    pub training: TrainingConfig,
}

impl MapBundle {
    pub fn build(
        grid: &SomGrid,
        items: &[Item],
        feature_names: &[String],
        normalizer: &Normalizer,
        training: &TrainingConfig,
    ) -> Result<Self> {
        let items = items
            .iter()
            .map(|item| {
                let normalized = normalizer.normalize(&item.features)?;
                let bmu = grid.find_bmu(&normalized)?.0;
                Ok(BundleItem {
                    id: item.id.clone(),
                    label: item.label.clone(),
                    features: item.features.clone(),
                    normalized,
                    bmu,
                })
            })
            .collect::<Result<_>>()?;
        let bundle = MapBundle {
            version: BUNDLE_VERSION.into(),
            shape: grid.shape(),
            feature_names: feature_names.to_vec(),
            normalizer: normalizer.clone(),
            pointers: grid.to_pointer_vecs(),
            items,
            u_matrix: u_matrix(grid).rows(),
            training: training.clone(),
        };
        bundle.check()?;
        Ok(bundle)
    }

    pub fn dim(&self) -> usize {
        self.feature_names.len()
    }

    pub fn grid(&self) -> Result<SomGrid> {
        SomGrid::from_pointers(self.shape, &self.pointers)
    }

    pub fn umatrix(&self) -> UMatrix {
        UMatrix {
            shape: self.shape,
            values: self.u_matrix.iter().flatten().copied().collect(),
        }
    }

    pub fn placement(&self) -> Placement {
        Placement {
            entries: self
                .items
                .iter()
                .map(|i| PlacedItem {
                    id: i.id.clone(),
                    node: i.bmu,
                })
                .collect(),
        }
    }

    pub fn markers(&self) -> Vec<ItemMarker> {
        self.items
            .iter()
            .map(|i| ItemMarker {
                node: i.bmu,
                label: i.label.clone(),
            })
            .collect()
    }

    pub fn pointer(&self, node: NodeIndex) -> Result<&[f64]> {
        self.shape.check(node)?;
        Ok(&self.pointers[self.shape.index(node)])
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self).map_err(|e| Error::Encode {
            what: "bundle",
            reason: e.to_string(),
        })?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::BundleSchema(e.to_string()))?;
        let version = value
            .get("version")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::BundleSchema("missing string field `version`".into()))?;
        if version.split('.').next() != Some(BUNDLE_VERSION) {
            return Err(Error::BundleVersion {
                found: version.into(),
                expected: BUNDLE_VERSION,
            });
        }
        let bundle: MapBundle =
            serde_json::from_value(value).map_err(|e| Error::BundleSchema(e.to_string()))?;
        bundle.check()?;
        Ok(bundle)
    }

    /// Internal consistency: sizes, ranges, BMUs and the stored U-matrix.
    pub fn check(&self) -> Result<()> {
        let fail = |field: String, reason: String| Err(Error::Consistency { field, reason });
        let shape = self.shape;
        if shape.validate().is_err() {
            return fail(
                "shape".into(),
                format!("{}x{} is not a valid grid", shape.rows, shape.cols),
            );
        }
        let dim = self.dim();
        if dim == 0 {
            return fail("feature_names".into(), "no features".into());
        }
        let n = &self.normalizer;
        if n.min.len() != dim || n.max.len() != dim {
            return fail(
                "normalizer".into(),
                format!("expected {dim} minima and maxima"),
            );
        }
        for f in 0..dim {
            if !(n.min[f].is_finite() && n.max[f].is_finite() && n.min[f] <= n.max[f]) {
                return fail(format!("normalizer[{f}]"), "min must not exceed max".into());
            }
        }
        if self.pointers.len() != shape.len() {
            return fail(
                "pointers".into(),
                format!(
                    "{} pointers for a {}x{} grid",
                    self.pointers.len(),
                    shape.rows,
                    shape.cols
                ),
            );
        }
        for (i, p) in self.pointers.iter().enumerate() {
            if p.len() != dim || p.iter().any(|v| !(0.0..=1.0).contains(v)) {
                return fail(
                    format!("pointers[{i}]"),
                    format!("must be {dim} values in [0, 1]"),
                );
            }
        }
        if let Err(e) = self.training.validate() {
            return fail("training".into(), e.to_string());
        }
        let grid = self.grid()?;

        if self.items.is_empty() {
            return fail("items".into(), "no items".into());
        }
        let mut ids = HashSet::new();
        for (i, item) in self.items.iter().enumerate() {
            let field = |name: &str| format!("items[{i}].{name}");
            if !ids.insert(item.id.as_str()) {
                return fail(field("id"), format!("duplicate id {:?}", item.id));
            }
            if item.features.len() != dim || item.features.iter().any(|v| !v.is_finite()) {
                return fail(field("features"), format!("must be {dim} finite values"));
            }
            if n.normalize(&item.features)? != item.normalized {
                return fail(field("normalized"), "does not match the normalizer".into());
            }
            if !shape.contains(item.bmu) {
                return fail(
                    field("bmu"),
                    format!("({}, {}) is outside the grid", item.bmu.row, item.bmu.col),
                );
            }
            let expected = grid.find_bmu(&item.normalized)?.0;
            if expected != item.bmu {
                return fail(
                    field("bmu"),
                    format!(
                        "stored ({}, {}) but nearest node is ({}, {})",
                        item.bmu.row, item.bmu.col, expected.row, expected.col
                    ),
                );
            }
        }

        if self.u_matrix.len() != shape.rows || self.u_matrix.iter().any(|r| r.len() != shape.cols)
        {
            return fail(
                "u_matrix".into(),
                format!("must be {}x{}", shape.rows, shape.cols),
            );
        }
        let recomputed = u_matrix(&grid);
        for (i, (stored, fresh)) in self
            .umatrix()
            .values
            .iter()
            .zip(&recomputed.values)
            .enumerate()
        {
            if (stored - fresh).abs() >= UMATRIX_TOLERANCE || stored.is_nan() {
                let node = shape.node(i);
                return fail(
                    format!("u_matrix[{}][{}]", node.row, node.col),
                    format!("stored {stored} but pointers give {fresh}"),
                );
            }
        }
        Ok(())
    }
}

pub fn export_bundle(bundle: &MapBundle, path: &Path) -> Result<()> {
    bundle.check()?;
    write_atomic(path, bundle.to_json()?.as_bytes())
}

pub fn import_bundle(path: &Path) -> Result<MapBundle> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    MapBundle::from_json(&text)
}
