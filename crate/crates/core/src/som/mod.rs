//! Kohonen self-organizing map on a rectangular lattice.
//!
//! Items are min/max normalized into `[0, 1]^D` before training, every node
//! holds a pointer into that space, and training pulls pointers toward items
//! under a Gaussian lattice neighborhood. One seeded generator drives the
//! whole run: the initial grid consumes `rows * cols * dim` uniform draws in
//! row-major node order, then each round shuffles the item order with the
//! same generator.

mod analysis;
mod grid;
mod normalize;
mod train;

pub use analysis::{
    component_plane, place_items, quantization_error, u_matrix, ComponentPlane, PlacedItem,
    Placement, UMatrix,
};
pub use grid::{find_bmu, init_grid, init_grid_with, GridShape, NodeIndex, SomGrid};
pub use normalize::{fit_normalizer, Normalizer};
pub use train::{
    fit_map, neighborhood, schedule, seeded_rng, train, train_observed, FittedMap, SomRng,
    TrainingConfig,
};

use serde::{Deserialize, Serialize};

/// One training example in raw feature units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub id: String,
    pub label: String,
    pub features: Vec<f64>,
}

impl Item {
    pub fn new(id: impl Into<String>, label: impl Into<String>, features: Vec<f64>) -> Self {
        Item {
            id: id.into(),
            label: label.into(),
            features,
        }
    }
}

/// Squared Euclidean distance. Callers guarantee equal lengths.
#[inline]
pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
