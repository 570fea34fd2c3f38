use serde::{Deserialize, Serialize};

use super::grid::{GridShape, NodeIndex, SomGrid};
use super::normalize::Normalizer;
use super::{dist_sq, Item};
use crate::error::{Error, Result};

/// Mean pointer distance from each node to its 8-connected lattice neighbors.
#[derive(Debug, Clone, PartialEq)]
pub struct UMatrix {
    pub shape: GridShape,
    /// Row-major.
    pub values: Vec<f64>,
}

impl UMatrix {
    pub fn get(&self, node: NodeIndex) -> f64 {
        self.values[self.shape.index(node)]
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.values
            .chunks(self.shape.cols)
            .map(<[f64]>::to_vec)
            .collect()
    }
}

pub fn u_matrix(grid: &SomGrid) -> UMatrix {
    let shape = grid.shape();
    let values = (0..shape.len())
        .map(|i| {
            let node = shape.node(i);
            let here = grid.pointer(i);
            let (sum, count) = shape.neighbors(node).fold((0.0, 0usize), |(s, n), nb| {
                (
                    s + dist_sq(here, grid.pointer(shape.index(nb))).sqrt(),
                    n + 1,
                )
            });
            sum / count as f64
        })
        .collect();
    UMatrix { shape, values }
}

/// One pointer component across the whole grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPlane {
    pub feature: usize,
    pub shape: GridShape,
    pub values: Vec<f64>,
}

impl ComponentPlane {
    pub fn get(&self, node: NodeIndex) -> f64 {
        self.values[self.shape.index(node)]
    }
}

pub fn component_plane(grid: &SomGrid, feature: usize) -> Result<ComponentPlane> {
    if feature >= grid.dim() {
        return Err(Error::FeatureOutOfRange {
            index: feature,
            dim: grid.dim(),
        });
    }
    Ok(ComponentPlane {
        feature,
        shape: grid.shape(),
        values: grid.pointers().map(|p| p[feature]).collect(),
    })
}

/// Mean Euclidean distance from each vector to its BMU pointer.
pub fn quantization_error(grid: &SomGrid, data: &[Vec<f64>]) -> Result<f64> {
    if data.is_empty() {
        return Err(Error::EmptyItems);
    }
    let mut total = 0.0;
    for x in data {
        total += grid.find_bmu(x)?.1;
    }
    Ok(total / data.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacedItem {
    pub id: String,
    pub node: NodeIndex,
}

/// BMU of every item, in item order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Placement {
    pub entries: Vec<PlacedItem>,
}

impl Placement {
    pub fn get(&self, id: &str) -> Option<NodeIndex> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.node)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Normalizes each item (clamping values outside the training range) and
/// records its BMU. Works for training items and for new items alike.
pub fn place_items(grid: &SomGrid, items: &[Item], normalizer: &Normalizer) -> Result<Placement> {
    if items.is_empty() {
        return Err(Error::EmptyItems);
    }
    let entries = items
        .iter()
        .map(|item| {
            let x = normalizer.normalize(&item.features)?;
            Ok(PlacedItem {
                id: item.id.clone(),
                node: grid.find_bmu(&x)?.0,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Placement { entries })
}
