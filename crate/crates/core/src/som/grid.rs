use rand::Rng;
use serde::{Deserialize, Serialize};

use super::dist_sq;
use super::train::{seeded_rng, SomRng};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
}

impl GridShape {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        let shape = GridShape { rows, cols };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows < 2 || self.cols < 2 {
            return Err(Error::InvalidShape {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn node(&self, index: usize) -> NodeIndex {
        NodeIndex {
            row: index / self.cols,
            col: index % self.cols,
        }
    }

    pub fn index(&self, node: NodeIndex) -> usize {
        node.row * self.cols + node.col
    }

    pub fn contains(&self, node: NodeIndex) -> bool {
        node.row < self.rows && node.col < self.cols
    }

    pub fn check(&self, node: NodeIndex) -> Result<()> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                row: node.row,
                col: node.col,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// The 8-connected lattice neighbors of `node`, in row-major order.
    pub fn neighbors(&self, node: NodeIndex) -> impl Iterator<Item = NodeIndex> + '_ {
        let (r, c) = (node.row as isize, node.col as isize);
        (-1isize..=1)
            .flat_map(move |dr| (-1isize..=1).map(move |dc| (dr, dc)))
            .filter(|&(dr, dc)| dr != 0 || dc != 0)
            .filter_map(move |(dr, dc)| {
                let (nr, nc) = (r + dr, c + dc);
                (nr >= 0 && nc >= 0 && (nr as usize) < self.rows && (nc as usize) < self.cols)
                    .then(|| NodeIndex::new(nr as usize, nc as usize))
            })
    }
}

impl Default for GridShape {
    fn default() -> Self {
        GridShape { rows: 16, cols: 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeIndex {
    pub row: usize,
    pub col: usize,
}

impl NodeIndex {
    pub fn new(row: usize, col: usize) -> Self {
        NodeIndex { row, col }
    }

    /// Squared Euclidean distance between lattice coordinates.
    pub fn lattice_dist_sq(&self, other: NodeIndex) -> f64 {
        let dr = self.row as f64 - other.row as f64;
        let dc = self.col as f64 - other.col as f64;
        dr * dr + dc * dc
    }
}

/// The unit layer: one pointer per node, stored row-major in a flat buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct SomGrid {
    shape: GridShape,
    dim: usize,
    weights: Vec<f64>,
}

impl SomGrid {
    pub fn from_pointers(shape: GridShape, pointers: &[Vec<f64>]) -> Result<Self> {
        shape.validate()?;
        if pointers.len() != shape.len() {
            return Err(Error::DimensionMismatch {
                expected: shape.len(),
                found: pointers.len(),
            });
        }
        let dim = pointers.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut weights = Vec::with_capacity(shape.len() * dim);
        for p in pointers {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite("pointer".into()));
            }
            weights.extend_from_slice(p);
        }
        Ok(SomGrid {
            shape,
            dim,
            weights,
        })
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn pointer(&self, index: usize) -> &[f64] {
        &self.weights[index * self.dim..(index + 1) * self.dim]
    }

    pub fn pointer_at(&self, node: NodeIndex) -> Result<&[f64]> {
        self.shape.check(node)?;
        Ok(self.pointer(self.shape.index(node)))
    }

    pub(crate) fn pointer_mut(&mut self, index: usize) -> &mut [f64] {
        &mut self.weights[index * self.dim..(index + 1) * self.dim]
    }

    pub fn pointers(&self) -> impl Iterator<Item = &[f64]> {
        self.weights.chunks_exact(self.dim)
    }

    pub fn to_pointer_vecs(&self) -> Vec<Vec<f64>> {
        self.pointers().map(<[f64]>::to_vec).collect()
    }

    /// Row-major least node among those nearest to `x`, with its Euclidean distance.
    pub fn find_bmu(&self, x: &[f64]) -> Result<(NodeIndex, f64)> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let (index, d2) = self.nearest(x);
        Ok((self.shape.node(index), d2.sqrt()))
    }

    // Strict `<` keeps the first (row-major least) minimum.
    pub(crate) fn nearest(&self, x: &[f64]) -> (usize, f64) {
        let mut best = (0, f64::INFINITY);
        for (i, p) in self.pointers().enumerate() {
            let d = dist_sq(p, x);
            if d < best.1 {
                best = (i, d);
            }
        }
        best
    }
}

pub fn find_bmu(grid: &SomGrid, x: &[f64]) -> Result<(NodeIndex, f64)> {
    grid.find_bmu(x)
}

/// Uniform `[0, 1)` pointers from a fresh generator seeded with `seed`.
pub fn init_grid(shape: GridShape, dim: usize, seed: u64) -> Result<SomGrid> {
    init_grid_with(shape, dim, &mut seeded_rng(seed))
}

/// Uniform `[0, 1)` pointers drawn from `rng` in row-major node order.
pub fn init_grid_with(shape: GridShape, dim: usize, rng: &mut SomRng) -> Result<SomGrid> {
    shape.validate()?;
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let weights = (0..shape.len() * dim)
        .map(|_| rng.random::<f64>())
        .collect();
    Ok(SomGrid {
        shape,
        dim,
        weights,
    })
}
