use std::path::Path;

use image::codecs::png::PngEncoder;
use image::{ExtendedColorType, ImageEncoder};

use super::colormap::colormap;
use crate::error::{Error, Result};
use crate::fsutil::write_atomic;
use crate::som::{ComponentPlane, GridShape, NodeIndex, UMatrix};

pub const DEFAULT_CELL_SIZE: u32 = 24;
pub const DEFAULT_DOT_RADIUS: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageOptions {
    /// Pixels per node along each side.
    pub cell_size: u32,
    /// Item dot radius as a fraction of the cell size.
    pub dot_radius: f64,
    pub show_items: bool,
}

impl Default for ImageOptions {
    fn default() -> Self {
        ImageOptions {
            cell_size: DEFAULT_CELL_SIZE,
            dot_radius: DEFAULT_DOT_RADIUS,
            show_items: false,
        }
    }
}

/// A training item drawn on a map: its BMU cell and its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemMarker {
    pub node: NodeIndex,
    pub label: String,
}

/// An RGB raster with one square cell per map node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageGrid {
    pub width: u32,
    pub height: u32,
    pub cell_size: u32,
    /// Row-major pixels.
    pub pixels: Vec<[u8; 3]>,
}

impl ImageGrid {
    fn from_cells(shape: GridShape, cell_size: u32, color: impl Fn(usize) -> [u8; 3]) -> Self {
        let width = shape.cols as u32 * cell_size;
        let height = shape.rows as u32 * cell_size;
        let mut pixels = Vec::with_capacity((width * height) as usize);
        for y in 0..height {
            for x in 0..width {
                let node = NodeIndex::new((y / cell_size) as usize, (x / cell_size) as usize);
                pixels.push(color(shape.index(node)));
            }
        }
        ImageGrid {
            width,
            height,
            cell_size,
            pixels,
        }
    }

    pub fn pixel(&self, x: u32, y: u32) -> [u8; 3] {
        self.pixels[(y * self.width + x) as usize]
    }

    /// Color at the center of a node's cell.
    pub fn cell_center(&self, node: NodeIndex) -> [u8; 3] {
        let half = self.cell_size / 2;
        self.pixel(
            node.col as u32 * self.cell_size + half,
            node.row as u32 * self.cell_size + half,
        )
    }

    fn draw_markers(&mut self, markers: &[ItemMarker], radius_frac: f64) {
        let cell = self.cell_size as f64;
        let r = radius_frac * cell;
        for m in markers {
            let cx = (m.node.col as f64 + 0.5) * cell;
            let cy = (m.node.row as f64 + 0.5) * cell;
            let color = label_color(&m.label);
            let x0 = (cx - r).floor().max(0.0) as u32;
            let y0 = (cy - r).floor().max(0.0) as u32;
            let x1 = ((cx + r).ceil() as u32).min(self.width);
            let y1 = ((cy + r).ceil() as u32).min(self.height);
            for y in y0..y1 {
                for x in x0..x1 {
                    let (dx, dy) = (x as f64 + 0.5 - cx, y as f64 + 0.5 - cy);
                    if dx * dx + dy * dy <= r * r {
                        self.pixels[(y * self.width + x) as usize] = color;
                    }
                }
            }
        }
    }

    pub fn encode_png(&self) -> Result<Vec<u8>> {
        let raw: Vec<u8> = self.pixels.iter().flatten().copied().collect();
        let mut out = Vec::new();
        PngEncoder::new(&mut out)
            .write_image(&raw, self.width, self.height, ExtendedColorType::Rgb8)
            .map_err(|e| Error::Encode {
                what: "png",
                reason: e.to_string(),
            })?;
        Ok(out)
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        write_atomic(path, &self.encode_png()?)
    }
}

const NAMED_COLORS: &[(&str, [u8; 3])] = &[
    ("red", [228, 26, 28]),
    ("green", [77, 175, 74]),
    ("blue", [55, 126, 184]),
    ("cyan", [0, 206, 209]),
    ("purple", [152, 78, 163]),
    ("magenta", [231, 41, 138]),
    ("orange", [255, 127, 0]),
    ("yellow", [255, 221, 0]),
    ("pink", [247, 129, 191]),
    ("brown", [166, 86, 40]),
];

/// Dot color for a label: the named color when the label is one, otherwise a
/// palette entry picked by a fixed string hash.
pub fn label_color(label: &str) -> [u8; 3] {
    let lower = label.to_ascii_lowercase();
    if let Some((_, c)) = NAMED_COLORS.iter().find(|(n, _)| *n == lower) {
        return *c;
    }
    let h = lower
        .bytes()
        .fold(0u32, |h, b| h.wrapping_mul(31).wrapping_add(b as u32));
    NAMED_COLORS[h as usize % NAMED_COLORS.len()].1
}

fn check_cell_size(cell_size: u32) -> Result<()> {
    if cell_size == 0 {
        return Err(Error::InvalidConfig("cell size must be positive".into()));
    }
    Ok(())
}

/// Grayscale U-matrix: 0 is black, the matrix maximum is white.
pub fn render_umatrix_image(
    umatrix: &UMatrix,
    markers: &[ItemMarker],
    options: &ImageOptions,
) -> Result<ImageGrid> {
    check_cell_size(options.cell_size)?;
    if let Some(v) = umatrix
        .values
        .iter()
        .find(|v| !(v.is_finite() && **v >= 0.0))
    {
        return Err(Error::NonFinite(format!("U-matrix value {v}")));
    }
    let max = umatrix.max();
    let mut img = ImageGrid::from_cells(umatrix.shape, options.cell_size, |i| {
        let level = if max > 0.0 {
            (umatrix.values[i] / max * 255.0).round() as u8
        } else {
            0
        };
        [level; 3]
    });
    if options.show_items {
        img.draw_markers(markers, options.dot_radius);
    }
    Ok(img)
}

/// Component plane through the dark-blue to yellow [`colormap`].
pub fn render_component_image(
    plane: &ComponentPlane,
    markers: &[ItemMarker],
    options: &ImageOptions,
) -> Result<ImageGrid> {
    check_cell_size(options.cell_size)?;
    if let Some(&v) = plane.values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(Error::ParamOutOfRange {
            name: "component value",
            value: v,
        });
    }
    let mut img = ImageGrid::from_cells(plane.shape, options.cell_size, |i| {
        colormap(plane.values[i])
    });
    if options.show_items {
        img.draw_markers(markers, options.dot_radius);
    }
    Ok(img)
}
