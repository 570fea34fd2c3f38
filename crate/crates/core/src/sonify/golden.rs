//! Reference table of synthesis intermediates shared with other
//! implementations of the same mappings (the browser explorer among them).
//!
//! One tab-separated row per parameter set: the four inputs, the nine
//! carrier frequencies, the FM index, the nine partial amplitudes and the
//! tremolo rate. Numbers use Rust's shortest round-trip formatting.

use std::fmt::Write;

use super::equations::{
    carrier_frequencies, modulation_index, partial_amplitudes, tremolo_frequency, PARTIALS,
};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRow {
    pub params: [f64; 4],
    pub frequencies: [f64; PARTIALS],
    pub index: f64,
    pub amplitudes: [f64; PARTIALS],
    pub tremolo: f64,
}

impl GoldenRow {
    pub fn compute(params: [f64; 4]) -> Result<Self> {
        let [chroma, roughness, sharpness, fluctuation] = params;
        let frequencies = carrier_frequencies(chroma)?;
        Ok(GoldenRow {
            params,
            frequencies,
            index: modulation_index(roughness)?,
            amplitudes: partial_amplitudes(&frequencies, sharpness)?,
            tremolo: tremolo_frequency(fluctuation)?,
        })
    }
}

/// The parameter sets in the table: the 11-point diagonal, the 16 corners
/// of the unit hypercube, and one sweep per dimension with the others at 0.5.
pub fn golden_params() -> Vec<[f64; 4]> {
    let mut rows: Vec<[f64; 4]> = (0..=10).map(|k| [k as f64 / 10.0; 4]).collect();
    rows.extend((0..16u32).map(|bits| std::array::from_fn(|d| f64::from((bits >> d) & 1))));
    for d in 0..4 {
        for k in [0.05, 0.35, 0.65, 0.95] {
            let mut p = [0.5; 4];
            p[d] = k;
            rows.push(p);
        }
    }
    rows
}

pub fn golden_rows() -> Vec<GoldenRow> {
    golden_params()
        .into_iter()
        .map(|p| GoldenRow::compute(p).expect("golden parameters are in range"))
        .collect()
}

pub fn golden_table() -> String {
    let mut out = String::new();
    let mut header = vec!["chroma", "roughness", "sharpness", "fluctuation"]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    header.extend((0..PARTIALS).map(|i| format!("freq_{i}")));
    header.push("fm_index".into());
    header.extend((0..PARTIALS).map(|i| format!("amp_{i}")));
    header.push("tremolo_hz".into());
    out.push_str(&header.join("\t"));
    out.push('\n');
    for row in golden_rows() {
        let cells: Vec<String> = row
            .params
            .iter()
            .chain(&row.frequencies)
            .chain(std::iter::once(&row.index))
            .chain(&row.amplitudes)
            .chain(std::iter::once(&row.tremolo))
            .map(|v| v.to_string())
            .collect();
        writeln!(out, "{}", cells.join("\t")).unwrap();
    }
    out
}
