use std::collections::HashSet;
use std::fmt::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::som::Item;

/// A parsed feature file: column names after `id,label`, and the rows.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTable {
    pub names: Vec<String>,
    pub items: Vec<Item>,
}

impl FeatureTable {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// CSV text that [`parse_features`] reads back to the same table.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,label");
        for n in &self.names {
            out.push(',');
            out.push_str(n);
        }
        out.push('\n');
        for item in &self.items {
            write!(out, "{},{}", item.id, item.label).unwrap();
            for v in &item.features {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Reads comma-separated `id,label,<feature...>` rows with a header line.
pub fn load_features(path: &Path) -> Result<FeatureTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_features(&text, path)
}

pub fn parse_features(text: &str, path: &Path) -> Result<FeatureTable> {
    let fail = |line: u64, reason: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        reason,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader
        .headers()
        .map_err(|e| fail(1, e.to_string()))?
        .clone();
    if header.is_empty() || (header.len() == 1 && header[0].is_empty()) {
        return Err(fail(1, "missing header".into()));
    }
    if header.len() < 3 || &header[0] != "id" || &header[1] != "label" {
        return Err(fail(
            1,
            "header must be `id,label,<feature names...>` with at least one feature".into(),
        ));
    }
    let names: Vec<String> = header.iter().skip(2).map(String::from).collect();

    let mut items = Vec::new();
    let mut ids = HashSet::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            fail(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != header.len() {
            return Err(fail(
                line,
                format!("expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        let id = record[0].to_string();
        if id.is_empty() {
            return Err(fail(line, "empty id".into()));
        }
        if !ids.insert(id.clone()) {
            return Err(fail(line, format!("duplicate id {id:?}")));
        }
        let features = record
            .iter()
            .skip(2)
            .zip(&names)
            .map(|(cell, name)| match cell.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                _ => Err(fail(
                    line,
                    format!("feature {name:?}: {cell:?} is not a finite number"),
                )),
            })
            .collect::<Result<Vec<f64>>>()?;
        items.push(Item::new(id, &record[1], features));
    }
    if items.is_empty() {
        return Err(fail(1, "no data rows".into()));
    }
    Ok(FeatureTable { names, items })
}
