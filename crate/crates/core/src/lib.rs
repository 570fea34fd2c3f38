//! Self-organizing maps with psychoacoustic sonification of their units.
//!
//! [`som`] trains and analyzes the map, [`sonify`] turns a normalized
//! pointer into sound, and [`bundle`] moves a trained map between tools as
//! one JSON document plus PNG renderings.

pub mod bundle;
pub mod demo;
mod error;
pub mod fsutil;
pub mod som;
pub mod sonify;

pub use error::{Error, Result};
