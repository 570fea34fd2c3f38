//! Built-in datasets: a small techno corpus and a seeded two-cluster set.

use rand_distr::{Distribution, Normal};

use crate::bundle::FeatureTable;
use crate::som::{seeded_rng, Item};

pub const FEATURE_NAMES: [&str; 4] = ["PhaseSpace", "ChannelCorrelation", "PhaseSpaceHigh", "bpm"];

// id, style, PhaseSpace, ChannelCorrelation, PhaseSpaceHigh, bpm
const TECHNO: [(&str, &str, [f64; 4]); 15] = [
    ("acid-line", "red", [0.82, 0.31, 0.74, 138.0]),
    ("warehouse", "red", [0.78, 0.28, 0.69, 140.0]),
    ("303-drift", "red", [0.86, 0.35, 0.77, 136.0]),
    ("strobe", "red", [0.74, 0.25, 0.72, 142.0]),
    ("deep-pulse", "cyan", [0.22, 0.81, 0.31, 122.0]),
    ("fog-bank", "cyan", [0.18, 0.86, 0.27, 120.0]),
    ("slow-tide", "cyan", [0.27, 0.78, 0.35, 124.0]),
    ("low-haze", "cyan", [0.20, 0.90, 0.24, 121.0]),
    ("hard-floor", "green", [0.61, 0.12, 0.88, 150.0]),
    ("pneumatic", "green", [0.66, 0.08, 0.92, 148.0]),
    ("rivet", "green", [0.57, 0.15, 0.84, 149.0]),
    ("minimal-a", "blue", [0.41, 0.55, 0.46, 128.0]),
    ("minimal-b", "blue", [0.38, 0.61, 0.42, 126.0]),
    ("clicks", "blue", [0.45, 0.52, 0.51, 130.0]),
    ("dub-chord", "blue", [0.35, 0.64, 0.39, 127.0]),
];

/// Fifteen tracks in four styles, in raw feature units.
pub fn techno_demo() -> FeatureTable {
    FeatureTable {
        names: FEATURE_NAMES.map(String::from).to_vec(),
        items: TECHNO
            .iter()
            .map(|(id, label, f)| Item::new(*id, *label, f.to_vec()))
            .collect(),
    }
}

/// Two seeded 4-D Gaussian clusters of `first` and `second` items.
///
/// Each cluster has per-axis deviation `spread`, so its RMS radius is
/// `2 * spread`; the centers lie `5 * 2 * spread` apart along the main
/// diagonal. Items of the first cluster are labeled `red`, the rest `blue`.
pub fn two_clusters(first: usize, second: usize, spread: f64, seed: u64) -> FeatureTable {
    let mut rng = seeded_rng(seed);
    let normal = Normal::new(0.0, spread).expect("spread must be finite and non-negative");
    let offset = 5.0 * spread;
    let mut items = Vec::with_capacity(first + second);
    for (cluster, count) in [(0usize, first), (1, second)] {
        let center = 0.5
            + if cluster == 0 {
                -offset / 2.0
            } else {
                offset / 2.0
            };
        let label = if cluster == 0 { "red" } else { "blue" };
        for k in 0..count {
            let features = (0..4).map(|_| center + normal.sample(&mut rng)).collect();
            items.push(Item::new(format!("c{cluster}-{k}"), label, features));
        }
    }
    FeatureTable {
        names: (0..4).map(|i| format!("f{i}")).collect(),
        items,
    }
}
