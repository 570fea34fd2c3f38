use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::grid::{init_grid_with, GridShape, SomGrid};
use super::normalize::{fit_normalizer, Normalizer};
use super::Item;
use crate::error::{Error, Result};

/// Generator behind initialization and shuffling. ChaCha output is stable
/// across platforms and crate releases, which the byte-identical bundle
/// contract relies on.
pub type SomRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SomRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainingConfig {
    pub rounds: usize,
    pub alpha_start: f64,
    pub alpha_end: f64,
    /// Neighborhood width in lattice cells.
    pub sigma_start: f64,
    pub sigma_end: f64,
    pub seed: u64,
}

impl TrainingConfig {
    /// Defaults: 2000 rounds, alpha 0.5 to 0.01, sigma half the longer side to 0.5.
    pub fn for_shape(shape: GridShape) -> Self {
        TrainingConfig {
            rounds: 2000,
            alpha_start: 0.5,
            alpha_end: 0.01,
            sigma_start: shape.rows.max(shape.cols) as f64 / 2.0,
            sigma_end: 0.5,
            seed: 0,
        }
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = rounds;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.rounds == 0 {
            return bad("rounds must be positive".into());
        }
        for (name, a) in [
            ("alpha_start", self.alpha_start),
            ("alpha_end", self.alpha_end),
        ] {
            if !(a > 0.0 && a <= 1.0) {
                return bad(format!("{name} = {a} must lie in (0, 1]"));
            }
        }
        if self.alpha_start < self.alpha_end {
            return bad("alpha_start must be >= alpha_end".into());
        }
        if !(self.sigma_end > 0.0 && self.sigma_end.is_finite() && self.sigma_start.is_finite()) {
            return bad("sigma values must be positive and finite".into());
        }
        if self.sigma_start < self.sigma_end {
            return bad("sigma_start must be >= sigma_end".into());
        }
        Ok(())
    }
}

/// Learning coefficient and neighborhood width for a 0-based round, both
/// decaying linearly from their start to their end value.
pub fn schedule(round: usize, config: &TrainingConfig) -> Result<(f64, f64)> {
    if round >= config.rounds {
        return Err(Error::RoundOutOfRange {
            round,
            rounds: config.rounds,
        });
    }
    if config.rounds == 1 {
        return Ok((config.alpha_start, config.sigma_start));
    }
    let t = round as f64 / (config.rounds - 1) as f64;
    let lerp = |a: f64, b: f64| a * (1.0 - t) + b * t;
    Ok((
        lerp(config.alpha_start, config.alpha_end),
        lerp(config.sigma_start, config.sigma_end),
    ))
}

/// Gaussian neighborhood `exp(-d^2 / (2 sigma^2))` of squared lattice distance `d^2`.
#[inline]
pub fn neighborhood(lattice_dist_sq: f64, sigma: f64) -> f64 {
    (-lattice_dist_sq / (2.0 * sigma * sigma)).exp()
}

pub fn train(
    grid: SomGrid,
    data: &[Vec<f64>],
    config: &TrainingConfig,
    rng: &mut SomRng,
) -> Result<SomGrid> {
    train_observed(grid, data, config, rng, |_| {})
}

/// Like [`train`], calling `observe` with the grid after every single-item update.
pub fn train_observed(
    mut grid: SomGrid,
    data: &[Vec<f64>],
    config: &TrainingConfig,
    rng: &mut SomRng,
    mut observe: impl FnMut(&SomGrid),
) -> Result<SomGrid> {
    config.validate()?;
    if data.is_empty() {
        return Err(Error::EmptyItems);
    }
    for x in data {
        if x.len() != grid.dim() {
            return Err(Error::DimensionMismatch {
                expected: grid.dim(),
                found: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("training vector".into()));
        }
    }

    let shape = grid.shape();
    let mut order: Vec<usize> = (0..data.len()).collect();
    for round in 0..config.rounds {
        let (alpha, sigma) = schedule(round, config)?;
        order.shuffle(rng);
        for &i in &order {
            let x = &data[i];
            let (bmu, _) = grid.nearest(x);
            let bmu = shape.node(bmu);
            for n in 0..shape.len() {
                let rate = alpha * neighborhood(shape.node(n).lattice_dist_sq(bmu), sigma);
                for (p, &target) in grid.pointer_mut(n).iter_mut().zip(x) {
                    let moved = *p + rate * (target - *p);
                    // Keep the result between the old value and the target so
                    // rounding never leaves the convex hull.
                    *p = moved.clamp(p.min(target), p.max(target));
                }
            }
            observe(&grid);
        }
    }
    Ok(grid)
}

/// Everything produced by one seeded training run.
#[derive(Debug, Clone)]
pub struct FittedMap {
    pub normalizer: Normalizer,
    /// Normalized training vectors, in item order.
    pub data: Vec<Vec<f64>>,
    pub initial: SomGrid,
    pub grid: SomGrid,
}

/// Fits the normalizer, initializes the grid and trains it, all from `config.seed`.
pub fn fit_map(items: &[Item], shape: GridShape, config: &TrainingConfig) -> Result<FittedMap> {
    config.validate()?;
    let normalizer = fit_normalizer(items)?;
    let data = normalizer.normalize_items(items)?;
    let mut rng = seeded_rng(config.seed);
    let initial = init_grid_with(shape, normalizer.dim(), &mut rng)?;
    let grid = train(initial.clone(), &data, config, &mut rng)?;
    Ok(FittedMap {
        normalizer,
        data,
        initial,
        grid,
    })
}
