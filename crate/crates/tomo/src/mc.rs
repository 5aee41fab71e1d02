use qmath::DensityMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{TomoDataset, TomoError};
use crate::mle::mle_reconstruct;

/// Monte-Carlo resampling configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MCConfig {
    pub resamples: usize,
    /// Tail mass defining the error bars (0.1590 approximates one sigma).
    pub quantile: f64,
    /// Poisson mean substituted for observed zero counts during resampling.
    pub zero_substitute: u64,
    pub seed: u64,
}

impl Default for MCConfig {
    fn default() -> Self {
        Self { resamples: 500, quantile: 0.1590, zero_substitute: 1, seed: 0 }
    }
}

fn quantile_of_sorted(sorted: &[f64], q: f64) -> f64 {
    // Linear interpolation between order statistics.
    let n = sorted.len();
    let pos = q * (n - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] * (1.0 - frac) + sorted[hi] * frac
}

fn resampled_dataset(data: &TomoDataset, cfg: &MCConfig, rng: &mut ChaCha8Rng) -> TomoDataset {
    let mut out = data.clone();
    for rec in &mut out.settings {
        for c in &mut rec.c {
            let mean = if *c == 0 { cfg.zero_substitute } else { *c };
            if mean == 0 {
                continue;
            }
            let poisson = Poisson::new(mean as f64).expect("positive mean");
            *c = poisson.sample(rng) as u64;
        }
    }
    out
}

/// Monte-Carlo error bars for a reconstructed-state statistic.
///
/// The point estimate uses the raw counts; each resample replaces every count
/// with a Poisson draw (zeros substituted by `zero_substitute` as mean),
/// rebuilds the probabilities and the MLE state, and re-evaluates the
/// statistic. Returns (value, delta_minus, delta_plus), the distances from the
/// resample median to the `quantile` tails. Deterministic for a fixed seed.
pub fn mc_error_bars<F>(
    data: &TomoDataset,
    ion_outcome: usize,
    statistic: F,
    cfg: &MCConfig,
) -> Result<(f64, f64, f64), TomoError>
where
    F: Fn(&DensityMatrix) -> f64 + Sync,
{
    assert!(cfg.quantile > 0.0 && cfg.quantile < 0.5, "quantile must be in (0, 0.5)");
    let probs = data.bayes_probabilities(ion_outcome)?;
    let weights = data.likelihood_weights(ion_outcome)?;
    let point = mle_reconstruct(&probs, &weights);
    let value = statistic(&point.rho);

    let samples: Vec<Option<f64>> = (0..cfg.resamples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(idx as u64 + 1);
            let resampled = resampled_dataset(data, cfg, &mut rng);
            let probs = resampled.bayes_probabilities(ion_outcome).ok()?;
            let weights = resampled.likelihood_weights(ion_outcome).ok()?;
            let mle = mle_reconstruct(&probs, &weights);
            if !mle.converged {
                return None;
            }
            Some(statistic(&mle.rho))
        })
        .collect();

    let mut values: Vec<f64> = samples.iter().filter_map(|s| *s).collect();
    let dropped = cfg.resamples - values.len();
    if dropped * 20 > cfg.resamples {
        return Err(TomoError::TooManyDropped { dropped, total: cfg.resamples });
    }
    values.sort_by(|a, b| a.total_cmp(b));
    let median = quantile_of_sorted(&values, 0.5);
    let lo = quantile_of_sorted(&values, cfg.quantile);
    let hi = quantile_of_sorted(&values, 1.0 - cfg.quantile);
    Ok((value, median - lo, hi - median))
}
