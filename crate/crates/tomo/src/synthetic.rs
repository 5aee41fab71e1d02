use qmath::DensityMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::dataset::{SettingRecord, TomoDataset};
use crate::setting::{all_settings, projector_vector};

/// Synthetic-experiment parameters for generating tomography counters.
#[derive(Debug, Clone)]
pub struct SyntheticConfig {
    /// Raman pulses per setting on ion A.
    pub m_a: u64,
    /// Loop-2 pulses per node-A success.
    pub m_b_multiplier: u64,
    /// Detection efficiency of arm A (polarization independent part).
    pub d_a: f64,
    /// Detection efficiency of arm B.
    pub d_b: f64,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        Self { m_a: 2_000_000, m_b_multiplier: 30, d_a: 0.02, d_b: 0.02, seed: 1 }
    }
}

/// Generates a sampled tomography dataset from the four conditional two-photon
/// states and their priors, following the single-detector counting model:
/// node A detects per pulse with d_A * P(a), node B then detects per Loop-2
/// pulse with d_B * P(b|a), and coincidences split over ion outcomes.
pub fn generate_dataset(
    states: &[DensityMatrix; 4],
    priors: &[f64; 4],
    cfg: &SyntheticConfig,
) -> TomoDataset {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let total_prior: f64 = priors.iter().sum();
    let mut records = Vec::with_capacity(36);
    for setting in all_settings() {
        // Born probabilities per ion outcome for this joint projector.
        let v = setting.vector();
        let p_joint: Vec<f64> = states
            .iter()
            .zip(priors)
            .map(|(rho, prior)| {
                prior / total_prior * v.dagger().mul(rho.matrix()).mul(&v).get(0, 0).re
            })
            .collect();
        let p_bb: f64 = p_joint.iter().sum();
        // Marginal probability that photon A passes its analyzer, from the
        // averaged state; P(b'|b) follows by division.
        let a_vec = projector_vector(setting.basis_a, setting.proj_a);
        let p_a: f64 = states
            .iter()
            .zip(priors)
            .map(|(rho, prior)| {
                let mut p = 0.0;
                for pb in 0..2 {
                    let idx = |a: usize| 2 * a + pb;
                    for a1 in 0..2 {
                        for a2 in 0..2 {
                            p += (a_vec[a1].conj()
                                * rho.get(idx(a1), idx(a2))
                                * a_vec[a2])
                                .re;
                        }
                    }
                }
                prior / total_prior * p
            })
            .sum();

        let n_a = Binomial::new(cfg.m_a, (cfg.d_a * p_a).clamp(0.0, 1.0))
            .expect("valid binomial")
            .sample(&mut rng);
        let m_b_given_a = (n_a.max(1)) * cfg.m_b_multiplier;
        let p_cond = if p_a > 0.0 { (p_bb / p_a).clamp(0.0, 1.0) } else { 0.0 };
        let c_total = Binomial::new(m_b_given_a, (cfg.d_b * p_cond).clamp(0.0, 1.0))
            .expect("valid binomial")
            .sample(&mut rng);
        // Split coincidences over ion outcomes.
        let mut c = [0u64; 4];
        let mut remaining = c_total;
        let mut mass = p_bb;
        for i in 0..4 {
            if remaining == 0 || mass <= 0.0 {
                break;
            }
            if i == 3 {
                c[3] = remaining;
                break;
            }
            let p = (p_joint[i] / mass).clamp(0.0, 1.0);
            let draw = Binomial::new(remaining, p).expect("valid binomial").sample(&mut rng);
            c[i] = draw;
            remaining -= draw;
            mass -= p_joint[i];
        }
        records.push(SettingRecord { setting, c, n_a, m_a: cfg.m_a, m_b_given_a });
    }
    TomoDataset { settings: records }
}

/// Exact Born-rule probabilities of a state in every basis pair, as produced
/// by an ideal experiment (useful as an MLE forward-model oracle).
pub fn born_probabilities(rho: &DensityMatrix) -> crate::dataset::ProbMap {
    let mut out = crate::dataset::ProbMap::new();
    for setting in all_settings() {
        let v = setting.vector();
        let p = v.dagger().mul(rho.matrix()).mul(&v).get(0, 0).re.max(0.0);
        let entry = out.entry(setting.basis_pair()).or_insert([0.0; 4]);
        let idx = crate::setting::projector_index(setting.proj_a, setting.proj_b);
        entry[idx] = p;
    }
    for probs in out.values_mut() {
        let total: f64 = probs.iter().sum();
        for p in probs.iter_mut() {
            *p /= total;
        }
    }
    out
}

/// Uniform likelihood weights for synthetic probability maps.
pub fn uniform_weights(n: f64) -> crate::dataset::WeightMap {
    let mut out = crate::dataset::WeightMap::new();
    for setting in all_settings() {
        out.insert(setting.basis_pair(), n);
    }
    out
}
