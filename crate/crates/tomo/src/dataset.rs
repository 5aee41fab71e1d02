use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::setting::{projector_index, Basis, ProjectorSetting};

#[derive(Debug, Error)]
pub enum TomoError {
    #[error("dataset must contain all 36 settings exactly once (found {0})")]
    WrongSettingCount(usize),
    #[error("duplicate setting {0:?}")]
    DuplicateSetting(ProjectorSetting),
    #[error("zero attempt counter in setting {0:?}")]
    ZeroDenominator(ProjectorSetting),
    #[error("all counts zero for ion outcome {ion} in basis pair {pair:?}")]
    EmptyBasisPair { ion: usize, pair: (Basis, Basis) },
    #[error("ion outcome index {0} outside 1..=4")]
    BadIonOutcome(usize),
    #[error("MLE did not converge and more than 5% of resamples were dropped ({dropped}/{total})")]
    TooManyDropped { dropped: usize, total: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Counters for one analyzer setting.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SettingRecord {
    #[serde(flatten)]
    pub setting: ProjectorSetting,
    /// Coincidence counts per ion outcome i = 1..4.
    #[serde(rename = "C")]
    pub c: [u64; 4],
    /// Loop-1 detections at node A under this A-projector.
    #[serde(rename = "N_A")]
    pub n_a: u64,
    /// Raman pulses on ion A under this A-projector.
    #[serde(rename = "M_A")]
    pub m_a: u64,
    /// Loop-2 pulses on ion B following an A success under this setting.
    #[serde(rename = "M_B_given_A")]
    pub m_b_given_a: u64,
}

/// Raw tomography dataset: counters for all 36 settings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TomoDataset {
    pub settings: Vec<SettingRecord>,
}

pub type BasisPair = (Basis, Basis);
/// Per basis pair: probabilities of the four projector combinations in
/// canonical (++, +-, -+, --) order.
pub type ProbMap = BTreeMap<BasisPair, [f64; 4]>;
/// Per basis pair: effective sample size for likelihood weighting.
pub type WeightMap = BTreeMap<BasisPair, f64>;

impl TomoDataset {
    pub fn validate(&self) -> Result<(), TomoError> {
        if self.settings.len() != 36 {
            return Err(TomoError::WrongSettingCount(self.settings.len()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for rec in &self.settings {
            if !seen.insert(rec.setting) {
                return Err(TomoError::DuplicateSetting(rec.setting));
            }
        }
        Ok(())
    }

    pub fn from_json(json: &str) -> Result<Self, TomoError> {
        let data: TomoDataset =
            serde_json::from_str(json).map_err(|e| TomoError::Invalid(e.to_string()))?;
        data.validate()?;
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dataset serializes")
    }

    fn record(&self, pair: BasisPair, idx: usize) -> &SettingRecord {
        self.settings
            .iter()
            .find(|r| {
                r.setting.basis_pair() == pair
                    && projector_index(r.setting.proj_a, r.setting.proj_b) == idx
            })
            .expect("validated dataset has all settings")
    }

    /// Conditional probabilities P(bb'|i) for ion outcome i in 1..=4:
    /// proportional to C_i * N_A / M_A / M_B_given_A, renormalized within
    /// each basis pair.
    pub fn bayes_probabilities(&self, ion_outcome: usize) -> Result<ProbMap, TomoError> {
        self.validate()?;
        if !(1..=4).contains(&ion_outcome) {
            return Err(TomoError::BadIonOutcome(ion_outcome));
        }
        let mut out = ProbMap::new();
        for basis_a in Basis::ALL {
            for basis_b in Basis::ALL {
                let pair = (basis_a, basis_b);
                let mut w = [0.0; 4];
                for (idx, value) in w.iter_mut().enumerate() {
                    let rec = self.record(pair, idx);
                    if rec.m_a == 0 || rec.m_b_given_a == 0 {
                        return Err(TomoError::ZeroDenominator(rec.setting));
                    }
                    *value = rec.c[ion_outcome - 1] as f64 * rec.n_a as f64
                        / rec.m_a as f64
                        / rec.m_b_given_a as f64;
                }
                let total: f64 = w.iter().sum();
                if total <= 0.0 {
                    return Err(TomoError::EmptyBasisPair { ion: ion_outcome, pair });
                }
                for value in &mut w {
                    *value /= total;
                }
                out.insert(pair, w);
            }
        }
        Ok(out)
    }

    /// Effective per-basis-pair sample sizes: total raw counts for the ion outcome.
    pub fn likelihood_weights(&self, ion_outcome: usize) -> Result<WeightMap, TomoError> {
        self.validate()?;
        if !(1..=4).contains(&ion_outcome) {
            return Err(TomoError::BadIonOutcome(ion_outcome));
        }
        let mut out = WeightMap::new();
        for rec in &self.settings {
            *out.entry(rec.setting.basis_pair()).or_insert(0.0) +=
                rec.c[ion_outcome - 1] as f64;
        }
        Ok(out)
    }
}
