pub mod dataset;
pub mod feedforward;
pub mod mc;
pub mod mle;
pub mod rotations;
pub mod setting;
pub mod states;
pub mod synthetic;

pub use dataset::{BasisPair, ProbMap, SettingRecord, TomoDataset, TomoError, WeightMap};
pub use feedforward::{feedforward_reconstruct, FeedforwardGroup};
pub use mc::{mc_error_bars, MCConfig};
pub use mle::{mle_reconstruct, mle_solve, MleResult, MleTerm, MLE_MAX_ITERS, MLE_TOL};
pub use rotations::{
    bell_form_search, exp_sigma_z, restricted_rotation_fit, BellFormFit, RestrictedFit,
};
pub use setting::{
    all_settings, projector_index, projector_order, projector_vector, Basis, Proj,
    ProjectorSetting,
};
pub use states::{distinct_state_count, fit_memory_tau};
pub use synthetic::{
    born_probabilities, generate_dataset, uniform_weights, SyntheticConfig,
};
