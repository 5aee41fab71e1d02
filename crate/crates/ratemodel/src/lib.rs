//! Analytic rate formulas, repeater-vs-direct bounds, truncated-memory raw key
//! rate, secret-key-rate pipeline, repeaterless bound, and repeater-chain
//! time/fidelity projections.

pub mod bounds;
pub mod budget;
pub mod chain;
pub mod params;
pub mod rates;
pub mod renewal;
pub mod skr;

pub use bounds::{bound_khat, bound_min_length, bound_perfect, bound_storage_time};
pub use budget::{efficiency_budget, NODE_A_BUDGET, NODE_B_BUDGET};
pub use chain::{chain_fidelity, chain_time, link_state};
pub use params::{channel_eta, LinkParams, NodeParams};
pub use rates::{
    arm_probability, attempt_time, repeaterless_requirements, rkr_direct, rkr_repeater,
    rkr_repeater_with_k, skr_bound, UNBOUNDED_K,
};
pub use renewal::{renewal_stats, RenewalParams, RenewalStats};
pub use skr::{skf_six_state, skr_pipeline, SkrResult, MAX_K_SEARCH, SKF_CUTOFF};
