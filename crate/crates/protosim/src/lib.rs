//! Discrete-event Monte-Carlo simulator of the repeater protocol
//! (Loop 1 / Loop 2 / deterministic Bell-state measurement) and of the
//! direct-transmission configuration.

pub mod config;
pub mod fidelity;
pub mod sim;

pub use config::{ProtocolConfig, SimMode};
pub use fidelity::{predicted_final_fidelity, two_component_pair};
pub use sim::{enhancement_factors, simulate_direct, simulate_repeater, SimStats};
