pub mod cavity;
pub mod error;
pub mod motion;
pub mod ramsey;
pub mod spinecho;

pub use cavity::{cavity_coupling, equalize_coupling, CavityGeometry};
pub use error::NodeError;
pub use motion::{
    heating_rates, heating_trajectory, MotionalState, END_NBAR, HEATING_ATTEMPTS,
    MODE_FREQS_MHZ, START_NBAR,
};
pub use ramsey::ramsey_amplitude;
pub use spinecho::{
    calibrate_eta_scale, echo_unitary, eta_template, repump, spin_echo_visibility, EchoResult,
    SpinEchoConfig, COVERAGE_WARN,
};
