use serde::{Deserialize, Serialize};

/// Degenerate-averaged mode frequencies (MHz), order
/// [radial COM, radial rocking, axial COM, axial stretch].
pub const MODE_FREQS_MHZ: [f64; 4] = [2.155, 1.928, 0.963, 1.668];
/// Mean phonon numbers at the start of Loop 2, mode order as above.
pub const START_NBAR: [f64; 4] = [8.0, 9.0, 0.0, 11.0];
/// Mean phonon numbers after 210 photon generation attempts.
pub const END_NBAR: [f64; 4] = [29.0, 34.0, 9.2, 16.0];
/// Attempt count separating START_NBAR from END_NBAR.
pub const HEATING_ATTEMPTS: u32 = 210;

/// Thermal state of the four averaged motional modes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MotionalState {
    /// Mode frequencies, MHz.
    pub freqs_mhz: [f64; 4],
    /// Mean phonon numbers per mode.
    pub nbar: [f64; 4],
    /// Lamb-Dicke parameters per mode, if calibrated.
    pub eta: Option<[f64; 4]>,
}

impl MotionalState {
    pub fn new(nbar: [f64; 4]) -> Self {
        Self { freqs_mhz: MODE_FREQS_MHZ, nbar, eta: None }
    }

    /// Coldest temperatures expected at the beginning of Loop 2.
    pub fn start_of_loop2() -> Self {
        Self::new(START_NBAR)
    }

    /// Temperatures after 210 photon generation attempts.
    pub fn end_of_loop2() -> Self {
        heating_trajectory(HEATING_ATTEMPTS, &heating_rates(), &Self::start_of_loop2())
    }

    /// Average (midpoint) Loop-2 temperatures.
    pub fn mid_loop2() -> Self {
        heating_trajectory(HEATING_ATTEMPTS / 2, &heating_rates(), &Self::start_of_loop2())
    }

    pub fn with_eta(mut self, eta: [f64; 4]) -> Self {
        self.eta = Some(eta);
        self
    }
}

/// Per-mode heating rates (phonons per attempt) calibrated from the Loop-2
/// endpoint temperatures.
pub fn heating_rates() -> [f64; 4] {
    let mut rates = [0.0; 4];
    for i in 0..4 {
        rates[i] = (END_NBAR[i] - START_NBAR[i]) / HEATING_ATTEMPTS as f64;
    }
    rates
}

/// Linear heating: nbar_i(k) = start_i + k * rate_i.
pub fn heating_trajectory(k_attempts: u32, rates: &[f64; 4], start: &MotionalState) -> MotionalState {
    let mut nbar = start.nbar;
    for i in 0..4 {
        nbar[i] += k_attempts as f64 * rates[i];
    }
    MotionalState { freqs_mhz: start.freqs_mhz, nbar, eta: start.eta }
}
