use serde::{Deserialize, Serialize};

/// Repeater-node performance parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeParams {
    /// Photon delivery-and-detection probability per attempt, excluding fiber loss.
    pub p0_link: f64,
    /// Memory Gaussian dephasing time in seconds.
    pub tau: f64,
    /// Ion-photon state fidelity.
    pub f0: f64,
    /// Ion-ion swap fidelity (depolarizing parameter).
    pub f_swap_ions: f64,
    /// Two-photon interference visibility.
    pub v: f64,
    /// Per-attempt overhead time in seconds (repeater configuration).
    pub t0: f64,
    /// Per-attempt overhead time in seconds (direct configuration).
    pub t0_direct: f64,
    /// Ion-ion swap duration in seconds, paid once per success.
    pub t_swap: f64,
    /// Memory cutoff: maximum second-loop attempts. None means the cutoff is
    /// chosen by the secret-key pipeline (or effectively unbounded for RKR).
    pub k: Option<u32>,
}

impl NodeParams {
    /// Parameters of the realized node.
    pub fn current() -> Self {
        Self {
            p0_link: 0.018,
            tau: 0.062,
            f0: 0.96,
            f_swap_ions: 0.95,
            v: 0.38,
            t0: 123e-6,
            t0_direct: 201e-6,
            t_swap: 2157e-6,
            k: Some(190),
        }
    }

    /// Projected enhanced-node parameters.
    pub fn enhanced() -> Self {
        Self {
            p0_link: 0.21,
            tau: 0.63,
            f0: 0.99,
            f_swap_ions: 0.99,
            v: 0.98,
            t0: 123e-6,
            t0_direct: 201e-6,
            t_swap: 2157e-6,
            k: None,
        }
    }
}

/// Fiber-channel parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinkParams {
    /// End-to-end fiber length in km.
    pub l_km: f64,
    /// Attenuation coefficient in 1/km (eta = 10^(-gamma L)).
    pub gamma: f64,
    /// Speed of light in fiber, m/s.
    pub c_m_per_s: f64,
    /// Link spacing in km for repeater-chain projections.
    pub l0_km: f64,
}

impl LinkParams {
    pub fn new(l_km: f64) -> Self {
        Self { l_km, gamma: 0.0173, c_m_per_s: 2e8, l0_km: l_km }
    }

    pub fn c_km_per_s(&self) -> f64 {
        self.c_m_per_s / 1000.0
    }

    /// eta = 10^(-gamma L).
    pub fn eta(&self) -> f64 {
        channel_eta(self.gamma, self.l_km)
    }
}

/// Fiber transmission 10^(-gamma L).
pub fn channel_eta(gamma: f64, l_km: f64) -> f64 {
    10f64.powf(-gamma * l_km)
}
