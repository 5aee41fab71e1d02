use ratemodel::{LinkParams, NodeParams};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimMode {
    Repeater,
    Direct,
}

/// Discrete-event protocol configuration.
///
/// One attempt slot lasts `t_attempt_* + t_wait` (photon generation plus
/// heralding travel); the swap duration is paid once per success; `t_init`
/// is paid once per protocol cycle and only affects the absolute rate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProtocolConfig {
    /// Per-attempt detection probability, arm A, Loop 1.
    pub p_a1: f64,
    /// Per-attempt detection probability, arm B, Loop 1.
    pub p_b1: f64,
    /// Per-attempt detection probability, arm A, Loop 2.
    pub p_a2: f64,
    /// Per-attempt detection probability, arm B, Loop 2.
    pub p_b2: f64,
    /// Maximum Loop-1 attempts per cycle.
    pub loop1_max: u32,
    /// Maximum Loop-2 attempts (memory cutoff K).
    pub loop2_max: u32,
    /// Photon-generation time per Loop-1 attempt, seconds.
    pub t_attempt_loop1: f64,
    /// Photon-generation time per Loop-2 attempt, seconds.
    pub t_attempt_loop2: f64,
    /// One-way heralding travel time per attempt, seconds.
    pub t_wait: f64,
    /// Swap (DBSM and feedforward) duration, seconds.
    pub t_swap: f64,
    /// Initialization time per protocol cycle, seconds.
    pub t_init: f64,
    pub mode: SimMode,
    /// End-to-end fiber length, km.
    pub l_km: f64,
    /// Speed of light in fiber, m/s.
    pub c_m_per_s: f64,
}

impl Default for ProtocolConfig {
    fn default() -> Self {
        Self {
            p_a1: 3.06e-3,
            p_b1: 2.36e-3,
            p_a2: 2.64e-3,
            p_b2: 1.81e-3,
            loop1_max: 29,
            loop2_max: 190,
            t_attempt_loop1: 175e-6,
            t_attempt_loop2: 123e-6,
            t_wait: 250e-6,
            t_swap: 2157e-6,
            t_init: 7.24e-3,
            mode: SimMode::Repeater,
            l_km: 50.0,
            c_m_per_s: 2e8,
        }
    }
}

impl ProtocolConfig {
    /// Configuration matching the analytic rate model for the given node and
    /// link: symmetric arm probabilities P0 sqrt(eta) (repeater) or P0 eta
    /// (direct), uniform attempt overhead, heralding time L/c.
    pub fn from_node_link(node: &NodeParams, link: &LinkParams, mode: SimMode) -> Self {
        let p = match mode {
            SimMode::Repeater => node.p0_link * link.eta().sqrt(),
            SimMode::Direct => node.p0_link * link.eta(),
        };
        let t_attempt = match mode {
            SimMode::Repeater => node.t0,
            SimMode::Direct => node.t0_direct,
        };
        Self {
            p_a1: p,
            p_b1: p,
            p_a2: p,
            p_b2: p,
            loop2_max: node.k.unwrap_or(190),
            t_attempt_loop1: t_attempt,
            t_attempt_loop2: t_attempt,
            t_wait: link.l_km / link.c_km_per_s(),
            t_swap: node.t_swap,
            mode,
            l_km: link.l_km,
            c_m_per_s: link.c_m_per_s,
            ..Self::default()
        }
    }

    /// Duration of one Loop-1 attempt slot.
    pub fn slot1(&self) -> f64 {
        self.t_attempt_loop1 + self.t_wait
    }

    /// Duration of one Loop-2 attempt slot.
    pub fn slot2(&self) -> f64 {
        self.t_attempt_loop2 + self.t_wait
    }

    pub fn validate(&self) -> Result<(), String> {
        for p in [self.p_a1, self.p_b1, self.p_a2, self.p_b2] {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("probability {p} outside [0,1]"));
            }
        }
        for t in [
            self.t_attempt_loop1,
            self.t_attempt_loop2,
            self.t_wait,
            self.t_swap,
            self.t_init,
        ] {
            if t < 0.0 {
                return Err(format!("negative duration {t}"));
            }
        }
        if self.loop1_max < 1 || self.loop2_max < 1 {
            return Err("loop caps must be at least 1".into());
        }
        Ok(())
    }
}
