use qmath::{
    bell_state, dephase_gaussian, entanglement_swap, fidelity, BellLabel, DensityMatrix,
};
use ratemodel::{renewal_stats, RenewalParams};

use crate::config::ProtocolConfig;

/// Ion-photon pair with Bell fidelity f0 as a Phi+/Phi- two-component mixture.
pub fn two_component_pair(f0: f64) -> DensityMatrix {
    DensityMatrix::mixture(&[
        (f0, bell_state(BellLabel::PhiPlus)),
        (1.0 - f0, bell_state(BellLabel::PhiMinus)),
    ])
    .expect("valid pair fidelity")
}

/// Predicted fidelity of the distributed two-photon state with Phi+.
///
/// The memory-side pair dephases for k attempt slots while the other arm keeps
/// trying; a perfect swap with feedforward then combines it with the fresh
/// pair. The result is averaged over the exact distribution of the memory hold
/// length k (including the both-in-one-slot case k = 0).
pub fn predicted_final_fidelity(cfg: &ProtocolConfig, f0: f64, tau: f64, t_attempt: f64) -> f64 {
    let stats = renewal_stats(&RenewalParams {
        p_a1: cfg.p_a1,
        p_b1: cfg.p_b1,
        p_a2: cfg.p_a2,
        p_b2: cfg.p_b2,
        k_cap: cfg.loop2_max,
    });
    let fresh = two_component_pair(f0);
    let target = bell_state(BellLabel::PhiPlus);
    let mut total = 0.0;
    for (k, &weight) in stats.k_distribution.iter().enumerate() {
        if weight == 0.0 {
            continue;
        }
        let held = dephase_gaussian(&fresh, k as f64 * t_attempt, tau).expect("valid tau");
        let (out, _) = entanglement_swap(&held, &fresh, BellLabel::PhiPlus).expect("swap");
        total += weight * fidelity(&out, &target).expect("two-qubit state");
    }
    total
}
