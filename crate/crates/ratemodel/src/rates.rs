use crate::params::{LinkParams, NodeParams};
use crate::renewal::{renewal_stats, RenewalParams};

/// Effective loop-2 cutoff used when no explicit cutoff is configured.
pub const UNBOUNDED_K: u32 = 1_000_000;

/// Direct two-photon rate: per-attempt success 1-(1-P0 eta)^2 (either photon
/// may herald), attempt time t0_direct + 2L/c.
pub fn rkr_direct(node: &NodeParams, link: &LinkParams) -> f64 {
    let p = node.p0_link * link.eta();
    let p_success = 1.0 - (1.0 - p) * (1.0 - p);
    let t_attempt = node.t0_direct + 2.0 * link.l_km / link.c_km_per_s();
    p_success / t_attempt
}

/// Per-arm success probability in the repeater configuration: P0 sqrt(eta).
pub fn arm_probability(node: &NodeParams, link: &LinkParams) -> f64 {
    node.p0_link * link.eta().sqrt()
}

/// Repeater attempt duration t0 + L/c (arm travel plus heralding return).
pub fn attempt_time(node: &NodeParams, link: &LinkParams) -> f64 {
    node.t0 + link.l_km / link.c_km_per_s()
}

/// Repeater rate 1/(n_bar T + T_swap) with n_bar from the exact renewal model.
pub fn rkr_repeater(node: &NodeParams, link: &LinkParams) -> f64 {
    rkr_repeater_with_k(node, link, node.k.unwrap_or(UNBOUNDED_K))
}

pub fn rkr_repeater_with_k(node: &NodeParams, link: &LinkParams, k: u32) -> f64 {
    let p = arm_probability(node, link);
    let stats = renewal_stats(&RenewalParams::symmetric(p, p, k));
    1.0 / (stats.mean_attempts * attempt_time(node, link) + node.t_swap)
}

/// PLOB-style repeaterless bound -log2(1-eta) c/L in Hz.
pub fn skr_bound(link: &LinkParams) -> f64 {
    let eta = link.eta();
    -(1.0 - eta).log2() * link.c_km_per_s() / link.l_km
}

/// Source requirements for beating `target_rate` without a repeater:
/// (attempt rate in Hz, number of simultaneously in-flight modes).
pub fn repeaterless_requirements(link: &LinkParams, target_rate: f64) -> (f64, f64) {
    assert!(link.l_km > 0.0 && target_rate > 0.0);
    let attempt_rate = target_rate / link.eta();
    let modes = attempt_rate * 2.0 * link.l_km / link.c_km_per_s();
    (attempt_rate, modes)
}
