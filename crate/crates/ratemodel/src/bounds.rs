use crate::params::{LinkParams, NodeParams};

/// Minimum link length for a repeater advantage: L* = -2 log10(2/3)/gamma.
pub fn bound_min_length(gamma: f64) -> f64 {
    assert!(gamma > 0.0);
    -2.0 * (2.0f64 / 3.0).log10() / gamma
}

/// Required memory storage time t_bar = 3 log10(3/2)/(P0 c gamma).
pub fn bound_storage_time(node: &NodeParams, link: &LinkParams) -> f64 {
    3.0 * 1.5f64.log10() / (node.p0_link * link.c_km_per_s() * link.gamma)
}

/// Average attempts before swapping: k_bar = 3/(2 P0).
pub fn bound_khat(node: &NodeParams) -> f64 {
    3.0 / (2.0 * node.p0_link)
}

/// Perfect-memory advantage bounds: (sqrt(eta*), t_perfect) with
/// sqrt(eta*) = 2P0/3 and t_perfect = -3 log10(2P0/3)/(P0^2 gamma c).
/// Returns None when 2P0/3 >= 1 and the bound is vacuous.
pub fn bound_perfect(node: &NodeParams, link: &LinkParams) -> Option<(f64, f64)> {
    let sqrt_eta_star = 2.0 * node.p0_link / 3.0;
    if sqrt_eta_star >= 1.0 {
        return None;
    }
    let t_perfect = -3.0 * sqrt_eta_star.log10()
        / (node.p0_link * node.p0_link * link.gamma * link.c_km_per_s());
    Some((sqrt_eta_star, t_perfect))
}
