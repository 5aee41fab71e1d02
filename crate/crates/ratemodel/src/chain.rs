use qmath::{
    bell_state, depolarize, entanglement_swap, nearest_max_entangled_fidelity, BellLabel,
    DensityMatrix,
};

use crate::params::{channel_eta, LinkParams, NodeParams};

/// Expected time to distribute entanglement across a 2^n-link repeater chain
/// with link spacing L0. For n = 0 a single bare link applies.
pub fn chain_time(n_levels: u32, node: &NodeParams, link: &LinkParams) -> f64 {
    let eta_t = channel_eta(link.gamma, link.l0_km / 2.0);
    let t_attempt = link.l0_km / link.c_km_per_s() + node.t0;
    let base = t_attempt / (node.p0_link * node.p0_link * eta_t * eta_t);
    if n_levels == 0 {
        base
    } else {
        base * 3f64.powi(n_levels as i32) / 2f64.powi(n_levels as i32 - 1)
    }
}

/// Elementary photonic link state F|Psi-><Psi-| + (1-F)|Psi+><Psi+| with
/// F = (1 + V (1-2 F0)^2)/2.
pub fn link_state(f0: f64, v: f64) -> DensityMatrix {
    let f = (1.0 + v * (1.0 - 2.0 * f0) * (1.0 - 2.0 * f0)) / 2.0;
    DensityMatrix::mixture(&[
        (f, bell_state(BellLabel::PsiMinus)),
        (1.0 - f, bell_state(BellLabel::PsiPlus)),
    ])
    .expect("valid link state")
}

/// Fidelity with the nearest maximally entangled state after n nesting levels
/// of {pairwise entanglement swap, then swap-infidelity depolarization}.
pub fn chain_fidelity(n_levels: u32, f0: f64, f_swap_ions: f64, v: f64) -> f64 {
    let mut rho = link_state(f0, v);
    for _ in 0..n_levels {
        let (swapped, _) = entanglement_swap(&rho, &rho, BellLabel::PhiPlus)
            .expect("swap outcome always has positive probability here");
        rho = depolarize(&swapped, f_swap_ions).expect("valid depolarizing fidelity");
    }
    nearest_max_entangled_fidelity(&rho).expect("two-qubit state")
}
