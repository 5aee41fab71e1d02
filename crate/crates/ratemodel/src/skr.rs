use qmath::{bell_state, dephase_gaussian, depolarize, qber, BellLabel, DensityMatrix};

use crate::params::{LinkParams, NodeParams};
use crate::rates::{arm_probability, attempt_time};
use crate::renewal::{renewal_stats, RenewalParams};

/// Minimum usable secret key fraction for a memory slot.
pub const SKF_CUTOFF: f64 = 0.1;
/// Search ceiling for the memory cutoff.
pub const MAX_K_SEARCH: u32 = 1_000_000;

fn binary_entropy(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Asymptotic six-state secret key fraction from the three QBERs, clipped to [0,1].
pub fn skf_six_state(e_x: f64, e_y: f64, e_z: f64) -> f64 {
    for e in [e_x, e_y, e_z] {
        assert!(
            (-1e-9..=0.5 + 1e-9).contains(&e),
            "QBER {e} outside [0, 0.5]"
        );
    }
    let r = if e_z < 1e-12 {
        1.0 - binary_entropy((e_x + e_y) / 2.0)
    } else {
        1.0 - binary_entropy(e_z)
            - e_z * binary_entropy((1.0 + (e_x - e_y) / e_z) / 2.0)
            - (1.0 - e_z)
                * binary_entropy((1.0 - (e_x + e_y + e_z) / 2.0) / (1.0 - e_z))
    };
    r.clamp(0.0, 1.0)
}

#[derive(Debug, Clone, Copy)]
pub struct SkrResult {
    /// Secret key rate in Hz.
    pub skr_hz: f64,
    /// Adopted memory cutoff (loop-2 attempts).
    pub k_cutoff: u32,
    /// Raw key rate at the adopted cutoff, Hz.
    pub rkr_hz: f64,
    /// Secret key fraction of the attempt-averaged state.
    pub skf: f64,
}

/// Hold-independent part of the distributed-pair state: both ion-photon pairs
/// at fidelity F0 combined by the ion-ion swap (depolarizing weight product),
/// followed by the swap's own depolarization at F_swap. The commuting memory
/// dephasing is applied per hold length on top of this.
fn base_state(node: &NodeParams) -> DensityMatrix {
    let pair = depolarize(&bell_state(BellLabel::PhiPlus), node.f0).expect("valid F0");
    let both = depolarize(&pair, node.f0).expect("valid F0");
    depolarize(&both, node.f_swap_ions).expect("valid swap fidelity")
}

/// State after the memory held for k attempt slots.
fn held_state(base: &DensityMatrix, node: &NodeParams, t_slot: f64, k: u32) -> DensityMatrix {
    dephase_gaussian(base, k as f64 * t_slot, node.tau).expect("valid tau")
}

fn skf_of(rho: &DensityMatrix) -> f64 {
    let (ex, ey, ez) = qber(rho, BellLabel::PhiPlus).expect("two-qubit state");
    skf_six_state(ex.clamp(0.0, 0.5), ey.clamp(0.0, 0.5), ez.clamp(0.0, 0.5))
}

/// Largest k in [1, MAX_K_SEARCH] with SKF(held_state(k)) >= SKF_CUTOFF, or
/// None if even k = 1 falls below the cutoff.
fn cutoff_from_threshold(base: &DensityMatrix, node: &NodeParams, t_slot: f64) -> Option<u32> {
    let usable = |k: u32| skf_of(&held_state(base, node, t_slot, k)) >= SKF_CUTOFF;
    if !usable(1) {
        return None;
    }
    // Exponential bracket, then bisection on the monotone-decaying SKF.
    let mut lo = 1u32;
    let mut hi = 2u32;
    while hi < MAX_K_SEARCH && usable(hi) {
        lo = hi;
        hi = hi.saturating_mul(2).min(MAX_K_SEARCH);
    }
    if hi == MAX_K_SEARCH && usable(hi) {
        return Some(MAX_K_SEARCH);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if usable(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Three-stage secret-key-rate pipeline: memory window from the SKF cutoff
/// (or the node's configured cutoff), raw key rate from the truncated renewal
/// model, and SKF of the success-weighted average state.
pub fn skr_pipeline(node: &NodeParams, link: &LinkParams) -> SkrResult {
    let t_slot = attempt_time(node, link);
    let base = base_state(node);
    let k_cutoff = match node.k {
        Some(k) => k,
        None => match cutoff_from_threshold(&base, node, t_slot) {
            Some(k) => k,
            None => {
                return SkrResult { skr_hz: 0.0, k_cutoff: 0, rkr_hz: 0.0, skf: 0.0 };
            }
        },
    };
    let p = arm_probability(node, link);
    let stats = renewal_stats(&RenewalParams::symmetric(p, p, k_cutoff));
    let rkr_hz = 1.0 / (stats.mean_attempts * t_slot + node.t_swap);

    // Success-weighted average over the nonzero hold lengths.
    let parts: Vec<(f64, DensityMatrix)> = (1..=k_cutoff)
        .map(|k| (stats.k_distribution[k as usize], held_state(&base, node, t_slot, k)))
        .collect();
    let rho_avg = DensityMatrix::mixture(&parts).expect("nonempty mixture");
    let skf = skf_of(&rho_avg);
    SkrResult { skr_hz: rkr_hz * skf, k_cutoff, rkr_hz, skf }
}
