/// Exact statistics of the two-loop restart-renewal attempt process.
///
/// Loop 1: both arms attempt per slot with probabilities `p_a1`, `p_b1` until
/// at least one detects. Loop 2: the remaining arm attempts with its loop-2
/// probability for at most `k_cap` slots; failure restarts the whole cycle.
#[derive(Debug, Clone, Copy)]
pub struct RenewalParams {
    pub p_a1: f64,
    pub p_b1: f64,
    pub p_a2: f64,
    pub p_b2: f64,
    pub k_cap: u32,
}

impl RenewalParams {
    pub fn symmetric(p1: f64, p2: f64, k_cap: u32) -> Self {
        Self { p_a1: p1, p_b1: p1, p_a2: p2, p_b2: p2, k_cap }
    }
}

#[derive(Debug, Clone)]
pub struct RenewalStats {
    /// Expected attempts (time slots) per protocol success, restarts included.
    pub mean_attempts: f64,
    /// Probability that a cycle ends in success rather than restart.
    pub p_cycle: f64,
    /// Probability that Loop 2, once entered, succeeds within the cutoff.
    pub p2: f64,
    /// Distribution of the memory hold length k (Loop-2 slots used),
    /// conditioned on protocol success; index k in 0..=k_cap, k = 0 meaning
    /// both arms detected in the same slot.
    pub k_distribution: Vec<f64>,
}

/// Truncated-geometric success probability 1 - (1-p)^k.
fn p_within(p: f64, k: u32) -> f64 {
    1.0 - (1.0 - p).powi(k as i32)
}

/// Expected slots consumed by a geometric search truncated at k: (1-(1-p)^k)/p.
fn expected_slots(p: f64, k: u32) -> f64 {
    if p == 0.0 {
        k as f64
    } else {
        p_within(p, k) / p
    }
}

pub fn renewal_stats(params: &RenewalParams) -> RenewalStats {
    let RenewalParams { p_a1, p_b1, p_a2, p_b2, k_cap } = *params;
    assert!(k_cap >= 1, "loop-2 cutoff must be at least 1");
    for p in [p_a1, p_b1, p_a2, p_b2] {
        assert!((0.0..=1.0).contains(&p), "probability {p} out of range");
    }
    let s = 1.0 - (1.0 - p_a1) * (1.0 - p_b1);
    assert!(s > 0.0, "loop 1 can never succeed");
    let q_both = p_a1 * p_b1 / s;
    let q_only_a = p_a1 * (1.0 - p_b1) / s;
    let q_only_b = p_b1 * (1.0 - p_a1) / s;

    // A detected first => arm B keeps attempting, and vice versa.
    let p2_after_a = p_within(p_b2, k_cap);
    let p2_after_b = p_within(p_a2, k_cap);
    let e2_after_a = expected_slots(p_b2, k_cap);
    let e2_after_b = expected_slots(p_a2, k_cap);

    let e_cycle = 1.0 / s + q_only_a * e2_after_a + q_only_b * e2_after_b;
    let p_cycle = q_both + q_only_a * p2_after_a + q_only_b * p2_after_b;
    let mean_attempts = e_cycle / p_cycle;

    let p2 = if q_only_a + q_only_b > 0.0 {
        (q_only_a * p2_after_a + q_only_b * p2_after_b) / (q_only_a + q_only_b)
    } else {
        1.0
    };

    let mut k_distribution = Vec::with_capacity(k_cap as usize + 1);
    k_distribution.push(q_both / p_cycle);
    let (mut tail_a, mut tail_b) = (1.0, 1.0);
    for _ in 1..=k_cap {
        let w = q_only_a * p_b2 * tail_a + q_only_b * p_a2 * tail_b;
        k_distribution.push(w / p_cycle);
        tail_a *= 1.0 - p_b2;
        tail_b *= 1.0 - p_a2;
    }

    RenewalStats { mean_attempts, p_cycle, p2, k_distribution }
}
