use ratemodel::{
    arm_probability, attempt_time, chain_fidelity, renewal_stats, rkr_repeater_with_k,
    skf_six_state, skr_bound, skr_pipeline, LinkParams, NodeParams, RenewalParams,
};

fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
}

/// Brute-force renewal oracle: direct probability-flow summation over cycles.
fn brute_force_mean_attempts(p1: f64, p2: f64, k_cap: u32) -> f64 {
    // One cycle: slots until first arm detection (geometric in s), then loop 2.
    let s = 1.0 - (1.0 - p1) * (1.0 - p1);
    let q_both = p1 * p1 / s;
    let q_single = 2.0 * p1 * (1.0 - p1) / s;
    let mut e_cycle = 1.0 / s;
    let mut p_cycle = q_both;
    let mut tail = 1.0;
    for k in 1..=k_cap {
        e_cycle += q_single * tail * 1.0; // the k-th loop-2 slot is consumed
        p_cycle += q_single * p2 * tail;
        let _ = k;
        tail *= 1.0 - p2;
    }
    e_cycle / p_cycle
}

#[test]
fn renewal_matches_brute_force_summation() {
    for (p1, p2, k) in [(6.65e-3, 6.65e-3, 190u32), (0.05, 0.03, 40), (0.3, 0.3, 5)] {
        let stats = renewal_stats(&RenewalParams::symmetric(p1, p2, k));
        let oracle = brute_force_mean_attempts(p1, p2, k);
        assert_close(stats.mean_attempts, oracle, 1e-9 * oracle, "mean attempts");
        let total: f64 = stats.k_distribution.iter().sum();
        assert_close(total, 1.0, 1e-12, "k distribution normalization");
    }
}

#[test]
fn loop2_success_probability_matches_measured_value() {
    // Asymmetric per-arm detection probabilities, cutoff 190.
    let stats = renewal_stats(&RenewalParams {
        p_a1: 3.06e-3,
        p_b1: 2.36e-3,
        p_a2: 2.64e-3,
        p_b2: 1.81e-3,
        k_cap: 190,
    });
    assert_close(stats.p2, 0.336, 0.002, "loop-2 success probability");
}

#[test]
fn current_node_expected_attempts_at_50_km() {
    let node = NodeParams::current();
    let link = LinkParams::new(50.0);
    let p = arm_probability(&node, &link);
    assert_close(p, 6.65e-3, 0.01e-3, "arm probability");
    let stats = renewal_stats(&RenewalParams::symmetric(p, p, 190));
    assert_close(stats.mean_attempts, 254.6, 0.5, "expected attempts");
    assert_close(attempt_time(&node, &link), 373e-6, 1e-9, "slot duration");
}

#[test]
fn rkr_repeater_is_monotone_in_cutoff() {
    let node = NodeParams::current();
    let link = LinkParams::new(50.0);
    let mut prev = 0.0;
    for k in [1, 5, 20, 100, 190, 1000, 100_000] {
        let rate = rkr_repeater_with_k(&node, &link, k);
        assert!(rate >= prev - 1e-12, "rate decreased at K={k}");
        prev = rate;
    }
}

#[test]
fn skf_six_state_limits() {
    assert_close(skf_six_state(0.0, 0.0, 0.0), 1.0, 1e-15, "perfect");
    assert_close(skf_six_state(0.5, 0.5, 0.5), 0.0, 1e-12, "random");
    // eZ -> 0 limit is continuous.
    let a = skf_six_state(0.05, 0.05, 1e-13);
    let b = skf_six_state(0.05, 0.05, 1e-9);
    assert_close(a, b, 1e-6, "eZ limit continuity");
}

#[test]
fn skf_six_state_symmetric_threshold_is_near_twelve_percent() {
    // Bisection for the root of SKF(q,q,q) = 0.
    let (mut lo, mut hi) = (0.05, 0.25);
    for _ in 0..60 {
        let mid = (lo + hi) / 2.0;
        if skf_six_state(mid, mid, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!((0.120..=0.130).contains(&lo), "six-state threshold {lo}");
}

#[test]
fn skr_pipeline_equals_rkr_for_perfect_memory() {
    let mut node = NodeParams::enhanced();
    node.f0 = 1.0;
    node.f_swap_ions = 1.0;
    node.tau = 1e12;
    node.k = Some(300);
    let link = LinkParams::new(50.0);
    let result = skr_pipeline(&node, &link);
    assert_close(result.skf, 1.0, 1e-9, "perfect SKF");
    assert_close(
        result.skr_hz,
        rkr_repeater_with_k(&node, &link, 300),
        1e-9,
        "SKR equals RKR",
    );
}

#[test]
fn skr_pipeline_current_node_yields_no_key_at_50_km() {
    let result = skr_pipeline(&NodeParams::current(), &LinkParams::new(50.0));
    assert!(result.skr_hz < 0.1, "current-node SKR {} should vanish", result.skr_hz);
}

#[test]
fn skr_pipeline_skr_never_exceeds_rkr() {
    for l in [10.0, 50.0, 100.0, 150.0, 200.0] {
        for node in [NodeParams::current(), NodeParams::enhanced()] {
            let r = skr_pipeline(&node, &LinkParams::new(l));
            assert!(r.skr_hz <= r.rkr_hz + 1e-12, "SKR > RKR at {l} km");
        }
    }
}

#[test]
fn enhanced_node_cutoff_and_crossover() {
    let node = NodeParams::enhanced();
    let at_150 = skr_pipeline(&node, &LinkParams::new(150.0));
    assert!(
        (440..=600).contains(&at_150.k_cutoff),
        "cutoff {} outside 520 +/- 15%",
        at_150.k_cutoff
    );
    // Crossover of SKR against the repeaterless bound.
    let mut crossover = None;
    let mut l = 100.0;
    while l <= 200.0 {
        let link = LinkParams::new(l);
        if skr_pipeline(&node, &link).skr_hz > skr_bound(&link) {
            crossover = Some(l);
            break;
        }
        l += 1.0;
    }
    let l = crossover.expect("no SKR crossover found in 100-200 km");
    assert!((130.0..=170.0).contains(&l), "SKR crossover at {l} km");
}

#[test]
fn chain_fidelity_examples() {
    assert_close(chain_fidelity(4, 1.0, 1.0, 1.0), 1.0, 1e-8, "perfect chain");
    assert_close(chain_fidelity(4, 0.99, 0.99, 0.98), 0.610, 0.005, "four levels");
    // One swap of two perfect-fidelity links: largest weight (1 + V^2)/2.
    let v: f64 = 0.9;
    assert_close(chain_fidelity(1, 1.0, 1.0, v), (1.0 + v * v) / 2.0, 1e-8, "single level");
}

#[test]
fn chain_fidelity_is_monotone_on_sampled_grid() {
    let base = chain_fidelity(2, 0.97, 0.97, 0.9);
    assert!(chain_fidelity(3, 0.97, 0.97, 0.9) <= base + 1e-9, "monotone in n");
    assert!(chain_fidelity(2, 0.99, 0.97, 0.9) >= base - 1e-9, "monotone in F0");
    assert!(chain_fidelity(2, 0.97, 0.99, 0.9) >= base - 1e-9, "monotone in F_swap");
    assert!(chain_fidelity(2, 0.97, 0.97, 0.95) >= base - 1e-9, "monotone in V");
}
