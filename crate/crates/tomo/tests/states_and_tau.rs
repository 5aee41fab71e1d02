use qmath::{bell_state, dephase_gaussian, fidelity, BellLabel, DensityMatrix};
use tomo::{distinct_state_count, fit_memory_tau, TomoError};

#[test]
fn distinct_state_counts_match_enumeration() {
    assert!(distinct_state_count(0.0, 0.0) == 4);
    assert!(distinct_state_count(0.7, 0.7) == 6);
    assert!(distinct_state_count(0.7, 1.1) == 8);
    assert!(distinct_state_count(1.4, 1.4) == 6);
    assert!(distinct_state_count(0.0, 0.7) == 8);
}

#[test]
fn distinct_state_count_symmetric_in_phases() {
    for &(a, b) in &[(0.3, 1.2), (0.0, 0.9), (0.7, 0.7), (2.1, 0.4)] {
        assert!(distinct_state_count(a, b) == distinct_state_count(b, a));
    }
}

fn dephased_phi_plus(f0: f64) -> DensityMatrix {
    DensityMatrix::mixture(&[
        (f0, bell_state(BellLabel::PhiPlus)),
        (1.0 - f0, bell_state(BellLabel::PhiMinus)),
    ])
    .unwrap()
}

#[test]
fn fit_memory_tau_recovers_generating_value() {
    let rho0 = dephased_phi_plus(0.96);
    let tau = 62e-3;
    let target = bell_state(BellLabel::PhiPlus);
    let points: Vec<(f64, f64)> = (0..8)
        .map(|i| {
            let t = 10e-3 * i as f64;
            let state = dephase_gaussian(&rho0, t, tau).unwrap();
            (t, fidelity(&state, &target).unwrap())
        })
        .collect();
    let fitted = fit_memory_tau(&points, &rho0).unwrap();
    assert!((fitted - tau).abs() < 0.5e-3, "fitted {fitted}");
}

#[test]
fn fit_memory_tau_rejects_degenerate_input() {
    let rho0 = dephased_phi_plus(0.96);
    assert!(matches!(fit_memory_tau(&[(0.0, 0.96)], &rho0), Err(TomoError::Invalid(_))));
    let flat = [(0.0, 0.96), (0.0, 0.96), (0.0, 0.96)];
    assert!(matches!(fit_memory_tau(&flat, &rho0), Err(TomoError::Invalid(_))));
}

#[test]
fn fit_memory_tau_on_measured_fidelity_curve() {
    let rho0 = dephased_phi_plus(0.96);
    let points = [
        (0.0, 0.96),
        (21.3e-3, 0.87),
        (42.7e-3, 0.74),
        (64e-3, 0.64),
    ];
    let tau = fit_memory_tau(&points, &rho0).unwrap();
    assert!(tau > 50e-3 && tau < 70e-3, "tau {tau}");
}
