use qmath::{
    bell_state, bell_vector, depolarize, id2, local_rotate, nelder_mead, zyz, BellLabel,
    ComplexMatrix, DensityMatrix,
};
use tomo::{bell_form_search, exp_sigma_z, restricted_rotation_fit};

fn bell_states() -> [DensityMatrix; 4] {
    [
        bell_state(BellLabel::PhiPlus),
        bell_state(BellLabel::PhiMinus),
        bell_state(BellLabel::PsiPlus),
        bell_state(BellLabel::PsiMinus),
    ]
}

fn rotate_all(states: &[DensityMatrix; 4], u1: &ComplexMatrix, u2: &ComplexMatrix) -> [DensityMatrix; 4] {
    [
        local_rotate(&states[0], u1, u2).unwrap(),
        local_rotate(&states[1], u1, u2).unwrap(),
        local_rotate(&states[2], u1, u2).unwrap(),
        local_rotate(&states[3], u1, u2).unwrap(),
    ]
}

/// Smallest distance between two angles identified modulo pi (the sigma-z
/// phase enters the state only up to a global sign of the factor).
fn mod_pi_distance(a: f64, b: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let d = (a - b).rem_euclid(pi);
    d.min(pi - d)
}

#[test]
fn bell_form_on_bell_states_is_trivial() {
    let fit = bell_form_search(&bell_states());
    for f in fit.fidelities {
        assert!(f >= 0.9999, "fidelity {f}");
    }
    assert!(fit.objective < 1e-3);
}

#[test]
fn bell_form_recovers_known_rotation() {
    let v1 = zyz(0.3, 1.1, -0.4);
    let v2 = zyz(-0.8, 0.5, 1.9);
    let rotated = rotate_all(&bell_states(), &v1, &v2);
    let fit = bell_form_search(&rotated);
    for f in fit.fidelities {
        assert!(f >= 0.9999, "fidelity {f}");
    }
    assert!(fit.u1.is_unitary(1e-8) && fit.u2.is_unitary(1e-8));
}

#[test]
fn bell_form_objective_invariant_under_prerotation() {
    // Noisy inputs so the optimum is nontrivial.
    let noisy = [
        depolarize(&bell_state(BellLabel::PhiPlus), 0.9).unwrap(),
        depolarize(&bell_state(BellLabel::PhiMinus), 0.85).unwrap(),
        depolarize(&bell_state(BellLabel::PsiPlus), 0.92).unwrap(),
        depolarize(&bell_state(BellLabel::PsiMinus), 0.88).unwrap(),
    ];
    let base = bell_form_search(&noisy);
    let w1 = zyz(0.7, -0.6, 0.2);
    let w2 = zyz(-1.2, 0.9, 0.4);
    let rotated = rotate_all(&noisy, &w1, &w2);
    let moved = bell_form_search(&rotated);
    assert!((base.objective - moved.objective).abs() < 1e-6);
}

#[test]
fn exp_sigma_z_basics() {
    assert!(exp_sigma_z(0.0).max_abs_diff(&id2()) < 1e-15);
    let u = exp_sigma_z(0.9);
    assert!(u.is_unitary(1e-12));
    assert!((u.get(0, 0).arg() - 0.9).abs() < 1e-12);
    assert!((u.get(1, 1).arg() + 0.9).abs() < 1e-12);
}

/// The four ion-photon states produced by the constrained rotation family
/// with memory phases theta: state_i = U_i^dag |Phi+><Phi+| U_i.
fn restricted_family_states(
    theta_a: f64,
    theta_b: f64,
    u_a: &ComplexMatrix,
    u_b: &ComplexMatrix,
) -> ([DensityMatrix; 4], [ComplexMatrix; 4]) {
    let us = [
        id2().kron(u_a),
        exp_sigma_z(theta_a).kron(u_b),
        exp_sigma_z(theta_b).kron(u_a),
        id2().kron(u_b),
    ];
    let target = bell_vector(BellLabel::PhiPlus);
    let mut states = Vec::new();
    let mut vectors = Vec::new();
    for u in &us {
        let v = u.dagger().mul(&target);
        states.push(DensityMatrix::new(v.mul(&v.dagger())).unwrap());
        vectors.push(v);
    }
    (
        [states[0].clone(), states[1].clone(), states[2].clone(), states[3].clone()],
        [vectors[0].clone(), vectors[1].clone(), vectors[2].clone(), vectors[3].clone()],
    )
}

#[test]
fn restricted_fit_recovers_zero_phases() {
    let u_a = zyz(0.4, 0.9, -0.2);
    let u_b = zyz(-0.7, 1.3, 0.5);
    let (states, _) = restricted_family_states(0.0, 0.0, &u_a, &u_b);
    let fit = restricted_rotation_fit(&states);
    for f in fit.fidelities {
        assert!(f >= 0.999, "fidelity {f}");
    }
    assert!(mod_pi_distance(fit.theta_amem, 0.0) < 1e-3, "theta_A {}", fit.theta_amem);
    assert!(mod_pi_distance(fit.theta_bmem, 0.0) < 1e-3, "theta_B {}", fit.theta_bmem);
}

#[test]
fn restricted_fit_recovers_memory_phases() {
    let u_a = zyz(0.4, 0.9, -0.2);
    let u_b = zyz(-0.7, 1.3, 0.5);
    let (states, _) = restricted_family_states(1.4, 1.4, &u_a, &u_b);
    let fit = restricted_rotation_fit(&states);
    for f in fit.fidelities {
        assert!(f >= 0.999, "fidelity {f}");
    }
    assert!(mod_pi_distance(fit.theta_amem, 1.4) < 0.05, "theta_A {}", fit.theta_amem);
    assert!(mod_pi_distance(fit.theta_bmem, 1.4) < 0.05, "theta_B {}", fit.theta_bmem);
    let tau = 2.0 * std::f64::consts::PI;
    assert!(fit.theta_amem >= 0.0 && fit.theta_amem < tau);
    assert!(fit.theta_bmem >= 0.0 && fit.theta_bmem < tau);
}

#[test]
fn restricted_and_free_rotations_agree_on_family_states() {
    let u_a = zyz(0.4, 0.9, -0.2);
    let u_b = zyz(-0.7, 1.3, 0.5);
    let (states, vectors) = restricted_family_states(1.4, 1.4, &u_a, &u_b);
    let fit = restricted_rotation_fit(&states);
    let restricted_us = [
        id2().kron(&fit.u_a),
        exp_sigma_z(fit.theta_amem).kron(&fit.u_b),
        exp_sigma_z(fit.theta_bmem).kron(&fit.u_a),
        id2().kron(&fit.u_b),
    ];
    let target = bell_vector(BellLabel::PhiPlus);
    for (vector, restricted_u) in vectors.iter().zip(&restricted_us) {
        // Unconstrained per-state fit of (u1 x u2) toward Phi+.
        let objective = |p: &[f64]| {
            let u = zyz(p[0], p[1], p[2]).kron(&zyz(p[3], p[4], p[5]));
            let amp = target.dagger().mul(&u).mul(vector).get(0, 0);
            1.0 - amp.norm_sqr()
        };
        let mut best: Option<(Vec<f64>, f64)> = None;
        for start in 0..8 {
            let x0: Vec<f64> = (0..6).map(|i| 0.5 * (start as f64) + 0.3 * i as f64).collect();
            let (x, fx) = nelder_mead(&objective, &x0, 0.5, 1e-10, 4000);
            if best.as_ref().map_or(true, |(_, b)| fx < *b) {
                best = Some((x, fx));
            }
        }
        let (x, fx) = best.unwrap();
        assert!(fx < 1e-4, "free fit residual {fx}");
        let free_u = zyz(x[0], x[1], x[2]).kron(&zyz(x[3], x[4], x[5]));
        let psi_restricted = restricted_u.mul(vector);
        let psi_free = free_u.mul(vector);
        let overlap = psi_restricted.dagger().mul(&psi_free).get(0, 0).norm_sqr();
        assert!(overlap >= 0.99, "overlap {overlap}");
    }
}
