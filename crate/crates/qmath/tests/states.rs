use num_complex::Complex64;
use qmath::{
    bell_state, bell_vector, concurrence, cr, depolarize, fidelity, id2, local_rotate,
    purity_bound, rz, sigma_x, BellLabel, ComplexMatrix, DensityMatrix, PauliFrame,
};

fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
}

#[test]
fn bell_states_are_pure_and_orthonormal() {
    for a in BellLabel::ALL {
        let rho = bell_state(a);
        assert_close(rho.purity(), 1.0, 1e-12, "purity");
        for b in BellLabel::ALL {
            let f = fidelity(&bell_state(b), &rho).unwrap();
            let expected = if a == b { 1.0 } else { 0.0 };
            assert_close(f, expected, 1e-12, "bell overlap");
        }
    }
}

#[test]
fn sigma_x_on_second_qubit_maps_phi_plus_to_psi_plus() {
    let rotated = local_rotate(&bell_state(BellLabel::PhiPlus), &id2(), &sigma_x()).unwrap();
    assert!(rotated
        .matrix()
        .approx_eq(bell_state(BellLabel::PsiPlus).matrix(), 1e-12));
}

#[test]
fn pauli_frames_correct_each_bell_state_to_phi_plus() {
    for label in BellLabel::ALL {
        let s = PauliFrame::for_outcome(label).operator();
        let corrected = DensityMatrix::new(bell_state(label).matrix().conjugate_by(&s)).unwrap();
        let f = fidelity(&corrected, &bell_state(BellLabel::PhiPlus)).unwrap();
        assert_close(f, 1.0, 1e-12, "frame correction");
    }
}

#[test]
fn pauli_frames_square_to_identity() {
    for frame in PauliFrame::ALL {
        let s = frame.operator();
        assert!(s.mul(&s).approx_eq(&ComplexMatrix::identity(4), 1e-12));
    }
}

#[test]
fn fidelity_of_maximally_mixed_with_any_bell_state_is_quarter() {
    let mixed = DensityMatrix::maximally_mixed(4);
    for label in BellLabel::ALL {
        assert_close(fidelity(&mixed, &bell_state(label)).unwrap(), 0.25, 1e-12, "mixed fidelity");
    }
}

#[test]
fn fidelity_of_depolarized_phi_plus_is_its_weight() {
    let rho = depolarize(&bell_state(BellLabel::PhiPlus), 0.9).unwrap();
    assert_close(fidelity(&rho, &bell_state(BellLabel::PhiPlus)).unwrap(), 0.9, 1e-12, "F");
}

#[test]
fn purity_bound_examples() {
    assert_close(purity_bound(&bell_state(BellLabel::PhiPlus)), 1.0, 1e-12, "pure");
    assert_close(purity_bound(&DensityMatrix::maximally_mixed(4)), 0.5, 1e-12, "mixed");
}

#[test]
fn purity_bound_dominates_bell_fidelities_on_werner_family() {
    for f0 in [0.3, 0.5, 0.8, 0.99] {
        let rho = depolarize(&bell_state(BellLabel::PhiPlus), f0).unwrap();
        let bound = purity_bound(&rho);
        for label in BellLabel::ALL {
            let f = fidelity(&rho, &bell_state(label)).unwrap();
            assert!(f <= bound + 1e-10, "fidelity {f} exceeds bound {bound}");
        }
    }
}

#[test]
fn concurrence_of_bell_and_mixed_states() {
    assert_close(concurrence(&bell_state(BellLabel::PhiPlus)).unwrap(), 1.0, 1e-7, "Phi+");
    assert_close(concurrence(&bell_state(BellLabel::PsiMinus)).unwrap(), 1.0, 1e-7, "Psi-");
    assert_close(concurrence(&DensityMatrix::maximally_mixed(4)).unwrap(), 0.0, 1e-10, "mixed");
}

#[test]
fn concurrence_of_one_sided_depolarized_phi_plus_is_two_f_minus_one() {
    // Oracle: the Bell-diagonal family (F, r, r, r) has concurrence max(0, 2F-1).
    for (f0, want) in [(0.6, 0.2), (0.8, 0.6), (0.95, 0.9), (0.25, 0.0)] {
        let rho = depolarize(&bell_state(BellLabel::PhiPlus), f0).unwrap();
        assert_close(concurrence(&rho).unwrap(), want, 1e-10, "werner concurrence");
    }
}

#[test]
fn local_rotate_identity_is_noop() {
    let rho = depolarize(&bell_state(BellLabel::PsiMinus), 0.7).unwrap();
    let out = local_rotate(&rho, &id2(), &id2()).unwrap();
    assert!(out.matrix().approx_eq(rho.matrix(), 1e-12));
}

#[test]
fn local_rotate_rejects_non_unitary() {
    let bad = ComplexMatrix::from_rows(&[&[cr(1.0), cr(0.0)], &[cr(0.0), cr(2.0)]]);
    assert!(local_rotate(&bell_state(BellLabel::PhiPlus), &bad, &id2()).is_err());
}

#[test]
fn phase_rotation_preserves_phi_plus_entanglement_but_not_fidelity() {
    let theta = 1.1;
    let rot = local_rotate(&bell_state(BellLabel::PhiPlus), &id2(), &rz(theta)).unwrap();
    assert_close(concurrence(&rot).unwrap(), 1.0, 1e-7, "concurrence");
    let f = fidelity(&rot, &bell_state(BellLabel::PhiPlus)).unwrap();
    assert!(f < 1.0 - 1e-3, "phase rotation should reduce Phi+ fidelity, got {f}");
}

#[test]
fn density_matrix_rejects_invalid_inputs() {
    // Not trace one.
    let m = ComplexMatrix::identity(2);
    assert!(DensityMatrix::new(m).is_err());
    // Not Hermitian.
    let mut m = ComplexMatrix::identity(2).scale_re(0.5);
    m.set(0, 1, Complex64::new(0.3, 0.0));
    assert!(DensityMatrix::new(m).is_err());
    // Not positive: diag(1.5, -0.5).
    let mut m = ComplexMatrix::zeros(2, 2);
    m.set(0, 0, cr(1.5));
    m.set(1, 1, cr(-0.5));
    assert!(DensityMatrix::new(m).is_err());
}

#[test]
fn mixture_renormalizes_weights() {
    let rho = DensityMatrix::mixture(&[
        (2.0, bell_state(BellLabel::PhiPlus)),
        (2.0, bell_state(BellLabel::PhiMinus)),
    ])
    .unwrap();
    assert_close(fidelity(&rho, &bell_state(BellLabel::PhiPlus)).unwrap(), 0.5, 1e-12, "mixture");
}

#[test]
fn bell_vectors_match_stated_amplitudes() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi_minus = bell_vector(BellLabel::PsiMinus);
    assert_close(psi_minus.get(1, 0).re, s, 1e-15, "amp 01");
    assert_close(psi_minus.get(2, 0).re, -s, 1e-15, "amp 10");
    let phi_plus = bell_vector(BellLabel::PhiPlus);
    assert_close(phi_plus.get(0, 0).re, s, 1e-15, "amp 00");
    assert_close(phi_plus.get(3, 0).re, s, 1e-15, "amp 11");
}
