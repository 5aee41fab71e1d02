use num_complex::Complex64;
use qmath::{
    bell_state, bell_vector, c, concurrence, dephase_gaussian, depolarize, fidelity, id2,
    local_rotate, nearest_max_entangled, nearest_max_entangled_fidelity, rz, zyz, BellLabel,
    ComplexMatrix, DensityMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
}

fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    // Ginibre construction: rho = A A^dag / Tr.
    let entries: Vec<Complex64> = (0..dim * dim)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let a = ComplexMatrix::from_fn(dim, dim, |i, j| entries[dim * i + j]);
    let m = a.mul(&a.dagger());
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_re(1.0 / tr)).unwrap()
}

fn random_unitary(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let pi = std::f64::consts::PI;
    zyz(
        rng.gen_range(-pi..pi),
        rng.gen_range(0.0..pi),
        rng.gen_range(-pi..pi),
    )
}

/// Oracle for the fully entangled fraction: the largest eigenvalue of the real
/// part of rho expressed in the magic basis, in which real-coefficient
/// superpositions are exactly the maximally entangled states.
fn fully_entangled_fraction(rho: &DensityMatrix) -> f64 {
    let i = Complex64::new(0.0, 1.0);
    let magic: [ComplexMatrix; 4] = [
        bell_vector(BellLabel::PhiPlus),
        bell_vector(BellLabel::PhiMinus).scale(i),
        bell_vector(BellLabel::PsiPlus).scale(i),
        bell_vector(BellLabel::PsiMinus),
    ];
    let mut m = ComplexMatrix::zeros(4, 4);
    for (r, mr) in magic.iter().enumerate() {
        for (s, ms) in magic.iter().enumerate() {
            m.set(r, s, mr.dagger().mul(rho.matrix()).mul(ms).get(0, 0));
        }
    }
    // Real symmetric part, diagonalized as a complex Hermitian matrix.
    let re = ComplexMatrix::from_fn(4, 4, |r, s| {
        Complex64::new((m.get(r, s).re + m.get(s, r).re) / 2.0, 0.0)
    });
    let (vals, _) = re.eigh();
    vals[3]
}

#[test]
fn nearest_max_entangled_on_bell_and_mixed_states() {
    assert_close(
        nearest_max_entangled_fidelity(&bell_state(BellLabel::PhiMinus)).unwrap(),
        1.0,
        1e-9,
        "Phi-",
    );
    assert_close(
        nearest_max_entangled_fidelity(&DensityMatrix::maximally_mixed(4)).unwrap(),
        0.25,
        1e-9,
        "mixed",
    );
}

#[test]
fn nearest_max_entangled_recovers_phase_rotated_phi_plus() {
    for theta in [0.3, 1.2, 2.9] {
        let rho = local_rotate(&bell_state(BellLabel::PhiPlus), &id2(), &rz(theta)).unwrap();
        let (f, psi) = nearest_max_entangled(&rho).unwrap();
        assert_close(f, 1.0, 1e-8, "rotated Phi+");
        assert_close(fidelity(&rho, &psi).unwrap(), f, 1e-9, "returned state consistency");
    }
}

#[test]
fn nearest_max_entangled_of_bell_diagonal_is_largest_weight() {
    let rho = DensityMatrix::mixture(&[
        (0.55, bell_state(BellLabel::PsiMinus)),
        (0.30, bell_state(BellLabel::PsiPlus)),
        (0.15, bell_state(BellLabel::PhiPlus)),
    ])
    .unwrap();
    assert_close(nearest_max_entangled_fidelity(&rho).unwrap(), 0.55, 1e-8, "largest weight");
}

#[test]
fn nearest_max_entangled_matches_magic_basis_oracle_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..6 {
        let rho = random_density(&mut rng, 4);
        let want = fully_entangled_fraction(&rho);
        let got = nearest_max_entangled_fidelity(&rho).unwrap();
        assert_close(got, want, 1e-6, &format!("fully entangled fraction, case {k}"));
    }
}

#[test]
fn nearest_max_entangled_matches_oracle_on_structured_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f0 in [0.6, 0.9] {
        let base = depolarize(&bell_state(BellLabel::PhiPlus), f0).unwrap();
        let dephased = dephase_gaussian(&base, 0.02, 0.062).unwrap();
        let rho = local_rotate(&dephased, &random_unitary(&mut rng), &random_unitary(&mut rng)).unwrap();
        let want = fully_entangled_fraction(&rho);
        let got = nearest_max_entangled_fidelity(&rho).unwrap();
        assert_close(got, want, 1e-6, "rotated Werner");
    }
}

#[test]
fn concurrence_is_invariant_under_local_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..8 {
        let rho = random_density(&mut rng, 4);
        let u1 = random_unitary(&mut rng);
        let u2 = random_unitary(&mut rng);
        let rotated = local_rotate(&rho, &u1, &u2).unwrap();
        assert_close(
            concurrence(&rotated).unwrap(),
            concurrence(&rho).unwrap(),
            1e-9,
            "LU invariance",
        );
    }
}

#[test]
fn purity_bound_dominates_nearest_max_entangled_fidelity() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..4 {
        let rho = random_density(&mut rng, 4);
        let f = nearest_max_entangled_fidelity(&rho).unwrap();
        assert!(f <= qmath::purity_bound(&rho) + 1e-10);
    }
}
