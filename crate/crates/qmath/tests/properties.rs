use proptest::prelude::*;
use qmath::{
    bell_state, concurrence, dephase_gaussian, depolarize, entanglement_swap, fidelity,
    local_rotate, purity_bound, qber, zyz, BellLabel, ComplexMatrix, DensityMatrix,
};

fn density_from_seed(entries: &[(f64, f64); 16]) -> DensityMatrix {
    let a = ComplexMatrix::from_fn(4, 4, |i, j| {
        let (re, im) = entries[4 * i + j];
        num_complex::Complex64::new(re, im)
    });
    // Small identity admixture keeps the all-zero seed well defined.
    let m = a.mul(&a.dagger()).add(&ComplexMatrix::identity(4).scale_re(1e-6));
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_re(1.0 / tr)).unwrap()
}

fn arb_entries() -> impl Strategy<Value = [(f64, f64); 16]> {
    prop::array::uniform16((-1.0..1.0f64, -1.0..1.0f64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn channels_preserve_trace_and_positivity(entries in arb_entries(), f in 0.0..1.0f64, t in 0.0..0.2f64) {
        let rho = density_from_seed(&entries);
        for out in [depolarize(&rho, f).unwrap(), dephase_gaussian(&rho, t, 0.062).unwrap()] {
            let tr = out.matrix().trace();
            prop_assert!((tr.re - 1.0).abs() < 1e-12 && tr.im.abs() < 1e-12);
            let (vals, _) = out.matrix().eigh();
            prop_assert!(vals[0] > -1e-10);
        }
    }

    #[test]
    fn swap_probabilities_sum_to_one(e1 in arb_entries(), e2 in arb_entries()) {
        let a = density_from_seed(&e1);
        let b = density_from_seed(&e2);
        let total: f64 = BellLabel::ALL.iter()
            .map(|&o| entanglement_swap(&a, &b, o).unwrap().1)
            .sum();
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn qber_values_lie_in_unit_interval(entries in arb_entries()) {
        let rho = density_from_seed(&entries);
        let (ex, ey, ez) = qber(&rho, BellLabel::PhiPlus).unwrap();
        for e in [ex, ey, ez] {
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&e));
        }
    }

    #[test]
    fn concurrence_invariant_under_local_unitaries(
        entries in arb_entries(),
        a1 in -3.0..3.0f64, b1 in 0.0..3.0f64, g1 in -3.0..3.0f64,
        a2 in -3.0..3.0f64, b2 in 0.0..3.0f64, g2 in -3.0..3.0f64,
    ) {
        let rho = density_from_seed(&entries);
        let rotated = local_rotate(&rho, &zyz(a1, b1, g1), &zyz(a2, b2, g2)).unwrap();
        prop_assert!((concurrence(&rotated).unwrap() - concurrence(&rho).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn bell_fidelity_bounded_by_purity_bound(entries in arb_entries()) {
        let rho = density_from_seed(&entries);
        let bound = purity_bound(&rho);
        for label in BellLabel::ALL {
            prop_assert!(fidelity(&rho, &bell_state(label)).unwrap() <= bound + 1e-10);
        }
    }
}
