use num_complex::Complex64;
use qmath::{
    bell_vector, dephase_gaussian, nearest_max_entangled, BellLabel, ComplexMatrix,
    DensityMatrix,
};

use crate::dataset::TomoError;

const CLUSTER_TOL: f64 = 1e-9;

/// Ideal two-photon state conditional on the ion Bell outcome and the memory
/// assignment: two perfect ion-photon pairs, the stored ion picking up a
/// diag(1, e^{i theta}) phase, then a perfect Bell measurement on the ions.
fn conditional_photon_state(theta: f64, store_first: bool, outcome: BellLabel) -> ComplexMatrix {
    // Qubit order: (ion A, photon a, ion B, photon b); pairs start in Phi+.
    let pair = bell_vector(BellLabel::PhiPlus);
    let mut full = vec![Complex64::new(0.0, 0.0); 16];
    for ia in 0..2 {
        for pa in 0..2 {
            for ib in 0..2 {
                for pb in 0..2 {
                    full[8 * ia + 4 * pa + 2 * ib + pb] =
                        pair.get(2 * ia + pa, 0) * pair.get(2 * ib + pb, 0);
                }
            }
        }
    }
    // Phase on the stored ion.
    let phase = Complex64::from_polar(1.0, theta);
    for (idx, amp) in full.iter_mut().enumerate() {
        let ion = if store_first { idx / 8 } else { (idx / 2) % 2 };
        if ion == 1 {
            *amp *= phase;
        }
    }
    // Project ions (qubits 0 and 2) onto the Bell outcome.
    let beta = bell_vector(outcome);
    let mut photons = vec![Complex64::new(0.0, 0.0); 4];
    for ia in 0..2 {
        for ib in 0..2 {
            let b = beta.get(2 * ia + ib, 0).conj();
            for pa in 0..2 {
                for pb in 0..2 {
                    photons[2 * pa + pb] += b * full[8 * ia + 4 * pa + 2 * ib + pb];
                }
            }
        }
    }
    let norm: f64 = photons.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    ComplexMatrix::col_vector(
        &photons.iter().map(|a| a / norm).collect::<Vec<_>>(),
    )
}

/// Number of distinct conditional two-photon states delivered by the protocol
/// under stored-ion z-phases theta_A, theta_B: the 8 outcome/memory
/// combinations clustered by overlap.
pub fn distinct_state_count(theta_a: f64, theta_b: f64) -> usize {
    let mut states = Vec::with_capacity(8);
    for &(theta, store_first) in &[(theta_a, true), (theta_b, false)] {
        for outcome in BellLabel::ALL {
            states.push(conditional_photon_state(theta, store_first, outcome));
        }
    }
    let mut representatives: Vec<ComplexMatrix> = Vec::new();
    for state in states {
        let matched = representatives.iter().any(|rep| {
            let overlap = rep.dagger().mul(&state).get(0, 0).norm_sqr();
            overlap >= 1.0 - CLUSTER_TOL
        });
        if !matched {
            representatives.push(state);
        }
    }
    representatives.len()
}

/// Least-squares fit of the memory dephasing time tau to fidelity-decay data
/// F(t) = fidelity(dephase(rho0, t, tau), nearest maximally entangled state).
pub fn fit_memory_tau(points: &[(f64, f64)], rho0: &DensityMatrix) -> Result<f64, TomoError> {
    if points.len() < 2 {
        return Err(TomoError::Invalid("at least two data points required".into()));
    }
    let t0 = points[0].0;
    if points.iter().all(|&(t, _)| (t - t0).abs() < 1e-15) {
        return Err(TomoError::Invalid("all points share the same time".into()));
    }
    let (_, nearest) = nearest_max_entangled(rho0)
        .map_err(|e| TomoError::Invalid(e.to_string()))?;
    let sse = |tau: f64| -> f64 {
        points
            .iter()
            .map(|&(t, f)| {
                let model = dephase_gaussian(rho0, t, tau).expect("valid tau");
                let fm = qmath::fidelity(&model, &nearest).expect("two-qubit state");
                (fm - f) * (fm - f)
            })
            .sum()
    };
    // Coarse log-spaced grid, then golden-section refinement to 0.1 ms.
    let mut best_tau = 1e-3;
    let mut best = f64::INFINITY;
    for i in 0..200 {
        let tau = 10f64.powf(-4.0 + 5.0 * i as f64 / 199.0);
        let v = sse(tau);
        if v < best {
            best = v;
            best_tau = tau;
        }
    }
    let mut lo = best_tau / 10f64.powf(5.0 / 199.0);
    let mut hi = best_tau * 10f64.powf(5.0 / 199.0);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (hi - phi * (hi - lo), lo + phi * (hi - lo));
    let (mut f1, mut f2) = (sse(x1), sse(x2));
    while hi - lo > 1e-4 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = sse(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = sse(x2);
        }
    }
    Ok((lo + hi) / 2.0)
}
