use num_complex::Complex64;

use crate::bell::{bell_vector, BellLabel};
use crate::density::DensityMatrix;
use crate::error::{QmathError, Result};
use crate::matrix::{sigma_y, ComplexMatrix};
use crate::optim::nelder_mead;

/// Fidelity Tr(|psi><psi| rho) of rho against a pure reference state.
pub fn fidelity(rho: &DensityMatrix, psi: &DensityMatrix) -> Result<f64> {
    if rho.dim() != psi.dim() {
        return Err(QmathError::DimensionMismatch { expected: rho.dim(), got: psi.dim() });
    }
    Ok(psi.matrix().mul(rho.matrix()).trace().re)
}

/// sqrt(Tr rho^2), an upper bound on the fidelity with any pure state.
pub fn purity_bound(rho: &DensityMatrix) -> f64 {
    rho.purity().sqrt()
}

/// Wootters concurrence of a two-qubit state.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(QmathError::DimensionMismatch { expected: 4, got: rho.dim() });
    }
    let yy = sigma_y().kron(&sigma_y());
    let spin_flipped = rho.matrix().conjugate().conjugate_by(&yy);
    let sqrt_rho = rho.matrix().hermitian_map(|v| v.max(0.0).sqrt());
    let m = sqrt_rho.mul(&spin_flipped).mul(&sqrt_rho);
    let (vals, _) = m.eigh();
    let mut lambdas: Vec<f64> = vals.iter().map(|&v| v.max(0.0).sqrt()).collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// (u1 x u2) rho (u1 x u2)^dag.
pub fn local_rotate(rho: &DensityMatrix, u1: &ComplexMatrix, u2: &ComplexMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(QmathError::DimensionMismatch { expected: 4, got: rho.dim() });
    }
    if !u1.is_unitary(1e-10) || !u2.is_unitary(1e-10) {
        return Err(QmathError::NotUnitary);
    }
    DensityMatrix::new(rho.matrix().conjugate_by(&u1.kron(u2)))
}

/// Amplitudes of (u1 x u2)|Phi+> for ZYZ angle triples: entry (i, j) is
/// (u1 u2^T)_{ij} / sqrt(2).
fn zyz_rows(a: f64, b: f64, g: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = (b / 2.0).sin_cos();
    [
        [
            Complex64::from_polar(c, -(a + g) / 2.0),
            -Complex64::from_polar(s, -(a - g) / 2.0),
        ],
        [
            Complex64::from_polar(s, (a - g) / 2.0),
            Complex64::from_polar(c, (a + g) / 2.0),
        ],
    ]
}

fn rotated_phi_plus_amps(params: &[f64]) -> [Complex64; 4] {
    let u1 = zyz_rows(params[0], params[1], params[2]);
    let u2 = zyz_rows(params[3], params[4], params[5]);
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = [Complex64::new(0.0, 0.0); 4];
    for i in 0..2 {
        for j in 0..2 {
            let a = u1[i][0] * u2[j][0] + u1[i][1] * u2[j][1];
            v[2 * i + j] = a * scale;
        }
    }
    v
}

/// Maximally entangled pure state (u1 x u2)|Phi+> for ZYZ angle triples.
fn rotated_phi_plus(params: &[f64]) -> ComplexMatrix {
    let v = rotated_phi_plus_amps(params);
    ComplexMatrix::col_vector(&v)
}

fn amp_fidelity(rho: &DensityMatrix, v: &[Complex64; 4]) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            acc += v[i].conj() * rho.get(i, j) * v[j];
        }
    }
    acc.re
}

fn vector_fidelity(rho: &DensityMatrix, v: &ComplexMatrix) -> f64 {
    v.dagger().mul(rho.matrix()).mul(v).get(0, 0).re
}

/// Nearest maximally entangled pure state: maximizes fidelity over
/// (u1 x u2)|Phi+> by multi-start local-unitary search seeded at the four
/// Bell states. Returns (fidelity, pure state).
pub fn nearest_max_entangled(rho: &DensityMatrix) -> Result<(f64, DensityMatrix)> {
    if rho.dim() != 4 {
        return Err(QmathError::DimensionMismatch { expected: 4, got: rho.dim() });
    }
    let objective = |p: &[f64]| -amp_fidelity(rho, &rotated_phi_plus_amps(p));
    let pi = std::f64::consts::PI;
    // Seeds whose rotated Phi+ hits each Bell state, plus off-axis starts.
    let mut seeds: Vec<[f64; 6]> = vec![
        [0.0; 6],                          // Phi+
        [0.0, 0.0, 0.0, 0.0, 0.0, 2.0 * pi], // Phi+ again (phase-shifted chart)
        [0.0, 0.0, 0.0, pi, 0.0, 0.0],     // ~Phi-
        [0.0, 0.0, 0.0, 0.0, pi, 0.0],     // ~Psi states
        [0.0, pi, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, pi, pi],
    ];
    for k in 0..6 {
        let t = 2.0 * pi * (k as f64 + 0.5) / 6.0;
        seeds.push([t, t / 2.0, -t, t / 3.0, t, t / 2.0]);
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for seed in &seeds {
        let (x, fx) = nelder_mead(&objective, seed, 0.4, 1e-12, 2000);
        if best.as_ref().map_or(true, |(b, _)| fx < *b) {
            best = Some((fx, x));
        }
    }
    let (_, x) = best.expect("at least one seed");
    // Polish the winner with a tighter simplex.
    let (x, neg_f) = nelder_mead(&objective, &x, 0.02, 1e-14, 2000);
    let mut best_v = rotated_phi_plus(&x);
    let mut best_f = -neg_f;
    // The four Bell states are always admissible candidates.
    for label in BellLabel::ALL {
        let v = bell_vector(label);
        let f = vector_fidelity(rho, &v);
        if f > best_f {
            best_f = f;
            best_v = v;
        }
    }
    let amps: Vec<Complex64> = (0..4).map(|i| best_v.get(i, 0)).collect();
    Ok((best_f.clamp(0.0, 1.0), DensityMatrix::from_pure(&amps)?))
}

/// Fidelity of rho with the nearest maximally entangled pure state.
pub fn nearest_max_entangled_fidelity(rho: &DensityMatrix) -> Result<f64> {
    Ok(nearest_max_entangled(rho)?.0)
}
