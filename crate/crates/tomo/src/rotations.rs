use num_complex::Complex64;
use qmath::{bell_vector, nelder_mead, zyz, BellLabel, ComplexMatrix, DensityMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RESTARTS: usize = 32;
pub const SEARCH_TOL: f64 = 1e-8;

fn vector_fidelity(rho: &DensityMatrix, v: &ComplexMatrix) -> f64 {
    v.dagger().mul(rho.matrix()).mul(v).get(0, 0).re
}

/// Fidelity of (u1 x u2) rho (u1 x u2)^dag with the pure state |target>,
/// computed as <target'|rho|target'> with |target'> = (u1 x u2)^dag |target>.
fn rotated_fidelity(rho: &DensityMatrix, u: &ComplexMatrix, target: &ComplexMatrix) -> f64 {
    let back = u.dagger().mul(target);
    vector_fidelity(rho, &back)
}

fn random_angles(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let pi = std::f64::consts::PI;
    (0..n).map(|_| rng.gen_range(-pi..pi)).collect()
}

fn multi_start(
    objective: &dyn Fn(&[f64]) -> f64,
    n_params: usize,
    seed: u64,
) -> (Vec<f64>, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Vec<f64>, f64)> = None;
    for restart in 0..RESTARTS {
        let start = if restart == 0 {
            vec![0.0; n_params]
        } else {
            random_angles(&mut rng, n_params)
        };
        let (x, fx) = nelder_mead(objective, &start, 0.6, SEARCH_TOL, 4000);
        if best.as_ref().map_or(true, |(_, b)| fx < *b) {
            best = Some((x, fx));
        }
    }
    let (x, _) = best.expect("at least one restart");
    nelder_mead(objective, &x, 0.05, SEARCH_TOL * 1e-2, 4000)
}

#[derive(Debug, Clone)]
pub struct BellFormFit {
    pub u1: ComplexMatrix,
    pub u2: ComplexMatrix,
    pub fidelities: [f64; 4],
    pub objective: f64,
}

/// Finds a single local rotation (u1 x u2) bringing the four conditional
/// states closest to the four Bell states, minimizing 4 - sum F_i^2.
pub fn bell_form_search(states: &[DensityMatrix; 4]) -> BellFormFit {
    let targets: Vec<ComplexMatrix> = BellLabel::ALL.iter().map(|&l| bell_vector(l)).collect();
    let objective = |p: &[f64]| {
        let u = zyz(p[0], p[1], p[2]).kron(&zyz(p[3], p[4], p[5]));
        let mut obj = 4.0;
        for (rho, target) in states.iter().zip(&targets) {
            let f = rotated_fidelity(rho, &u, target);
            obj -= f * f;
        }
        obj
    };
    let (x, fx) = multi_start(&objective, 6, 0xB311);
    let u1 = zyz(x[0], x[1], x[2]);
    let u2 = zyz(x[3], x[4], x[5]);
    let u = u1.kron(&u2);
    let mut fidelities = [0.0; 4];
    for (i, (rho, target)) in states.iter().zip(&targets).enumerate() {
        fidelities[i] = rotated_fidelity(rho, &u, target);
    }
    BellFormFit { u1, u2, fidelities, objective: fx }
}

/// exp(i sigma_z theta) = diag(e^{i theta}, e^{-i theta}).
pub fn exp_sigma_z(theta: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(2, 2, |i, j| {
        if i != j {
            Complex64::new(0.0, 0.0)
        } else if i == 0 {
            Complex64::from_polar(1.0, theta)
        } else {
            Complex64::from_polar(1.0, -theta)
        }
    })
}

#[derive(Debug, Clone)]
pub struct RestrictedFit {
    pub theta_amem: f64,
    pub theta_bmem: f64,
    pub u_a: ComplexMatrix,
    pub u_b: ComplexMatrix,
    pub fidelities: [f64; 4],
    pub objective: f64,
}

fn restricted_unitaries(params: &[f64]) -> [ComplexMatrix; 4] {
    let u_a = zyz(params[0], params[1], params[2]);
    let u_b = zyz(params[3], params[4], params[5]);
    let (theta_a, theta_b) = (params[6], params[7]);
    let id = qmath::id2();
    [
        id.kron(&u_a),
        exp_sigma_z(theta_a).kron(&u_b),
        exp_sigma_z(theta_b).kron(&u_a),
        id.kron(&u_b),
    ]
}

/// Fits the physically constrained rotation family to the four ion-photon
/// states [Amem/Aa, Amem/Bb, Bmem/Aa, Bmem/Bb], minimizing 4 - sum F'_i with
/// F'_i the rotated fidelity with Phi+. The memory phases theta are shared
/// between arms and reported modulo 2 pi.
pub fn restricted_rotation_fit(states: &[DensityMatrix; 4]) -> RestrictedFit {
    let target = bell_vector(BellLabel::PhiPlus);
    let objective = |p: &[f64]| {
        let us = restricted_unitaries(p);
        let mut obj = 4.0;
        for (rho, u) in states.iter().zip(&us) {
            obj -= rotated_fidelity(rho, u, &target);
        }
        obj
    };
    let (x, fx) = multi_start(&objective, 8, 0x5EC7);
    let us = restricted_unitaries(&x);
    let mut fidelities = [0.0; 4];
    for (i, (rho, u)) in states.iter().zip(&us).enumerate() {
        fidelities[i] = rotated_fidelity(rho, u, &target);
    }
    let tau = 2.0 * std::f64::consts::PI;
    RestrictedFit {
        theta_amem: x[6].rem_euclid(tau),
        theta_bmem: x[7].rem_euclid(tau),
        u_a: zyz(x[0], x[1], x[2]),
        u_b: zyz(x[3], x[4], x[5]),
        fidelities,
        objective: fx,
    }
}
