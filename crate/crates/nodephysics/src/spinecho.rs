use num_complex::Complex64;
use qmath::ComplexMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::NodeError;
use crate::motion::{MotionalState, START_NBAR};

/// Thermal coverage below which the truncated phonon grid triggers a warning.
pub const COVERAGE_WARN: f64 = 0.999;

/// Spin-echo simulation parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinEchoConfig {
    /// Composite spin echoes in the sequence.
    pub n_echoes: usize,
    /// Inclusive per-mode phonon grid upper bound.
    pub grid_max: usize,
    /// Intrinsic fringe contrast.
    pub c0: f64,
    /// Mean phonon numbers the pi-pulse length is calibrated at.
    pub calibration_nbar: [f64; 4],
    /// Fractional pulse-length error applied to every pulse; positive values
    /// shorten the pulses.
    pub miscalibration: f64,
}

impl Default for SpinEchoConfig {
    fn default() -> Self {
        Self {
            n_echoes: 40,
            grid_max: 40,
            c0: 0.99,
            calibration_nbar: START_NBAR,
            miscalibration: 0.0,
        }
    }
}

/// Spin-echo visibility with diagnostic grid coverage.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EchoResult {
    pub visibility: f64,
    /// Fraction of the thermal weight covered by the truncated grid.
    pub coverage: f64,
    pub coverage_warning: bool,
}

/// Qutrit pi-pulse on levels (i, j) of [S, S', D'] with area theta and phase.
fn pulse(i: usize, j: usize, theta: f64, phase: f64) -> ComplexMatrix {
    let c = Complex64::new((theta / 2.0).cos(), 0.0);
    let s = (theta / 2.0).sin();
    let upper = Complex64::i() * Complex64::from_polar(s, phase);
    let lower = Complex64::i() * Complex64::from_polar(s, -phase);
    let mut m = ComplexMatrix::identity(3);
    m.set(i, i, c);
    m.set(j, j, c);
    m.set(i, j, upper);
    m.set(j, i, lower);
    m
}

/// Composite spin-echo unitary: S<->D' pulse, S'<->D' pulse, then the first
/// pulse again, all with the same drive phase; a perfect pi-pulse on S<->S'
/// at theta = pi.
pub fn echo_unitary(theta: f64) -> ComplexMatrix {
    let p1 = pulse(0, 2, theta, 0.0);
    let p2 = pulse(1, 2, theta, 0.0);
    p1.mul(&p2).mul(&p1)
}

/// Incoherent repump of the D' level: its population is split equally onto S
/// and S' and all coherences to D' are destroyed.
pub fn repump(rho: &ComplexMatrix) -> ComplexMatrix {
    let p = rho.get(2, 2).re;
    let mut out = ComplexMatrix::zeros(3, 3);
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j, rho.get(i, j));
        }
    }
    out.set(0, 0, out.get(0, 0) + Complex64::new(p / 2.0, 0.0));
    out.set(1, 1, out.get(1, 1) + Complex64::new(p / 2.0, 0.0));
    out
}

/// S-S' coherence of the post-sequence state for one phonon tuple, starting
/// from |+> and alternating echo and repump. The state keeps support on
/// {S, S'} after every repump, so only the 2x2 block is propagated.
fn final_coherence(theta: f64, n_echoes: usize) -> Complex64 {
    let u = echo_unitary(theta);
    let rows: [[Complex64; 2]; 3] =
        [[u.get(0, 0), u.get(0, 1)], [u.get(1, 0), u.get(1, 1)], [u.get(2, 0), u.get(2, 1)]];
    let mut a = 0.5; // S population
    let mut c = Complex64::new(0.5, 0.0); // S-S' coherence
    for _ in 0..n_echoes {
        let d = 1.0 - a;
        // t_j = rho_block * conj(row_j)
        let t = |j: usize| -> [Complex64; 2] {
            [
                a * rows[j][0].conj() + c * rows[j][1].conj(),
                c.conj() * rows[j][0].conj() + d * rows[j][1].conj(),
            ]
        };
        let (t0, t1, t2) = (t(0), t(1), t(2));
        let out00 = (rows[0][0] * t0[0] + rows[0][1] * t0[1]).re;
        let out01 = rows[0][0] * t1[0] + rows[0][1] * t1[1];
        let out22 = (rows[2][0] * t2[0] + rows[2][1] * t2[1]).re;
        a = out00 + out22 / 2.0;
        c = out01;
    }
    c
}

/// Truncated thermal distribution of one mode on [0, grid_max]; returns the
/// renormalized probabilities and the covered weight.
fn thermal_probs(nbar: f64, grid_max: usize) -> (Vec<f64>, f64) {
    if nbar <= 0.0 {
        return (vec![1.0], 1.0);
    }
    let ratio = nbar / (nbar + 1.0);
    let mut probs = Vec::with_capacity(grid_max + 1);
    let mut p = 1.0 / (nbar + 1.0);
    let mut total = 0.0;
    for _ in 0..=grid_max {
        probs.push(p);
        total += p;
        p *= ratio;
    }
    for value in &mut probs {
        *value /= total;
    }
    (probs, total)
}

/// Ramsey fringe amplitude predicted by the imperfect-spin-echo model: the
/// thermal average over the phonon grid of the post-sequence S-S' coherence,
/// scaled to 2|rho_SS'| * C0.
pub fn spin_echo_visibility(temps: &MotionalState, cfg: &SpinEchoConfig) -> Result<EchoResult, NodeError> {
    let eta = temps.eta.ok_or(NodeError::MissingEta)?;
    if eta.iter().any(|&e| !(0.0..0.3).contains(&e)) {
        return Err(NodeError::InvalidParam("eta must lie in [0, 0.3)".into()));
    }
    if cfg.n_echoes == 0 {
        return Err(NodeError::InvalidParam("n_echoes must be at least 1".into()));
    }
    let q_cal: f64 = (0..4)
        .map(|i| 1.0 - eta[i] * eta[i] * cfg.calibration_nbar[i])
        .product();
    if q_cal <= 0.0 {
        return Err(NodeError::InvalidParam("calibration Rabi frequency is nonpositive".into()));
    }
    let mode: Vec<(Vec<f64>, f64)> =
        temps.nbar.iter().map(|&n| thermal_probs(n, cfg.grid_max)).collect();
    let coverage: f64 = mode.iter().map(|(_, cov)| cov).product();
    let stretch = std::f64::consts::PI / q_cal * (1.0 - cfg.miscalibration);

    // Rabi-frequency reduction factors per mode and occupation.
    let factor = |i: usize, n: usize| 1.0 - eta[i] * eta[i] * n as f64;
    let partials: Vec<Complex64> = (0..mode[0].0.len())
        .into_par_iter()
        .map(|n0| {
            let w0 = mode[0].0[n0];
            let f0 = factor(0, n0);
            let mut acc = Complex64::new(0.0, 0.0);
            for (n1, &w1) in mode[1].0.iter().enumerate() {
                let f01 = f0 * factor(1, n1);
                let w01 = w0 * w1;
                for (n2, &w2) in mode[2].0.iter().enumerate() {
                    let f012 = f01 * factor(2, n2);
                    let w012 = w01 * w2;
                    for (n3, &w3) in mode[3].0.iter().enumerate() {
                        let theta = stretch * f012 * factor(3, n3);
                        acc += w012 * w3 * final_coherence(theta, cfg.n_echoes);
                    }
                }
            }
            acc
        })
        .collect();
    let coherence: Complex64 = partials.into_iter().sum();
    Ok(EchoResult {
        visibility: 2.0 * coherence.norm() * cfg.c0,
        coverage,
        coverage_warning: coverage < COVERAGE_WARN,
    })
}

/// Lamb-Dicke template proportional to 1/f_i, scaled by `scale`.
pub fn eta_template(freqs_mhz: &[f64; 4], scale: f64) -> [f64; 4] {
    let mut eta = [0.0; 4];
    for i in 0..4 {
        eta[i] = scale / freqs_mhz[i];
    }
    eta
}

/// Finds the template scale at which the start-of-Loop-2 visibility equals
/// `target`, by bisection on the monotone scale-visibility relation.
pub fn calibrate_eta_scale(cfg: &SpinEchoConfig, target: f64) -> Result<f64, NodeError> {
    let start = MotionalState::start_of_loop2();
    let visibility = |scale: f64| -> Result<f64, NodeError> {
        let temps = start.clone().with_eta(eta_template(&start.freqs_mhz, scale));
        Ok(spin_echo_visibility(&temps, cfg)?.visibility)
    };
    let (mut lo, mut hi) = (0.0, 0.28 * MODE_FREQ_MIN);
    if target >= cfg.c0 || visibility(hi)? > target {
        return Err(NodeError::InvalidParam("target visibility not reachable".into()));
    }
    for _ in 0..30 {
        let mid = (lo + hi) / 2.0;
        if visibility(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2.0)
}

const MODE_FREQ_MIN: f64 = 0.963; // MHz, slowest mode
