use num_complex::Complex64;

use crate::bell::{bell_vector, BellLabel, PauliFrame};
use crate::density::DensityMatrix;
use crate::error::{QmathError, Result};
use crate::matrix::ComplexMatrix;

pub const NULL_OUTCOME_TOL: f64 = 1e-14;

/// Bell-state measurement on the inner qubits of two pairs.
///
/// Projects qubits B,C of rho_AB x rho_CD onto the given Bell outcome,
/// renormalizes, and applies the outcome's Pauli correction on qubit D so that
/// Bell-diagonal inputs yield an outcome-independent output. Returns the
/// corrected state on (A,D) and the outcome probability.
pub fn entanglement_swap(
    rho_ab: &DensityMatrix,
    rho_cd: &DensityMatrix,
    outcome: BellLabel,
) -> Result<(DensityMatrix, f64)> {
    if rho_ab.dim() != 4 || rho_cd.dim() != 4 {
        return Err(QmathError::DimensionMismatch {
            expected: 4,
            got: rho_ab.dim().max(rho_cd.dim()),
        });
    }
    let beta = bell_vector(outcome);
    let b = |i: usize, j: usize| beta.get(2 * i + j, 0);
    // Index (a,b,c,d) of rho_AB x rho_CD flattens to 8a+4b+2c+d.
    let full_idx = |a: usize, bb: usize, cc: usize, d: usize| 8 * a + 4 * bb + 2 * cc + d;
    let out = ComplexMatrix::from_fn(4, 4, |row, col| {
        let (a, d) = (row / 2, row % 2);
        let (ap, dp) = (col / 2, col % 2);
        let mut acc = Complex64::new(0.0, 0.0);
        for bb in 0..2 {
            for cc in 0..2 {
                for bp in 0..2 {
                    for cp in 0..2 {
                        let rho_elem = rho_ab.get(2 * a + bb, 2 * ap + bp)
                            * rho_cd.get(2 * cc + d, 2 * cp + dp);
                        debug_assert!(full_idx(a, bb, cc, d) < 16 && full_idx(ap, bp, cp, dp) < 16);
                        acc += b(bb, cc).conj() * rho_elem * b(bp, cp);
                    }
                }
            }
        }
        acc
    });
    let prob = out.trace().re;
    if prob < NULL_OUTCOME_TOL {
        return Err(QmathError::NullProjection(prob));
    }
    let normalized = out.scale_re(1.0 / prob);
    let correction = PauliFrame::for_outcome(outcome).operator();
    let corrected = normalized.conjugate_by(&correction);
    Ok((DensityMatrix::new(corrected)?, prob))
}
