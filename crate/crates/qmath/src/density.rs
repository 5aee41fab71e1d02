use num_complex::Complex64;

use crate::error::{QmathError, Result};
use crate::matrix::{cr, ComplexMatrix};

pub const HERMITICITY_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
pub const POSITIVITY_TOL: f64 = -1e-10;

/// Hermitian, trace-1, positive-semidefinite matrix.
///
/// Construction validates the invariants; eigenvalues in [-1e-10, 0) are
/// clipped to zero with renormalization, anything more negative is an error.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    dim: usize,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != mat.cols() {
            return Err(QmathError::DimensionMismatch {
                expected: mat.rows(),
                got: mat.cols(),
            });
        }
        let dev = mat.max_abs_diff(&mat.dagger());
        if dev > HERMITICITY_TOL {
            return Err(QmathError::NotHermitian(dev));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(QmathError::TraceNotOne(tr.re));
        }
        let (vals, vecs) = mat.eigh();
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        if min < POSITIVITY_TOL {
            return Err(QmathError::NotPositive(min));
        }
        let mat = if min < 0.0 {
            // Positivity repair: clip tiny negative eigenvalues, renormalize.
            let clipped: Vec<f64> = vals.iter().map(|&v| v.max(0.0)).collect();
            let norm: f64 = clipped.iter().sum();
            let n = mat.rows();
            let d = ComplexMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    cr(clipped[i] / norm)
                } else {
                    cr(0.0)
                }
            });
            vecs.mul(&d).mul(&vecs.dagger())
        } else {
            mat
        };
        Ok(Self { dim: mat.rows(), mat })
    }

    /// Pure state |psi><psi| from a (not necessarily normalized) amplitude vector.
    pub fn from_pure(amplitudes: &[Complex64]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq <= 0.0 {
            return Err(QmathError::ParamOutOfRange("zero state vector".into()));
        }
        let v = ComplexMatrix::col_vector(amplitudes).scale_re(1.0 / norm_sq.sqrt());
        Self::new(v.mul(&v.dagger()))
    }

    /// Maximally mixed state I/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            dim,
            mat: ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.mat.get(i, j)
    }

    /// Tr(rho^2).
    pub fn purity(&self) -> f64 {
        self.mat.mul(&self.mat).trace().re
    }

    /// Convex mixture sum_i w_i rho_i; weights are renormalized to sum 1.
    pub fn mixture(parts: &[(f64, DensityMatrix)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(QmathError::ParamOutOfRange("empty mixture".into()));
        }
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if total <= 0.0 {
            return Err(QmathError::ParamOutOfRange("nonpositive mixture weight".into()));
        }
        let dim = parts[0].1.dim();
        let mut acc = ComplexMatrix::zeros(dim, dim);
        for (w, rho) in parts {
            acc = acc.add(&rho.matrix().scale_re(w / total));
        }
        Self::new(acc)
    }
}
