use nalgebra::DMatrix;
use num_complex::Complex64;

/// Dense rectangular complex matrix, the storage type behind all state math.
///
/// Equality is intended up to an absolute tolerance of 1e-12; use
/// [`ComplexMatrix::approx_eq`] rather than `==`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix(pub(crate) DMatrix<Complex64>);

pub const EQ_TOL: f64 = 1e-12;

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    /// Build from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    /// Build from row-major nested slices; panics if rows are ragged.
    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    /// Column vector from a slice of amplitudes.
    pub fn col_vector(v: &[Complex64]) -> Self {
        Self(DMatrix::from_fn(v.len(), 1, |i, _| v[i]))
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.0[(i, j)] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self(&self.0 - &rhs.0)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.map(|v| v * s))
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self(self.0.map(|v| v.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self(self.0.kronecker(&rhs.0))
    }

    pub fn trace(&self) -> Complex64 {
        self.0.diagonal().iter().sum()
    }

    /// Max absolute entrywise difference.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!((self.rows(), self.cols()), (rhs.rows(), rhs.cols()));
        (&self.0 - &rhs.0).iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.rows() == rhs.rows() && self.cols() == rhs.cols() && self.max_abs_diff(rhs) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.rows() == self.cols() && self.max_abs_diff(&self.dagger()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.rows() == self.cols()
            && self.dagger().mul(self).approx_eq(&Self::identity(self.rows()), tol)
    }

    /// Eigendecomposition of a Hermitian matrix: (ascending eigenvalues, column eigenvectors).
    ///
    /// The caller is responsible for `self` being Hermitian; the matrix is
    /// symmetrized first so that 1e-10-level asymmetry cannot leak in.
    pub fn eigh(&self) -> (Vec<f64>, ComplexMatrix) {
        assert_eq!(self.rows(), self.cols(), "eigh requires a square matrix");
        let sym = (&self.0 + self.0.adjoint()).map(|v| v * 0.5);
        let eig = sym.symmetric_eigen();
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let n = self.rows();
        let vecs = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
        (vals, vecs)
    }

    /// U diag(f(lambda)) U^dag for a Hermitian matrix.
    pub fn hermitian_map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let (vals, vecs) = self.eigh();
        let n = self.rows();
        let d = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(f(vals[i]), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        vecs.mul(&d).mul(&vecs.dagger())
    }

    /// Conjugation u * self * u^dag.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.dagger())
    }
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Pauli sigma_x.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[&[cr(0.0), cr(1.0)], &[cr(1.0), cr(0.0)]])
}

/// Pauli sigma_y.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[&[cr(0.0), c(0.0, -1.0)], &[c(0.0, 1.0), cr(0.0)]])
}

/// Pauli sigma_z.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[&[cr(1.0), cr(0.0)], &[cr(0.0), cr(-1.0)]])
}

/// 2x2 identity.
pub fn id2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

/// Rotation about z: diag(e^{-i a/2}, e^{i a/2}).
pub fn rz(a: f64) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        &[Complex64::from_polar(1.0, -a / 2.0), cr(0.0)],
        &[cr(0.0), Complex64::from_polar(1.0, a / 2.0)],
    ])
}

/// Rotation about y.
pub fn ry(a: f64) -> ComplexMatrix {
    let (s, co) = (a / 2.0).sin_cos();
    ComplexMatrix::from_rows(&[&[cr(co), cr(-s)], &[cr(s), cr(co)]])
}

/// General single-qubit unitary in ZYZ parameterization: Rz(a) Ry(b) Rz(g).
pub fn zyz(a: f64, b: f64, g: f64) -> ComplexMatrix {
    rz(a).mul(&ry(b)).mul(&rz(g))
}
