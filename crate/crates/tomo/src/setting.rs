use num_complex::Complex64;
use qmath::{c, cr, ComplexMatrix};
use serde::{Deserialize, Serialize};

/// Photon polarization analysis basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    HV,
    DA,
    RL,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::HV, Basis::DA, Basis::RL];
}

/// Which projector of the basis the analyzer transmits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Proj {
    Plus,
    Minus,
}

impl Proj {
    pub const ALL: [Proj; 2] = [Proj::Plus, Proj::Minus];
}

/// Single-qubit projector state vector; |0> = H, |1> = V,
/// D/A = (H +/- V)/sqrt2, R = (H - iV)/sqrt2, L = (H + iV)/sqrt2.
pub fn projector_vector(basis: Basis, proj: Proj) -> [Complex64; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match (basis, proj) {
        (Basis::HV, Proj::Plus) => [cr(1.0), cr(0.0)],
        (Basis::HV, Proj::Minus) => [cr(0.0), cr(1.0)],
        (Basis::DA, Proj::Plus) => [cr(s), cr(s)],
        (Basis::DA, Proj::Minus) => [cr(s), cr(-s)],
        (Basis::RL, Proj::Plus) => [cr(s), c(0.0, -s)],
        (Basis::RL, Proj::Minus) => [cr(s), c(0.0, s)],
    }
}

/// One of the 36 two-photon analyzer settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProjectorSetting {
    #[serde(rename = "basisA")]
    pub basis_a: Basis,
    #[serde(rename = "basisB")]
    pub basis_b: Basis,
    #[serde(rename = "projA")]
    pub proj_a: Proj,
    #[serde(rename = "projB")]
    pub proj_b: Proj,
}

impl ProjectorSetting {
    pub fn basis_pair(&self) -> (Basis, Basis) {
        (self.basis_a, self.basis_b)
    }

    /// Two-photon projection operator O_j = |ab><ab|.
    pub fn operator(&self) -> ComplexMatrix {
        let v = self.vector();
        v.mul(&v.dagger())
    }

    /// Two-photon projector state vector.
    pub fn vector(&self) -> ComplexMatrix {
        let a = projector_vector(self.basis_a, self.proj_a);
        let b = projector_vector(self.basis_b, self.proj_b);
        ComplexMatrix::col_vector(&[
            a[0] * b[0],
            a[0] * b[1],
            a[1] * b[0],
            a[1] * b[1],
        ])
    }
}

/// The canonical ordering of all 36 settings: basis pairs in (HV, DA, RL)
/// order for A then B, projector combinations in (++, +-, -+, --) order.
pub fn all_settings() -> Vec<ProjectorSetting> {
    let mut out = Vec::with_capacity(36);
    for basis_a in Basis::ALL {
        for basis_b in Basis::ALL {
            for (proj_a, proj_b) in projector_order() {
                out.push(ProjectorSetting { basis_a, basis_b, proj_a, proj_b });
            }
        }
    }
    out
}

/// Canonical projector-combination order within a basis pair.
pub fn projector_order() -> [(Proj, Proj); 4] {
    [
        (Proj::Plus, Proj::Plus),
        (Proj::Plus, Proj::Minus),
        (Proj::Minus, Proj::Plus),
        (Proj::Minus, Proj::Minus),
    ]
}

/// Index of a projector combination in the canonical order.
pub fn projector_index(proj_a: Proj, proj_b: Proj) -> usize {
    match (proj_a, proj_b) {
        (Proj::Plus, Proj::Plus) => 0,
        (Proj::Plus, Proj::Minus) => 1,
        (Proj::Minus, Proj::Plus) => 2,
        (Proj::Minus, Proj::Minus) => 3,
    }
}
