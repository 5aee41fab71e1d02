use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::matrix::{cr, id2, sigma_x, sigma_y, sigma_z, ComplexMatrix};

/// The four Bell states; basis conventions: tensor order (qubit 1) x (qubit 2),
/// computational basis |00>,|01>,|10>,|11|, |0> = H.
///
/// B1 = Phi+ = (|00>+|11>)/sqrt2, B2 = Phi-, B3 = Psi+ = (|10>+|01>)/sqrt2,
/// B4 = Psi- = (|01>-|10>)/sqrt2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellLabel {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellLabel {
    pub const ALL: [BellLabel; 4] = [
        BellLabel::PhiPlus,
        BellLabel::PhiMinus,
        BellLabel::PsiPlus,
        BellLabel::PsiMinus,
    ];

    /// Index i of |B_i>, 0-based.
    pub fn index(self) -> usize {
        match self {
            BellLabel::PhiPlus => 0,
            BellLabel::PhiMinus => 1,
            BellLabel::PsiPlus => 2,
            BellLabel::PsiMinus => 3,
        }
    }
}

/// Amplitude column vector of |B_i>.
pub fn bell_vector(label: BellLabel) -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let amps: [Complex64; 4] = match label {
        BellLabel::PhiPlus => [cr(s), cr(0.0), cr(0.0), cr(s)],
        BellLabel::PhiMinus => [cr(s), cr(0.0), cr(0.0), cr(-s)],
        BellLabel::PsiPlus => [cr(0.0), cr(s), cr(s), cr(0.0)],
        BellLabel::PsiMinus => [cr(0.0), cr(s), cr(-s), cr(0.0)],
    };
    ComplexMatrix::col_vector(&amps)
}

/// |B_i><B_i| as a density matrix.
pub fn bell_state(label: BellLabel) -> DensityMatrix {
    let v = bell_vector(label);
    DensityMatrix::new(v.mul(&v.dagger())).expect("Bell projector is a valid state")
}

/// Two-qubit correction operators S_i in {IxI, I x sigma_z, I x sigma_x, I x sigma_y}.
///
/// S_i maps the Bell state |B_i> to |Phi+> (up to global phase); these are the
/// feedforward corrections and the operator set of the depolarizing channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliFrame {
    Identity,
    Z,
    X,
    Y,
}

impl PauliFrame {
    pub const ALL: [PauliFrame; 4] = [PauliFrame::Identity, PauliFrame::Z, PauliFrame::X, PauliFrame::Y];

    /// The S_i whose action converts |B_i> into |Phi+>.
    pub fn for_outcome(label: BellLabel) -> PauliFrame {
        match label {
            BellLabel::PhiPlus => PauliFrame::Identity,
            BellLabel::PhiMinus => PauliFrame::Z,
            BellLabel::PsiPlus => PauliFrame::X,
            BellLabel::PsiMinus => PauliFrame::Y,
        }
    }

    /// The single-qubit Pauli factor.
    pub fn single_qubit(self) -> ComplexMatrix {
        match self {
            PauliFrame::Identity => id2(),
            PauliFrame::Z => sigma_z(),
            PauliFrame::X => sigma_x(),
            PauliFrame::Y => sigma_y(),
        }
    }

    /// The two-qubit operator I x sigma.
    pub fn operator(self) -> ComplexMatrix {
        id2().kron(&self.single_qubit())
    }
}
