//! Dense complex-matrix engine and two-qubit state/channel algebra.

pub mod bell;
pub mod channels;
pub mod density;
pub mod entangled;
pub mod error;
pub mod matrix;
pub mod optim;
pub mod swap;

pub use bell::{bell_state, bell_vector, BellLabel, PauliFrame};
pub use channels::{dephase_gaussian, depolarize, qber};
pub use density::DensityMatrix;
pub use entangled::{
    concurrence, fidelity, local_rotate, nearest_max_entangled, nearest_max_entangled_fidelity,
    purity_bound,
};
pub use error::{QmathError, Result};
pub use matrix::{c, cr, id2, ry, rz, sigma_x, sigma_y, sigma_z, zyz, ComplexMatrix};
pub use optim::nelder_mead;
pub use swap::entanglement_swap;
