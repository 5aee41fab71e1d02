use thiserror::Error;

#[derive(Debug, Error)]
pub enum QmathError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not Hermitian within tolerance (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("trace is {0}, expected 1 within 1e-10")]
    TraceNotOne(f64),
    #[error("matrix is not positive semidefinite (smallest eigenvalue {0:.3e})")]
    NotPositive(f64),
    #[error("matrix is not unitary within tolerance")]
    NotUnitary,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("projection onto a null outcome (probability {0:.3e})")]
    NullProjection(f64),
}

pub type Result<T> = std::result::Result<T, QmathError>;
