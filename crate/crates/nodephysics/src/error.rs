use thiserror::Error;

#[derive(Debug, Error)]
pub enum NodeError {
    #[error("Lamb-Dicke parameters are not set on the motional state")]
    MissingEta,
    #[error("{0}")]
    InvalidParam(String),
}
