use thiserror::Error;

/// Errors produced by the transform and estimator layers.
#[derive(Debug, Error)]
pub enum FrwtError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid order theta = {0}: must lie in (0, 1]")]
    InvalidTheta(f64),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("zero scale: dilation requires a != 0")]
    ZeroScale,

    #[error("order mismatch: {0}")]
    OrderMismatch(String),

    #[error("not a wavelet: {0}")]
    NotAWavelet(String),

    #[error("unknown catalog wavelet `{0}`")]
    UnknownWavelet(String),

    #[error("degenerate wavelet pair: cross-admissibility constant is zero")]
    DegeneratePair,

    #[error("invalid mollifier: {0}")]
    InvalidMollifier(String),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed csv: {0}")]
    MalformedCsv(String),

    #[error("sidecar mismatch: {0}")]
    SidecarMismatch(String),
}

pub type Result<T> = std::result::Result<T, FrwtError>;
