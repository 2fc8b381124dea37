use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max deviation {deviation:e} > {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("density matrix trace {trace} differs from 1")]
    NotNormalized { trace: f64 },

    #[error("global entanglement requires a pure state, got purity {purity}")]
    NotPure { purity: f64 },

    #[error("unknown subsystem {0}")]
    UnknownSubsystem(String),

    #[error("invalid value for {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("superposition vanishes (norm {norm:e})")]
    ZeroState { norm: f64 },

    #[error("chiral projection annihilates the state (norm {norm:e})")]
    Annihilated { norm: f64 },

    #[error("boost normalization ν = {nu:e} is not positive")]
    DegenerateBoost { nu: f64 },

    #[error("unsupported state shape: {0}")]
    UnsupportedState(String),

    #[error("invalid config field `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },

    #[error("at ω = {omega}, θ = {theta}: {source}")]
    AtGridPoint {
        omega: f64,
        theta: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
