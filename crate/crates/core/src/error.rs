use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("ill-defined homomorphism: {0}")]
    IllDefinedHom(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("simplicial complex is not closed: {0}")]
    NotClosed(String),

    #[error("bad orientation: {0}")]
    BadOrientation(String),

    #[error("bad group order {0}: cyclic resolution needs m >= 2")]
    BadOrder(i64),

    #[error("infinite group: {0}")]
    InfiniteGroup(String),

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("{what} too large: {size} exceeds cap {cap}")]
    TooLarge {
        what: String,
        size: String,
        cap: u64,
    },

    #[error("tolerance exceeded in {check}: residual {residual:e}")]
    ToleranceExceeded { check: String, residual: f64 },

    #[error("bad weights: {0}")]
    BadWeights(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    pub(crate) fn too_large(what: impl Into<String>, size: impl ToString, cap: u64) -> Self {
        Error::TooLarge {
            what: what.into(),
            size: size.to_string(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
