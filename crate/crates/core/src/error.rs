use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse rational from {input:?}")]
    ParseRational { input: String },

    #[error("quadrature did not converge after {nodes} nodes (last change {last_change:e}, estimate {estimate:e})")]
    QuadratureNotConverged {
        nodes: usize,
        last_change: f64,
        estimate: f64,
    },

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("potential is not finite at grid node {index} (x = {x})")]
    NonFinitePotential { index: usize, x: f64 },

    #[error("pole at {location} lies inside the domain")]
    PoleInDomain { location: f64 },

    #[error("zero vector")]
    ZeroVector,

    #[error("ground state vanishes at grid node {index} (x = {x})")]
    NodeInGroundState { index: usize, x: f64 },

    #[error("grids differ")]
    GridMismatch,

    #[error("invalid config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::ParseRational { .. }
            | Error::Config { .. }
            | Error::PoleInDomain { .. }
            | Error::Json(_) => 2,
            Error::QuadratureNotConverged { .. }
            | Error::Eigensolver(_)
            | Error::NonFinitePotential { .. }
            | Error::ZeroVector
            | Error::NodeInGroundState { .. }
            | Error::GridMismatch => 3,
            Error::Io(_) | Error::Csv(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
