use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid parameters or an unsupported combination of options.
    #[error("configuration error: {0}")]
    Config(String),

    /// Data that violates an input contract (too few points, bad indices, ...).
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// The neighborhood graph splits into several components.
    #[error(
        "neighborhood graph is disconnected ({components} components, largest has {largest} of {total} vertices); \
         increase k or epsilon, or use the largest-component policy"
    )]
    Disconnected {
        components: usize,
        largest: usize,
        total: usize,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Fitted slope at or above one: the dimension estimate diverges.
    #[error("ill-posed slope a_hat = {a_hat}: gamma/(1 - a_hat) diverges, no finite dimension estimate")]
    IllPosedSlope { a_hat: f64 },

    /// Fitted slope at or below zero: mean length does not grow with sample size.
    #[error("degenerate slope a_hat = {a_hat}: mean GMST length does not grow with subset size")]
    DegenerateSlope { a_hat: f64 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command-line driver.
    ///
    /// 1 usage, 2 I/O, 3 disconnected graph, 4 ill-posed slope, 5 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Input(_) | Error::Degenerate(_) => 1,
            Error::Io { .. } | Error::Parse(_) => 2,
            Error::Disconnected { .. } => 3,
            Error::IllPosedSlope { .. } | Error::DegenerateSlope { .. } => 4,
            Error::Internal(_) => 5,
        }
    }
}
