use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the delay models, the dataset layer and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The field exceeds the atomic field strength; there is no barrier left to tunnel through.
    #[error("barrier-suppression regime: field {field} au exceeds atomic field strength {atomic_field} au")]
    BarrierSuppressed { field: f64, atomic_field: f64 },

    /// The excess energy of an intermediate-regime delay exceeds the barrier height.
    #[error("excess energy {excess} au exceeds the barrier height delta_z = {delta_z} au")]
    SaturationExceeded { excess: f64, delta_z: f64 },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("{path}: line {line}: {message}")]
    Validation {
        path: PathBuf,
        line: u64,
        message: String,
    },

    /// Every measurement was excluded from a comparison.
    #[error(
        "no measurement could be compared ({excluded} excluded by the barrier-suppression regime)"
    )]
    EmptyComparison { excluded: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors that come from evaluating the physical model
    /// (as opposed to file handling).
    pub fn is_model_error(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::BarrierSuppressed { .. }
                | Error::SaturationExceeded { .. }
                | Error::EmptyComparison { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
