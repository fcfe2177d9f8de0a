//! Error taxonomy shared by all modules.

use thiserror::Error;

/// One evaluated candidate duration in a minimum-time scan.
///
/// Stored in `f64` regardless of the working scalar so the error type stays
/// non-generic.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    /// Candidate trajectory duration [s].
    pub duration: f64,
    /// Whether the safety evaluation passed at this duration.
    pub pass: bool,
    /// Peak |stress| attained [Pa].
    pub peak_stress: f64,
    /// Peak |angular jerk| attained [rad/s^3].
    pub peak_theta_jerk: f64,
    /// Peak |radial jerk| attained [m/s^3].
    pub peak_r_jerk: f64,
    /// Smallest relative resonance gap over all modes considered.
    pub min_resonance_gap: f64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid rotation sample: {0}")]
    InvalidRotation(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// No candidate duration inside the search bounds satisfied the limits.
    /// Carries the full scan table for diagnosis.
    #[error("infeasible: no duration in bounds satisfies the limits ({} candidates scanned)", scan.len())]
    Infeasible { scan: Vec<ScanRow> },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
