//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("site index {0} out of range (dots are 0, 1, 2)")]
    SiteOutOfRange(usize),

    #[error("mode index {0} out of range (modes are 0..6)")]
    ModeOutOfRange(usize),

    #[error("occupation pattern {0:#08b} uses bits beyond the six modes")]
    InvalidOccupation(u8),

    #[error("sector (N={n}, Sz={sz}) contains no states")]
    EmptySector { n: u32, sz: i32 },

    #[error("logical bits must each be 0 or 1, got {0:?}")]
    InvalidBits([u8; 3]),

    #[error("operator maps state {state:06b} outside the target basis")]
    SectorMismatch { state: u8 },

    #[error("matrix is {rows}x{cols} but the basis has dimension {dim}")]
    DimensionMismatch { rows: usize, cols: usize, dim: usize },

    #[error("state and operator are expressed in different bases")]
    BasisMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("evolution time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("time step must be positive, got {0}")]
    InvalidTimeStep(f64),

    #[error("sampled evolution needs at least 2 snapshots, got {0}")]
    TooFewSnapshots(usize),

    #[error("matrix is not Hermitian (residual {0:.3e})")]
    NotHermitian(f64),

    #[error("auxiliary swap calibration failed: best fidelity {best:.4} is below 0.9")]
    CalibrationFailed {
        best: f64,
        /// (duration, worst-branch swap fidelity) samples of the scan.
        curve: Vec<(f64, f64)>,
    },

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
