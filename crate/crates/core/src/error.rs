use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mode list is empty")]
    EmptyModes,

    #[error("invalid mode spec: {0}")]
    InvalidModeSpec(String),

    #[error("mode index {index} out of range for {len} modes")]
    ModeIndex { index: usize, len: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("mode specs of the two states differ")]
    ModeMismatch,

    #[error("ket {occ:?} violates cutoffs")]
    CutoffViolation { occ: Vec<u32> },

    #[error("cutoff {cutoff} too small, need at least {needed}")]
    CutoffTooSmall { needed: u32, cutoff: u32 },

    #[error("operation undefined on the zero state")]
    ZeroState,

    #[error("degenerate parameters: detuning and coupling both vanish")]
    DegenerateParams,

    #[error("state spans several excitation-number sectors")]
    MultipleSectors,

    #[error("projection annihilates the product state")]
    ProjectionAnnihilates,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
