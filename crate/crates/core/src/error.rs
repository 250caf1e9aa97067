use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid interval {0:?}")]
    ParseHalfLine(String),

    #[error("invalid pixel grid: {0}")]
    ParseGrid(String),

    #[error("composition chain must have at least one factor")]
    EmptyChain,

    #[error("T_m requires m >= 1, got {0}")]
    InvalidTmIndex(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the pair ({0}, {1}) commutes; no witness exists")]
    Commutes(String, String),

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("cannot render an empty digital line")]
    EmptyLine,

    #[error("image of {width}x{height} pixels exceeds the rendering limit")]
    ImageTooLarge { width: u128, height: u128 },

    /// A formula and direct evaluation disagreed. Never expected on a
    /// correct build.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
