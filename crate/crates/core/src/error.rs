use thiserror::Error;

pub type Result<T> = std::result::Result<T, GameError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("game must have at least one player and every player at least one strategy")]
    EmptyGame,

    #[error("shape mismatch: expected {expected} {what}, found {found}")]
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("payoff entry {index} is not finite ({value})")]
    NonFinitePayoff { index: usize, value: f64 },

    #[error("game has {profiles} pure profiles, limit is {limit}")]
    GameTooLarge { profiles: u128, limit: usize },

    #[error("{what} index {index} out of bounds (size {len})")]
    IndexOutOfBounds {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("strategies compared for dominance must differ (both are {0})")]
    SameStrategy(usize),

    #[error("prisoner's dilemma ordering violated: {0}")]
    InvalidOrdering(String),

    #[error("invalid exchange valuation: {0}")]
    InvalidValuation(String),

    #[error("invalid arms-race model: {0}")]
    InvalidModel(String),

    #[error("operation needs exactly 2 players with 2 strategies each")]
    NotTwoByTwo,

    #[error("invalid mixed strategy: {0}")]
    InvalidMixed(String),
}
