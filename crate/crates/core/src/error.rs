use thiserror::Error;

/// Errors raised by word maps, parameter constructors and the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A 1-based position (or range bound) fell outside the allowed interval.
    #[error("position {pos} out of range [{lo}, {hi}]")]
    Range { pos: usize, lo: usize, hi: usize },

    /// A partial map (BAD/BAR) was applied at a position where `x_i == x_{i+1}`.
    #[error("partial map undefined at position {pos}: symbols {pos} and {} are equal", pos + 1)]
    Domain { pos: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid symbol {0:?} in binary word")]
    Parse(char),

    /// Exhaustive enumeration was requested beyond the configured block-length guard.
    #[error("block length {n} exceeds enumeration guard {limit}")]
    Resource { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
