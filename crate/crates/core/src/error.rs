use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part at index {index} is {value}, parts must be positive")]
    NonPositivePart { index: usize, value: i64 },

    #[error("parts must be non-increasing: index {index} holds {prev}, index {} holds {next}", index + 1)]
    NotNonIncreasing { index: usize, prev: i64, next: i64 },

    #[error("cannot parse part at index {index}: {token:?}")]
    Parse { index: usize, token: String },

    #[error("weight {weight} exceeds the supported maximum {max}")]
    WeightLimit { weight: u64, max: u64 },

    #[error("invalid Durfee triple: {0}")]
    InvalidDurfee(String),

    #[error("{map}: input outside domain ({reason})")]
    Domain { map: &'static str, reason: String },

    /// Raised when an iterated map exceeds its step cap or lands on a
    /// fixed point from a legal entry. Either signals a bug, not bad input.
    #[error("{map}: internal error ({reason})")]
    Internal { map: &'static str, reason: String },

    #[error("integer overflow in series coefficient at order {order}")]
    SeriesOverflow { order: usize },
}

impl Error {
    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            map,
            reason: reason.into(),
        }
    }

    pub(crate) fn internal(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Internal {
            map,
            reason: reason.into(),
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}
