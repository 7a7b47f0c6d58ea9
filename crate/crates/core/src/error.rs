use thiserror::Error;

use crate::paths::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Letter sum is not zero.
    #[error("word is not balanced: letters sum to {sum}")]
    NotBalanced { sum: i64 },

    /// 1-based position where the prefix sum first drops below zero.
    #[error("prefix sum drops below zero at position {position}")]
    NegativePrefix { position: usize },

    #[error("letter {letter:?} at position {position} is not allowed in a {kind} word")]
    BadAlphabet {
        kind: &'static str,
        letter: Letter,
        position: usize,
    },

    #[error("unrecognized character {character:?} at position {position}")]
    BadCharacter { character: char, position: usize },

    /// 1-based position of a red zero whose preceding prefix sum is 0.
    #[error("red zero at position {position} sits at ground level")]
    RedZeroAtGroundLevel { position: usize },

    #[error("a restricted word needs at least one letter")]
    EmptyRestricted,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("malformed record: {0}")]
    Malformed(String),
}

impl Error {
    /// True for the alphabet class of errors, including unknown text characters.
    pub fn is_bad_alphabet(&self) -> bool {
        matches!(self, Error::BadAlphabet { .. } | Error::BadCharacter { .. })
    }
}
