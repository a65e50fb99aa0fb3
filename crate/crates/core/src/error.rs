use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,

    #[error("unrecognized token {found:?} at position {position} in pattern")]
    UnrecognizedToken { position: usize, found: String },

    #[error("letter {letter} at position {position} is outside the alphabet of size {size}")]
    LetterOutOfRange {
        letter: u32,
        position: usize,
        size: usize,
    },

    #[error("alphabet size must be between 1 and {max}, got {got}")]
    InvalidAlphabet { got: usize, max: usize },

    #[error("the substituted word must be nonempty")]
    EmptyWord,

    #[error("invalid involution {text:?}: {reason}")]
    InvalidInvolution { text: String, reason: String },

    #[error("invalid word kind {0:?} (expected tm, w, v, u or periodic:<base>)")]
    InvalidWordKind(String),

    #[error("invalid word text at position {position}: {reason}")]
    InvalidWord { position: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
