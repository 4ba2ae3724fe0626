use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("letter {letter} is out of range for {params}")]
    IndexOutOfRange { letter: String, params: String },

    #[error("{op} does not accept letter {letter}")]
    WrongAlphabet { op: &'static str, letter: String },

    #[error("word is not pure: its permutation is {0}")]
    NotPure(Permutation),

    #[error("syllable at level {level} grew to {len} letters (cap {cap})")]
    Blowup { level: u32, len: usize, cap: usize },

    #[error("position {index} out of range 1..={len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("braid embedding rejects relator {relator} [{family}]")]
    EmbeddingInvalid { family: String, relator: String },
}

impl Error {
    /// Short machine-readable tag used by the command-line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "params",
            Error::Syntax { .. } => "syntax",
            Error::IndexOutOfRange { .. } => "range",
            Error::WrongAlphabet { .. } => "alphabet",
            Error::NotPure(_) => "not-pure",
            Error::Blowup { .. } => "blowup",
            Error::PositionOutOfRange { .. } => "position",
            Error::EmbeddingInvalid { .. } => "embedding",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
