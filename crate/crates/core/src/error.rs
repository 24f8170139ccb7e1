use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("signature has {atoms} atoms, at most {max} are supported here")]
    SignatureTooLarge { atoms: usize, max: usize },

    #[error("exhaustive {what} needs at most {max} atoms but the signature has {atoms}; use sampled mode")]
    DomainTooLarge {
        what: &'static str,
        atoms: usize,
        max: usize,
    },

    #[error("signature mismatch: expected {expected} valuations, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("invalid rank function: {0}")]
    InvalidRank(String),

    #[error("rank file line {line}: {message}")]
    RankFile { line: usize, message: String },

    #[error("relation is not induced by any ranking: {0}")]
    NotRanked(String),

    #[error("unknown postulate `{0}`")]
    UnknownPostulate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no witness found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
