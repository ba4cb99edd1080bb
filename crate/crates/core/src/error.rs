use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("token {token:?} is not an integer")]
    InvalidToken { token: String },

    #[error("generator 0 is not a braid generator")]
    ZeroGenerator,

    #[error("generator {index} needs at least {needed} strands, but only {strands} were given")]
    IndexOutOfRange {
        index: usize,
        strands: usize,
        needed: usize,
    },

    #[error("strand count must be positive")]
    NoStrands,

    #[error("no braid relation pattern at position {position}")]
    RelationAbsent { position: usize },

    #[error("root index {k} out of range for order {p}")]
    RootOutOfRange { k: usize, p: usize },

    #[error("covering degree {p} is below the minimum {min}")]
    DegreeTooSmall { p: usize, min: usize },

    #[error("matrix is not {kind}")]
    NotSelfAdjoint { kind: &'static str },

    #[error("band surface is disconnected")]
    DisconnectedSurface,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}
