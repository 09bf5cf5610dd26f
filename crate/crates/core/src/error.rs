use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("module is not finitely generated projective: {0}")]
    NotProjective(String),

    #[error("map is not well defined on the quotient: {0}")]
    IllDefined(String),

    #[error("no antipode: {0}")]
    NoAntipode(String),

    #[error("no opposite antipode: {0}")]
    NoOppositeAntipode(String),

    #[error("action selector {0} is not carried by the module")]
    InvalidSelector(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("parse error: {0}")]
    Parse(String),
}
