use thiserror::Error;

use crate::directed::WedgeType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has no wedges")]
    NoWedges,

    #[error("graph has no type-({0}) wedges")]
    NoWedgesOfType(WedgeType),

    #[error("graph has no vertices of degree {0}")]
    NoSuchDegree(usize),

    #[error("degree {0} vertices cannot center a wedge")]
    DegenerateDegree(usize),
}
