use thiserror::Error;

use crate::pointset::PointSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of size {0} exceeds the supported maximum of 16 points")]
    GroundSetTooLarge(usize),

    #[error("point {point} is outside the ground set of size {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("set {set} is not contained in the ground set of size {n}")]
    SetOutOfRange { set: PointSet, n: usize },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("ground set sizes differ: topology has {topology} points, ideal has {ideal}")]
    SizeMismatch { topology: usize, ideal: usize },

    #[error("invalid neighbourhood assignment: {0}")]
    InvalidAssignment(String),

    #[error("set {0} is not preopen")]
    NotPreopen(PointSet),

    #[error("singleton {{{0}}} is not closed")]
    SingletonNotClosed(usize),

    #[error("point {y} does not lie in U_{x0} minus A")]
    InvalidShrinkPoint { x0: usize, y: usize },

    #[error("family does not have the dense finite intersection property")]
    NotDenseFip,

    #[error("unknown point label {0:?}")]
    UnknownLabel(String),

    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
