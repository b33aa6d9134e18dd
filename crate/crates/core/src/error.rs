use thiserror::Error;

use crate::hamspace::validate::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no points")]
    NoPoints,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix entry count {found} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, found: usize },

    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("inconsistent spec: {0}")]
    InconsistentSpec(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("invalid spec: face complexity inconsistent ({0})")]
    FaceComplexity(String),

    #[error("validation failed: {}", .0.first_failure().map(|c| c.name).unwrap_or("unknown"))]
    Validation(Box<ValidationReport>),

    #[error("degenerate orbit")]
    DegenerateOrbit,

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("unsupported fixed component: {0}")]
    UnsupportedFixedComponent(String),

    #[error("rotated sphere factor {0} has zero weight")]
    ZeroSphereWeight(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("face selection is not downward closed: face {0} is missing")]
    NotDownwardClosed(usize),
}
