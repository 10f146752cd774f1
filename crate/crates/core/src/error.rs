use thiserror::Error;

/// Errors raised by curve construction and the geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("a point needs at least one coordinate")]
    EmptyPoint,
    #[error("non-finite coordinate {value} at vertex {vertex}")]
    NonFinite { vertex: usize, value: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a polygonal curve needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("closed curve endpoints differ")]
    OpenEndpoints,
    #[error("arclength {s} outside [0, {total}]")]
    OutOfRange { s: f64, total: f64 },
    #[error("bad sample schedule: {0}")]
    BadSampleSchedule(String),
    #[error("bad spacing {0}: must be positive and finite")]
    BadSpacing(f64),
    #[error("vertex {index}: {reason}")]
    DegenerateAngle { index: usize, reason: &'static str },
    #[error("invalid tolerances: rel={rel}, abs={abs}")]
    BadTolerances { rel: f64, abs: f64 },
}

pub type Result<T, E = CurveError> = std::result::Result<T, E>;
