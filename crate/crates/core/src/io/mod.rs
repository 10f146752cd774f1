//! Curve CSV, curve documents, trace CSV, and SVG output.

mod csv;
mod number;
mod svg;
mod trace;

use thiserror::Error;

use crate::error::CurveError;

pub use self::csv::{parse_csv, read_csv, write_csv, CurveDocument};
pub use self::number::format_g17;
pub use self::svg::{render_svg, RenderOptions, Style};
pub use self::trace::{format_stats_table, trace_rows, write_rows_csv, write_trace_csv, TraceRow, TRACE_HEADER};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a curve needs at least 2 vertices, found {0}")]
    TooFewVertices(usize),
    #[error("cannot draw a {0}-dimensional curve without choosing two axes")]
    UnsupportedDimension(usize),
    #[error("{0}")]
    Render(String),
    #[error("{0}")]
    Metadata(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
