//! Polygonal curves, their arclength parameterization, and arclength
//! respacing.

mod arclength;
mod curve;
mod predicates;
mod respace;

pub use arclength::{arclength_table, point_at_arclength, ArclengthTable, Tolerances};
pub use curve::{distance, Point, PolygonalCurve, CLOSED_EPS};
pub use predicates::{basic_vertex_indices, is_equilateral, similar};
pub use respace::{resample, resample_with, respace, respace_with_spacing};
