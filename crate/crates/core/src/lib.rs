//! Arclength respacing of polygonal curves.
//!
//! [`geometry::respace`] moves the vertices of a polygonal curve so they sit
//! at equal arclength intervals along the original curve. Repeating it
//! ([`iteration::iterate`]) never increases the curve length and converges
//! to an equilateral polygonal curve.
//!
//! ```
//! use respace::geometry::{respace, PolygonalCurve};
//!
//! let c = PolygonalCurve::from_rows(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]).unwrap();
//! let f = respace(&c);
//! assert_eq!(f.vertex(1), &[1.0, 2.0]);
//! assert!(f.length() <= c.length());
//! ```

pub mod error;
pub mod geometry;
pub mod io;
pub mod iteration;
pub mod oracle;

pub use error::{CurveError, Result};
pub use geometry::{respace, PolygonalCurve, Point, Tolerances};
pub use iteration::{iterate, IterationConfig, IterationTrace, SpacingStats, StopReason};
