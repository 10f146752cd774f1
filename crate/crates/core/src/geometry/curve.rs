use std::fmt;

use crate::error::{CurveError, Result};

/// Absolute coordinate tolerance used to decide whether a curve is closed.
pub const CLOSED_EPS: f64 = 1e-12;

/// A point in n-dimensional Euclidean space with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(CurveError::EmptyPoint);
        }
        if let Some(&value) = coords.iter().find(|c| !c.is_finite()) {
            return Err(CurveError::NonFinite { vertex: 0, value });
        }
        Ok(Self { coords })
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn distance(&self, other: &Point) -> f64 {
        distance(&self.coords, &other.coords)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.coords
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Euclidean distance between two coordinate slices of equal length.
pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// A piecewise-linear curve through the ordered vertices `p_0 .. p_m`.
///
/// Coordinates are stored flat, vertex after vertex. The `closed` flag is
/// metadata: it is true exactly when the first and last vertices agree
/// coordinatewise within [`CLOSED_EPS`], and nothing in the respacing
/// machinery treats closed curves specially.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve {
    dim: usize,
    coords: Vec<f64>,
    closed: bool,
}

impl PolygonalCurve {
    /// Builds a curve from owned points, inferring the closed flag.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let dim = vertices.first().map(Point::dim).unwrap_or(0);
        let mut coords = Vec::with_capacity(dim * vertices.len());
        for p in &vertices {
            if p.dim() != dim {
                return Err(CurveError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            coords.extend_from_slice(&p.coords);
        }
        Self::from_flat(dim, coords)
    }

    /// Builds a curve from rows of coordinates.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut coords = Vec::with_capacity(dim * rows.len());
        for r in rows {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(CurveError::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            coords.extend_from_slice(r);
        }
        Self::from_flat(dim, coords)
    }

    /// Builds a curve from a flat coordinate buffer of `dim`-sized vertices.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(if coords.is_empty() {
                CurveError::TooFewVertices(0)
            } else {
                CurveError::EmptyPoint
            });
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(CurveError::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        let count = coords.len() / dim;
        if count < 2 {
            return Err(CurveError::TooFewVertices(count));
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(CurveError::NonFinite {
                vertex: i / dim,
                value: coords[i],
            });
        }
        let closed = endpoints_coincide(dim, &coords);
        Ok(Self {
            dim,
            coords,
            closed,
        })
    }

    /// Internal constructor for buffers already known to be valid.
    pub(crate) fn from_flat_unchecked(dim: usize, coords: Vec<f64>) -> Self {
        debug_assert!(dim > 0 && coords.len() >= 2 * dim && coords.len().is_multiple_of(dim));
        let closed = endpoints_coincide(dim, &coords);
        Self {
            dim,
            coords,
            closed,
        }
    }

    /// Overrides the closed flag. Setting it requires coincident endpoints.
    pub fn with_closed(mut self, closed: bool) -> Result<Self> {
        if closed && !endpoints_coincide(self.dim, &self.coords) {
            return Err(CurveError::OpenEndpoints);
        }
        self.closed = closed;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices, `m + 1`.
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// A valid curve always has at least two vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of segments, `m`.
    pub fn segments(&self) -> usize {
        self.len() - 1
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn vertex(&self, k: usize) -> &[f64] {
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    pub fn first(&self) -> &[f64] {
        self.vertex(0)
    }

    pub fn last(&self) -> &[f64] {
        self.vertex(self.len() - 1)
    }

    pub fn point(&self, k: usize) -> Point {
        Point::from_vec_unchecked(self.vertex(k).to_vec())
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn points(&self) -> Vec<Point> {
        self.vertices()
            .map(|v| Point::from_vec_unchecked(v.to_vec()))
            .collect()
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// Lengths `||p_k - p_{k-1}||` for `k = 1..=m`.
    pub fn segment_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.coords
            .chunks_exact(self.dim)
            .zip(self.coords.chunks_exact(self.dim).skip(1))
            .map(|(a, b)| distance(a, b))
    }

    /// `L(C)`, the sum of segment lengths accumulated in order `k = 1..=m`.
    pub fn length(&self) -> f64 {
        let mut total = 0.0;
        for d in self.segment_lengths() {
            total += d;
        }
        total
    }

    /// Largest distance between corresponding vertices of two curves with
    /// the same shape.
    pub fn max_vertex_displacement(&self, other: &PolygonalCurve) -> Result<f64> {
        if self.dim != other.dim {
            return Err(CurveError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.len() != other.len() {
            return Err(CurveError::BadSampleSchedule(format!(
                "vertex counts differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .vertices()
            .zip(other.vertices())
            .map(|(a, b)| distance(a, b))
            .fold(0.0, f64::max))
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, a) in self.vertices().enumerate() {
            for b in self.vertices().skip(i + 1) {
                best = best.max(distance(a, b));
            }
        }
        best
    }
}

fn endpoints_coincide(dim: usize, coords: &[f64]) -> bool {
    let n = coords.len();
    coords[..dim]
        .iter()
        .zip(&coords[n - dim..])
        .all(|(a, b)| (a - b).abs() <= CLOSED_EPS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(rows: &[[f64; 2]]) -> PolygonalCurve {
        PolygonalCurve::from_rows(rows).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(curve(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]).length(), 6.0);
        assert_eq!(curve(&[[0.0, 0.0], [0.0, 0.0]]).length(), 0.0);
        assert_eq!(curve(&[[0.0, 0.0], [3.0, 4.0]]).length(), 5.0);
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(
            PolygonalCurve::from_rows(&[[0.0, 0.0]]),
            Err(CurveError::TooFewVertices(1))
        );
        assert!(matches!(
            PolygonalCurve::from_rows(&[vec![0.0, 0.0], vec![1.0]]),
            Err(CurveError::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            PolygonalCurve::from_rows(&[[0.0, 0.0], [f64::NAN, 1.0]]),
            Err(CurveError::NonFinite { vertex: 1, .. })
        ));
        assert_eq!(Point::new(vec![]), Err(CurveError::EmptyPoint));
        assert!(Point::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn closed_flag_follows_endpoints() {
        assert!(curve(&[[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]).is_closed());
        assert!(curve(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1e-13]]).is_closed());
        assert!(!curve(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1e-9]]).is_closed());
        let open = curve(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(open.clone().with_closed(true), Err(CurveError::OpenEndpoints));
        let closed = curve(&[[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]);
        assert!(!closed.with_closed(false).unwrap().is_closed());
    }

    #[test]
    fn points_round_trip_through_new() {
        let c = curve(&[[0.0, 0.0], [1.0, 2.0], [3.0, -1.0]]);
        assert_eq!(PolygonalCurve::new(c.points()).unwrap(), c);
        assert_eq!(c.segments(), 2);
        assert_eq!(c.point(1).coords(), &[1.0, 2.0]);
    }
}
