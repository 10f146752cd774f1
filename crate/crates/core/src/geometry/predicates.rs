use crate::error::{CurveError, Result};
use crate::geometry::arclength::{distance_to_segment, Tolerances};
use crate::geometry::curve::{distance, PolygonalCurve};

/// Indices of the basic vertices of `curve`.
///
/// `p_0` is always basic. An interior vertex is basic when it differs from
/// its predecessor and does not lie on the segment joining its predecessor
/// to the next vertex that differs from it. The final vertex is basic when
/// it differs from its predecessor. "Differs" and "lies on" are decided
/// within `tol.bound(L(C))`.
pub fn basic_vertex_indices(curve: &PolygonalCurve, tol: Tolerances) -> Vec<usize> {
    let eps = tol.bound(curve.length());
    let m = curve.segments();
    let mut basic = vec![0];
    for k in 1..m {
        let here = curve.vertex(k);
        let prev = curve.vertex(k - 1);
        if distance(here, prev) <= eps {
            continue;
        }
        // Look past duplicates of p_k; trailing duplicates make p_k the
        // effective end of the curve.
        let next = (k + 1..=m)
            .map(|j| curve.vertex(j))
            .find(|v| distance(v, here) > eps);
        match next {
            Some(next) if distance_to_segment(here, prev, next) <= eps => {}
            _ => basic.push(k),
        }
    }
    if distance(curve.vertex(m), curve.vertex(m - 1)) > eps {
        basic.push(m);
    }
    basic
}

/// Whether two curves share the same ordered sequence of basic vertices,
/// compared coordinatewise within `tol.bound(max(L(C), L(D)))`.
pub fn similar(a: &PolygonalCurve, b: &PolygonalCurve, tol: Tolerances) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(CurveError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let ia = basic_vertex_indices(a, tol);
    let ib = basic_vertex_indices(b, tol);
    if ia.len() != ib.len() {
        return Ok(false);
    }
    let eps = tol.bound(a.length().max(b.length()));
    Ok(ia.iter().zip(&ib).all(|(&i, &j)| {
        a.vertex(i)
            .iter()
            .zip(b.vertex(j))
            .all(|(x, y)| (x - y).abs() <= eps)
    }))
}

/// Cumulative equilateral test: `|k L / m - d_k| <= tol.bound(L)` for every
/// `k = 1..=m`. Zero-length curves count as equilateral.
pub fn is_equilateral(curve: &PolygonalCurve, tol: Tolerances) -> bool {
    let total = curve.length();
    if total == 0.0 {
        return true;
    }
    let eps = tol.bound(total);
    let m = curve.segments() as f64;
    let mut acc = 0.0;
    curve.segment_lengths().enumerate().all(|(i, d)| {
        acc += d;
        let target = (i + 1) as f64 * total / m;
        (target - acc).abs() <= eps
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(rows: &[[f64; 2]]) -> PolygonalCurve {
        PolygonalCurve::from_rows(rows).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn basic_vertex_examples() {
        let c = curve(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [2.0, 1.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 2, 3]);
        let c = curve(&[[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 2]);
        let c = curve(&[[0.0, 0.0], [1.0, 1.0], [2.0, 0.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 1, 2]);
    }

    #[test]
    fn basic_vertices_skip_duplicates_when_testing_collinearity() {
        // The corner at (1, 0) survives even though it is repeated.
        let c = curve(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 1.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 1, 3]);
        // Trailing duplicates: the last distinct vertex stands in for p_m.
        let c = curve(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 1]);
        // Backtracking along a line keeps the turnaround point.
        let c = curve(&[[0.0, 0.0], [2.0, 0.0], [1.0, 0.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 1, 2]);
        // A closed curve's last vertex is basic when it moves.
        let c = curve(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]);
        assert_eq!(basic_vertex_indices(&c, tol()), vec![0, 1, 2, 3]);
    }

    #[test]
    fn similarity_examples() {
        let a = curve(&[[0.0, 0.0], [2.0, 0.0]]);
        let b = curve(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        assert!(similar(&a, &b, tol()).unwrap());
        let c = curve(&[[0.0, 0.0], [1.0, 1.0], [2.0, 0.0]]);
        assert!(!similar(&c, &a, tol()).unwrap());
        assert!(similar(&c, &c, tol()).unwrap());
        let d3 = PolygonalCurve::from_rows(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]).unwrap();
        assert!(matches!(
            similar(&a, &d3, tol()),
            Err(CurveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn equilateral_examples() {
        assert!(is_equilateral(&curve(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]), tol()));
        assert!(!is_equilateral(&curve(&[[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]), tol()));
        assert!(is_equilateral(&curve(&[[0.0, 0.0], [0.0, 0.0]]), tol()));
        // Spacings 1 and 0 are not equal even though the total is positive.
        assert!(!is_equilateral(&curve(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0]]), tol()));
    }
}
