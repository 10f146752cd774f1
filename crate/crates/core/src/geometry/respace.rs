use crate::error::{CurveError, Result};
use crate::geometry::arclength::{interpolate_into, ArclengthTable, Tolerances};
use crate::geometry::curve::PolygonalCurve;

/// Arclength respacing `f(C)`: the `m + 1` points at arclengths `k L / m`
/// along `C`.
///
/// The endpoints are copied through untouched. A curve of zero length is
/// returned unchanged.
pub fn respace(curve: &PolygonalCurve) -> PolygonalCurve {
    let table = ArclengthTable::new(curve);
    let total = table.total();
    if total == 0.0 {
        return curve.clone();
    }
    let m = curve.segments();
    let dim = curve.dim();
    let mut coords = vec![0.0; curve.as_flat().len()];
    coords[..dim].copy_from_slice(curve.first());
    for k in 1..m {
        let s = (k as f64 * total / m as f64).min(total);
        interpolate_into(curve, &table, s, &mut coords[k * dim..(k + 1) * dim]);
    }
    coords[m * dim..].copy_from_slice(curve.last());
    PolygonalCurve::from_flat_unchecked(dim, coords)
}

/// Oriented resampling: the points `P(s_k)` for a nondecreasing schedule
/// running from `0` to `L(C)`.
///
/// Endpoint and monotonicity checks use the default tolerances scaled by
/// the curve length.
pub fn resample(curve: &PolygonalCurve, samples: &[f64]) -> Result<PolygonalCurve> {
    resample_with(curve, samples, Tolerances::default())
}

pub fn resample_with(curve: &PolygonalCurve, samples: &[f64], tol: Tolerances) -> Result<PolygonalCurve> {
    let table = ArclengthTable::new(curve);
    let total = table.total();
    let eps = tol.bound(total);
    let bad = |msg: String| Err(CurveError::BadSampleSchedule(msg));
    if samples.len() < 2 {
        return bad(format!("need at least 2 samples, got {}", samples.len()));
    }
    if let Some(s) = samples.iter().find(|s| !s.is_finite()) {
        return bad(format!("non-finite sample {s}"));
    }
    if samples[0].abs() > eps {
        return bad(format!("first sample {} is not 0", samples[0]));
    }
    let last = samples[samples.len() - 1];
    if (last - total).abs() > eps {
        return bad(format!("last sample {last} is not the curve length {total}"));
    }
    if let Some(k) = samples.windows(2).position(|w| w[1] < w[0] - eps) {
        return bad(format!(
            "samples decrease at index {}: {} after {}",
            k + 1,
            samples[k + 1],
            samples[k]
        ));
    }
    let dim = curve.dim();
    let n = samples.len();
    let mut coords = vec![0.0; n * dim];
    coords[..dim].copy_from_slice(curve.first());
    for (k, &s) in samples.iter().enumerate().take(n - 1).skip(1) {
        interpolate_into(curve, &table, s.clamp(0.0, total), &mut coords[k * dim..(k + 1) * dim]);
    }
    coords[(n - 1) * dim..].copy_from_slice(curve.last());
    Ok(PolygonalCurve::from_flat_unchecked(dim, coords))
}

/// Respacing with a caller-chosen spacing `delta` instead of `L / m`.
///
/// Produces `floor(L / delta) + 1` vertices (at least 2) at arclengths
/// `k * delta`, with the final vertex pinned to `p_m`. A zero-length curve
/// is returned unchanged.
pub fn respace_with_spacing(curve: &PolygonalCurve, delta: f64) -> Result<PolygonalCurve> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(CurveError::BadSpacing(delta));
    }
    let total = curve.length();
    if total == 0.0 {
        return Ok(curve.clone());
    }
    let ratio = total / delta;
    // L / (L / m) can round to just under m.
    let steps = ((ratio * (1.0 + 4.0 * f64::EPSILON)).floor() as usize).max(1);
    let mut samples: Vec<f64> = (0..steps).map(|k| (k as f64 * delta).min(total)).collect();
    samples.push(total);
    resample(curve, &samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(rows: &[[f64; 2]]) -> PolygonalCurve {
        PolygonalCurve::from_rows(rows).unwrap()
    }

    #[test]
    fn respace_examples() {
        let c = curve(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]);
        assert_eq!(respace(&c), curve(&[[0.0, 0.0], [1.0, 2.0], [4.0, 2.0]]));

        let eq = curve(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        assert_eq!(respace(&eq), eq);

        let collinear = curve(&[[0.0, 0.0], [1.5, 0.0], [1.0, 0.0]]);
        assert_eq!(respace(&collinear), curve(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0]]));
    }

    #[test]
    fn zero_length_curve_is_fixed() {
        let c = curve(&[[2.0, 3.0], [2.0, 3.0], [2.0, 3.0]]);
        assert_eq!(respace(&c), c);
    }

    #[test]
    fn respace_handles_duplicate_vertices() {
        let c = curve(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 3.0]]);
        let r = respace(&c);
        // d = (0, 1, 1, 4); samples at 4/3 and 8/3 land on the last segment.
        assert_eq!(r.vertex(1)[0], 1.0);
        assert!((r.vertex(1)[1] - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.vertex(2)[0], 1.0);
        assert!((r.vertex(2)[1] - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.vertex(3), &[1.0, 3.0]);
    }

    #[test]
    fn resample_examples() {
        let c = curve(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]);
        assert_eq!(resample(&c, &[0.0, 2.0, 6.0]).unwrap(), c);
        assert_eq!(
            resample(&c, &[0.0, 3.0, 6.0]).unwrap(),
            curve(&[[0.0, 0.0], [1.0, 2.0], [4.0, 2.0]])
        );
        assert_eq!(
            resample(&c, &[0.0, 0.0, 6.0]).unwrap(),
            curve(&[[0.0, 0.0], [0.0, 0.0], [4.0, 2.0]])
        );
    }

    #[test]
    fn resample_rejects_bad_schedules() {
        let c = curve(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]);
        for s in [
            &[0.0][..],
            &[0.1, 6.0],
            &[0.0, 5.0],
            &[0.0, 4.0, 3.0, 6.0],
            &[0.0, f64::NAN, 6.0],
        ] {
            assert!(
                matches!(resample(&c, s), Err(CurveError::BadSampleSchedule(_))),
                "{s:?}"
            );
        }
        // Endpoint slop within tolerance is accepted and pinned.
        let r = resample(&c, &[-1e-13, 3.0, 6.0 + 1e-13]).unwrap();
        assert_eq!(r.first(), c.first());
        assert_eq!(r.last(), c.last());
    }

    #[test]
    fn spacing_override() {
        let c = curve(&[[0.0, 0.0], [0.0, 2.0], [4.0, 2.0]]);
        let r = respace_with_spacing(&c, 2.5).unwrap();
        assert_eq!(r, curve(&[[0.0, 0.0], [0.5, 2.0], [4.0, 2.0]]));
        // delta = L / m reproduces respace.
        assert_eq!(respace_with_spacing(&c, 3.0).unwrap(), respace(&c));
        let long = respace_with_spacing(&c, 100.0).unwrap();
        assert_eq!(long, curve(&[[0.0, 0.0], [4.0, 2.0]]));
        assert!(respace_with_spacing(&c, 0.0).is_err());
        assert!(respace_with_spacing(&c, f64::INFINITY).is_err());
    }
}
