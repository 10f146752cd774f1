use crate::error::{CurveError, Result};
use crate::geometry::curve::{distance, Point, PolygonalCurve};

/// Relative and absolute tolerance pair. Comparisons accept a deviation of
/// `rel * scale + abs`, where `scale` is the relevant curve length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerances {
    pub const DEFAULT_REL: f64 = 1e-9;
    pub const DEFAULT_ABS: f64 = 1e-12;

    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        let ok = rel >= 0.0 && abs >= 0.0 && rel.is_finite() && abs.is_finite();
        if !ok || (rel == 0.0 && abs == 0.0) {
            return Err(CurveError::BadTolerances { rel, abs });
        }
        Ok(Self { rel, abs })
    }

    /// Same absolute floor as the defaults, with a custom relative part.
    pub fn relative(rel: f64) -> Self {
        Self {
            rel,
            abs: Self::DEFAULT_ABS,
        }
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.rel * scale + self.abs
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel: Self::DEFAULT_REL,
            abs: Self::DEFAULT_ABS,
        }
    }
}

/// Cumulative arclengths `d_0 = 0, d_k = d_{k-1} + ||p_k - p_{k-1}||`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArclengthTable {
    cumulative: Vec<f64>,
}

impl ArclengthTable {
    pub fn new(curve: &PolygonalCurve) -> Self {
        let mut cumulative = Vec::with_capacity(curve.len());
        let mut acc = 0.0;
        cumulative.push(acc);
        for d in curve.segment_lengths() {
            acc += d;
            cumulative.push(acc);
        }
        Self { cumulative }
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// `d_m`, identical to [`PolygonalCurve::length`].
    pub fn total(&self) -> f64 {
        *self.cumulative.last().expect("table has at least two entries")
    }

    /// Index of the last vertex with `d_k <= s`. Runs of zero-length
    /// segments share a cumulative value, so this skips past them.
    pub fn locate(&self, s: f64) -> usize {
        self.cumulative.partition_point(|&d| d <= s).saturating_sub(1)
    }
}

/// Builds the cumulative arclength table of `curve`.
pub fn arclength_table(curve: &PolygonalCurve) -> ArclengthTable {
    ArclengthTable::new(curve)
}

/// Evaluates the arclength parameterization `P(s)`.
///
/// Arguments up to `Tolerances::DEFAULT_ABS` outside `[0, L]` are clamped.
/// `P(0)` and `P(L)` return `p_0` and `p_m` untouched.
pub fn point_at_arclength(curve: &PolygonalCurve, table: &ArclengthTable, s: f64) -> Result<Point> {
    let total = table.total();
    let abs = Tolerances::DEFAULT_ABS;
    if !(s >= -abs && s <= total + abs) {
        return Err(CurveError::OutOfRange { s, total });
    }
    let mut out = vec![0.0; curve.dim()];
    interpolate_into(curve, table, s.clamp(0.0, total), &mut out);
    Ok(Point::from_vec_unchecked(out))
}

/// Writes `P(s)` into `out`; `s` must already lie in `[0, L]`.
pub(crate) fn interpolate_into(curve: &PolygonalCurve, table: &ArclengthTable, s: f64, out: &mut [f64]) {
    let cumulative = table.cumulative();
    let m = cumulative.len() - 1;
    if s <= 0.0 {
        out.copy_from_slice(curve.first());
        return;
    }
    if s >= cumulative[m] {
        out.copy_from_slice(curve.last());
        return;
    }
    let k = table.locate(s);
    // s < d_m, so k < m and d_{k+1} > s >= d_k.
    let (d0, d1) = (cumulative[k], cumulative[k + 1]);
    let t = ((s - d0) / (d1 - d0)).clamp(0.0, 1.0);
    let a = curve.vertex(k);
    let b = curve.vertex(k + 1);
    for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
        *o = x + t * (y - x);
    }
}

/// Point-to-segment distance, used by the basic-vertex test.
pub(crate) fn distance_to_segment(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let mut len2 = 0.0;
    let mut dot = 0.0;
    for ((&pi, &ai), &bi) in p.iter().zip(a).zip(b) {
        let ab = bi - ai;
        len2 += ab * ab;
        dot += (pi - ai) * ab;
    }
    if len2 == 0.0 {
        return distance(p, a);
    }
    let t = (dot / len2).clamp(0.0, 1.0);
    p.iter()
        .zip(a)
        .zip(b)
        .map(|((&pi, &ai), &bi)| {
            let q = ai + t * (bi - ai);
            (pi - q) * (pi - q)
        })
        .sum::<f64>()
        .sqrt()
}
