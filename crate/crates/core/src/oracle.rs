//! Brute-force reference implementations and seeded curve generators.
//!
//! The reference routines deliberately avoid the cumulative-table machinery
//! in [`crate::geometry`] so they can be used to check it.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{CurveError, Result};
use crate::geometry::{Point, PolygonalCurve, Tolerances};

/// Walks the curve in at least `samples` uniform steps of the vertex-index
/// parameter `u in [0, m]`, summing chord lengths until `s` is reached, then
/// interpolates inside the last micro-step.
///
/// The step count is rounded up to a multiple of `m` so every vertex lies on
/// a step boundary and no chord cuts a corner.
pub fn oracle_point_at_arclength(curve: &PolygonalCurve, s: f64, samples: usize) -> Result<Point> {
    let total = curve.length();
    if !(s >= 0.0 && s <= total) {
        return Err(CurveError::OutOfRange { s, total });
    }
    let dim = curve.dim();
    let m = curve.segments();
    let per_segment = samples.max(1).div_ceil(m);
    let at = |i: usize, out: &mut Vec<f64>| {
        let k = (i / per_segment).min(m - 1);
        let t = (i - k * per_segment) as f64 / per_segment as f64;
        out.clear();
        out.extend(
            curve
                .vertex(k)
                .iter()
                .zip(curve.vertex(k + 1))
                .map(|(a, b)| (1.0 - t) * a + t * b),
        );
    };
    let mut prev = curve.first().to_vec();
    let mut next = Vec::with_capacity(dim);
    let mut walked = 0.0;
    for i in 1..=per_segment * m {
        at(i, &mut next);
        let chord: f64 = prev
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        if chord > 0.0 && walked + chord >= s {
            let t = (s - walked) / chord;
            let p = prev.iter().zip(&next).map(|(a, b)| a + t * (b - a)).collect();
            return Ok(Point::from_vec_unchecked(p));
        }
        walked += chord;
        std::mem::swap(&mut prev, &mut next);
    }
    Ok(curve.point(m))
}

/// Pairwise equilateral test: `max_k d_k - min_k d_k <= tol.bound(L)`.
pub fn oracle_is_equilateral(curve: &PolygonalCurve, tol: Tolerances) -> bool {
    let spacings: Vec<f64> = curve.segment_lengths().collect();
    let total: f64 = spacings.iter().sum();
    let max = spacings.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = spacings.iter().copied().fold(f64::INFINITY, f64::min);
    max - min <= tol.bound(total)
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("bad generator spec: {0}")]
pub struct BadSpec(pub String);

/// Shape families produced by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorKind {
    /// Open random walk from the origin with increments uniform in
    /// `[-step, step]` per coordinate.
    RandomWalk { segments: usize, step: f64 },
    /// Closed regular polygon with `sides` edges of length `side`.
    RegularPolygon { sides: usize, side: f64 },
    /// Closed triangle `{p0, p1, p2, p0}` with legs of length `leg` meeting at
    /// `p0 = 0` with angle `apex_angle`.
    IsoscelesTriangle { apex_angle: f64, leg: f64 },
    /// Closed parallelogram `{p0, p1, p2, p3, p0}` with `|p0 p1| = side_a`,
    /// `|p1 p2| = side_b` and interior angle `angle` at `p0`.
    Parallelogram { side_a: f64, side_b: f64, angle: f64 },
    /// `{(0,0), ((n+1)/2, 0), (1, 0)}`, of length `n`; equilateral after
    /// exactly `n` respacings.
    Collinear { steps: usize },
    /// Closed blob of `points` samples around the unit circle with
    /// low-frequency radial harmonics, radial noise of amplitude `noise`,
    /// and jittered sample angles.
    NoisyClosedBlob { points: usize, noise: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub seed: u64,
    pub dim: usize,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind) -> Self {
        Self { kind, seed: 0, dim: 2 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }
}

fn positive(name: &str, v: f64) -> Result<(), BadSpec> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(BadSpec(format!("{name} must be positive and finite, got {v}")))
    }
}

/// Deterministic curve for `spec`; the seed fully determines the output.
pub fn generate(spec: &GeneratorSpec) -> Result<PolygonalCurve, BadSpec> {
    use GeneratorKind::*;
    let dim = spec.dim;
    if dim == 0 {
        return Err(BadSpec("dim must be at least 1".into()));
    }
    let planar = !matches!(spec.kind, RandomWalk { .. } | Collinear { .. });
    if planar && dim < 2 {
        return Err(BadSpec("planar shapes need dim >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let rows: Vec<[f64; 2]> = match spec.kind {
        RandomWalk { segments, step } => {
            positive("step", step)?;
            if segments == 0 {
                return Err(BadSpec("segments must be at least 1".into()));
            }
            let mut coords = vec![0.0; dim];
            let mut flat = coords.clone();
            for _ in 0..segments {
                for c in coords.iter_mut() {
                    *c += rng.gen_range(-step..=step);
                }
                flat.extend_from_slice(&coords);
            }
            return PolygonalCurve::from_flat(dim, flat).map_err(|e| BadSpec(e.to_string()));
        }
        RegularPolygon { sides, side } => {
            positive("side", side)?;
            if sides < 3 {
                return Err(BadSpec(format!("a polygon needs at least 3 sides, got {sides}")));
            }
            // Walk the edges so every side has the requested length up to rounding.
            let mut p = [0.0, 0.0];
            let mut rows = vec![p];
            for j in 0..sides - 1 {
                let heading = 2.0 * PI * j as f64 / sides as f64;
                p = [p[0] + side * heading.cos(), p[1] + side * heading.sin()];
                rows.push(p);
            }
            rows.push([0.0, 0.0]);
            rows
        }
        IsoscelesTriangle { apex_angle, leg } => {
            positive("leg", leg)?;
            if !(apex_angle > 0.0 && apex_angle < PI) {
                return Err(BadSpec(format!("apex angle must lie in (0, pi), got {apex_angle}")));
            }
            let (s, c) = (apex_angle / 2.0).sin_cos();
            vec![[0.0, 0.0], [leg * c, -leg * s], [leg * c, leg * s], [0.0, 0.0]]
        }
        Parallelogram { side_a, side_b, angle } => {
            positive("side_a", side_a)?;
            positive("side_b", side_b)?;
            if !(angle > 0.0 && angle < PI) {
                return Err(BadSpec(format!("angle must lie in (0, pi), got {angle}")));
            }
            let (s, c) = angle.sin_cos();
            let b = [side_b * c, side_b * s];
            vec![[0.0, 0.0], [side_a, 0.0], [side_a + b[0], b[1]], b, [0.0, 0.0]]
        }
        Collinear { steps } => {
            if steps == 0 {
                return Err(BadSpec("collinear construction needs steps >= 1".into()));
            }
            let x = (steps as f64 + 1.0) / 2.0;
            vec![[0.0, 0.0], [x, 0.0], [1.0, 0.0]]
        }
        NoisyClosedBlob { points, noise } => {
            if points < 3 {
                return Err(BadSpec(format!("a blob needs at least 3 points, got {points}")));
            }
            if !(noise >= 0.0 && noise.is_finite()) {
                return Err(BadSpec(format!("noise must be non-negative, got {noise}")));
            }
            let harmonics: Vec<(f64, f64, f64)> = (2..=4)
                .map(|h| (h as f64, rng.gen_range(0.0..0.08), rng.gen_range(0.0..2.0 * PI)))
                .collect();
            let n = points as f64;
            let mut rows: Vec<[f64; 2]> = (0..points)
                .map(|j| {
                    let jitter = if j == 0 { 0.0 } else { 0.45 * rng.gen_range(-1.0..1.0) };
                    let theta = 2.0 * PI * (j as f64 + jitter) / n;
                    let wobble: f64 = harmonics
                        .iter()
                        .map(|&(h, a, phase)| a * (h * theta + phase).cos())
                        .sum();
                    let r = 1.0 + wobble + noise * rng.gen_range(-1.0..1.0);
                    [r * theta.cos(), r * theta.sin()]
                })
                .collect();
            rows.push(rows[0]);
            rows
        }
    };
    let flat: Vec<f64> = rows
        .iter()
        .flat_map(|r| {
            let mut v = vec![0.0; dim];
            let n = dim.min(2);
            v[..n].copy_from_slice(&r[..n]);
            v
        })
        .collect();
    PolygonalCurve::from_flat(dim, flat).map_err(|e| BadSpec(e.to_string()))
}
