//! Repeated respacing `C^n = f^n(C)` with convergence detection and
//! per-step spacing statistics.

use std::fmt;

use crate::error::{CurveError, Result};
use crate::geometry::{respace, PolygonalCurve};

/// Statistics of the consecutive distances `||p_k - p_{k-1}||`, `k = 1..=m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacingStats {
    /// Population standard deviation (divides by `m`).
    pub sigma: f64,
    pub max: f64,
    pub min: f64,
    pub mean: f64,
}

impl SpacingStats {
    pub fn of(curve: &PolygonalCurve) -> Self {
        let spacings: Vec<f64> = curve.segment_lengths().collect();
        let m = spacings.len() as f64;
        let (min, max) = spacings
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| (lo.min(d), hi.max(d)));
        // Summation can land a hair outside [min, max] when all spacings agree.
        let mean = (spacings.iter().sum::<f64>() / m).clamp(min, max);
        let var = spacings.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / m;
        Self {
            sigma: var.sqrt(),
            max,
            min,
            mean,
        }
    }

    pub fn spread(&self) -> f64 {
        self.max - self.min
    }
}

/// Statistics of the spacings of `curve`.
pub fn spacing_stats(curve: &PolygonalCurve) -> SpacingStats {
    SpacingStats::of(curve)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    pub max_iters: usize,
    /// Stop once no vertex moves by this much or more in one step.
    pub tol_displacement: f64,
    /// Stop once the spacing standard deviation drops below this. Zero disables.
    pub tol_sigma: f64,
    /// Keep a snapshot of every iterate in the trace.
    pub record_curves: bool,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            max_iters: 1000,
            tol_displacement: 1e-12,
            tol_sigma: 0.0,
            record_curves: false,
        }
    }
}

impl IterationConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.max_iters >= 1
            && self.tol_displacement >= 0.0
            && self.tol_sigma >= 0.0
            && !self.tol_displacement.is_nan()
            && !self.tol_sigma.is_nan();
        if ok {
            Ok(())
        } else {
            Err(CurveError::BadTolerances {
                rel: self.tol_sigma,
                abs: self.tol_displacement,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StopReason {
    /// A respacing step left every vertex exactly where it was.
    FixedPoint,
    Displacement,
    Sigma,
    MaxIters,
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StopReason::FixedPoint => "fixed-point",
            StopReason::Displacement => "displacement",
            StopReason::Sigma => "sigma",
            StopReason::MaxIters => "max-iters",
        })
    }
}

/// One row of an [`IterationTrace`].
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub n: usize,
    pub length: f64,
    pub stats: SpacingStats,
    /// `max_k ||p_k^n - p_k^{n-1}||`; absent for the initial curve.
    pub displacement: Option<f64>,
    pub curve: Option<PolygonalCurve>,
}

impl IterationRecord {
    fn new(n: usize, curve: &PolygonalCurve, displacement: Option<f64>, keep: bool) -> Self {
        Self {
            n,
            length: curve.length(),
            stats: SpacingStats::of(curve),
            displacement,
            curve: keep.then(|| curve.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub records: Vec<IterationRecord>,
    pub stop_reason: StopReason,
}

impl IterationTrace {
    /// Index `n` of the final iterate.
    pub fn iterations(&self) -> usize {
        self.records.last().map_or(0, |r| r.n)
    }

    pub fn last(&self) -> &IterationRecord {
        self.records.last().expect("trace always holds the initial record")
    }

    /// `sigma^n / sigma^(n-1)` for each record after the first. `None` when
    /// the previous sigma is zero.
    pub fn sigma_ratios(&self) -> Vec<Option<f64>> {
        std::iter::once(None)
            .chain(self.records.windows(2).map(|w| {
                let prev = w[0].stats.sigma;
                (prev > 0.0).then(|| w[1].stats.sigma / prev)
            }))
            .collect()
    }
}

/// Applies [`respace`] until a stopping criterion holds.
///
/// The trace starts with the record for `n = 0`. A step that moves no
/// vertex at all is not recorded; the iteration stops on the curve it was
/// applied to with [`StopReason::FixedPoint`].
pub fn iterate(curve: &PolygonalCurve, cfg: &IterationConfig) -> Result<(PolygonalCurve, IterationTrace)> {
    cfg.validate()?;
    let mut records = vec![IterationRecord::new(0, curve, None, cfg.record_curves)];
    let mut current = curve.clone();
    for n in 1..=cfg.max_iters {
        let next = respace(&current);
        let displacement = next.max_vertex_displacement(&current)?;
        if displacement == 0.0 {
            return Ok((current, IterationTrace { records, stop_reason: StopReason::FixedPoint }));
        }
        let record = IterationRecord::new(n, &next, Some(displacement), cfg.record_curves);
        let sigma = record.stats.sigma;
        records.push(record);
        current = next;
        let reason = if displacement < cfg.tol_displacement {
            Some(StopReason::Displacement)
        } else if cfg.tol_sigma > 0.0 && sigma < cfg.tol_sigma {
            Some(StopReason::Sigma)
        } else {
            None
        };
        if let Some(stop_reason) = reason {
            return Ok((current, IterationTrace { records, stop_reason }));
        }
    }
    Ok((current, IterationTrace { records, stop_reason: StopReason::MaxIters }))
}

/// Records for exactly `n = 0..=iterations`, regardless of convergence.
/// Once a fixed point is reached the remaining rows repeat it with zero
/// displacement.
pub fn fixed_schedule(curve: &PolygonalCurve, iterations: usize) -> Vec<IterationRecord> {
    let mut records = Vec::with_capacity(iterations + 1);
    records.push(IterationRecord::new(0, curve, None, false));
    let mut current = curve.clone();
    for n in 1..=iterations {
        let next = respace(&current);
        let displacement = next
            .max_vertex_displacement(&current)
            .expect("respace preserves vertex count and dimension");
        records.push(IterationRecord::new(n, &next, Some(displacement), false));
        current = next;
    }
    records
}

/// Interior angle in radians at vertex `k`, in `[0, pi]`.
///
/// For `k = 0` on a closed curve the neighbours are `p_{m-1}` and `p_1`.
pub fn vertex_angle(curve: &PolygonalCurve, k: usize) -> Result<f64> {
    let m = curve.segments();
    let (prev, next) = if k == 0 {
        if !curve.is_closed() || m < 2 {
            return Err(CurveError::DegenerateAngle {
                index: k,
                reason: "the start vertex has an angle only on a closed curve",
            });
        }
        (m - 1, 1)
    } else if k < m {
        (k - 1, k + 1)
    } else {
        return Err(CurveError::DegenerateAngle {
            index: k,
            reason: "no following vertex",
        });
    };
    let here = curve.vertex(k);
    let u: Vec<f64> = curve.vertex(prev).iter().zip(here).map(|(a, b)| a - b).collect();
    let v: Vec<f64> = curve.vertex(next).iter().zip(here).map(|(a, b)| a - b).collect();
    let dot: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
    let uu: f64 = u.iter().map(|a| a * a).sum();
    let vv: f64 = v.iter().map(|a| a * a).sum();
    if uu == 0.0 || vv == 0.0 {
        return Err(CurveError::DegenerateAngle {
            index: k,
            reason: "adjacent segment has zero length",
        });
    }
    // |u x v|^2 = |u|^2 |v|^2 - (u.v)^2 holds in any dimension (Lagrange).
    let cross = (uu * vv - dot * dot).max(0.0).sqrt();
    Ok(cross.atan2(dot))
}
