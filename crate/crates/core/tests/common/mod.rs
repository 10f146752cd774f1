#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use respace::geometry::PolygonalCurve;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Curve with `m + 1` vertices drawn uniformly from `[-half, half]^dim`.
pub fn uniform_curve(rng: &mut ChaCha8Rng, dim: usize, m: usize, half: f64) -> PolygonalCurve {
    let flat: Vec<f64> = (0..(m + 1) * dim).map(|_| rng.gen_range(-half..half)).collect();
    PolygonalCurve::from_flat(dim, flat).unwrap()
}

/// Random unit vector in `dim` dimensions.
pub fn unit_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Equilateral curve built from `m` steps of length `step` in random directions.
pub fn equilateral_curve(rng: &mut ChaCha8Rng, dim: usize, m: usize, step: f64) -> PolygonalCurve {
    let mut p = vec![0.0; dim];
    let mut flat = p.clone();
    for _ in 0..m {
        let u = unit_vector(rng, dim);
        for (c, d) in p.iter_mut().zip(&u) {
            *c += step * d;
        }
        flat.extend_from_slice(&p);
    }
    PolygonalCurve::from_flat(dim, flat).unwrap()
}

/// Equilateral curve whose steps are axis-aligned with an exactly
/// representable length, so it is equilateral without rounding.
pub fn exact_equilateral_curve(rng: &mut ChaCha8Rng, dim: usize, m: usize) -> PolygonalCurve {
    let mut p = vec![0.0; dim];
    let mut flat = p.clone();
    for _ in 0..m {
        let axis = rng.gen_range(0..dim);
        p[axis] += if rng.gen_bool(0.5) { 0.5 } else { -0.5 };
        flat.extend_from_slice(&p);
    }
    PolygonalCurve::from_flat(dim, flat).unwrap()
}
