mod common;

use proptest::prelude::*;
use respace::geometry::{
    arclength_table, basic_vertex_indices, is_equilateral, point_at_arclength, resample, respace, similar,
    PolygonalCurve, Tolerances,
};
use respace::oracle::oracle_point_at_arclength;

const ABS: f64 = Tolerances::DEFAULT_ABS;

/// Random curves in dims 1-4 with 2-50 segments, coordinates in [-10, 10],
/// and the occasional repeated vertex.
fn curves() -> impl Strategy<Value = PolygonalCurve> {
    (1usize..=4, 2usize..=50)
        .prop_flat_map(|(dim, m)| {
            (
                Just(dim),
                prop::collection::vec(-10.0f64..10.0, (m + 1) * dim),
                prop::collection::vec(any::<bool>(), m + 1),
            )
        })
        .prop_map(|(dim, mut flat, dup)| {
            // Repeat some vertices (about one in eight) to create zero-length segments.
            for k in 1..dup.len() {
                if dup[k] && dup[k - 1] && dup.get(k + 1).copied().unwrap_or(false) {
                    let (prev, here) = flat.split_at_mut(k * dim);
                    here[..dim].copy_from_slice(&prev[(k - 1) * dim..]);
                }
            }
            PolygonalCurve::from_flat(dim, flat).unwrap()
        })
}

fn schedule(total: f64, count: usize, raw: &[f64]) -> Vec<f64> {
    let mut s: Vec<f64> = raw.iter().take(count.saturating_sub(2)).map(|u| u * total).collect();
    s.sort_by(f64::total_cmp);
    s.insert(0, 0.0);
    s.push(total);
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn respacing_never_lengthens(c in curves()) {
        let f = respace(&c);
        prop_assert!(f.length() <= c.length() + ABS);
    }

    #[test]
    fn respacing_pins_endpoints_and_keeps_vertex_count(c in curves()) {
        let f = respace(&c);
        prop_assert_eq!(f.len(), c.len());
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        prop_assert_eq!(bits(f.first()), bits(c.first()));
        prop_assert_eq!(bits(f.last()), bits(c.last()));
    }

    #[test]
    fn oriented_resampling_never_lengthens(
        c in curves(),
        raw in prop::collection::vec(0.0f64..1.0, 0..60),
        count in 2usize..60,
    ) {
        let s = schedule(c.length(), count, &raw);
        let d = resample(&c, &s).unwrap();
        prop_assert!(d.length() <= c.length() + ABS);
        // Consecutive resampled points are no further apart than their arclength gap.
        for (k, (a, b)) in d.vertices().zip(d.vertices().skip(1)).enumerate() {
            let chord = respace::geometry::distance(a, b);
            prop_assert!(chord <= s[k + 1] - s[k] + 1e-12 * (1.0 + c.length()));
        }
    }

    #[test]
    fn parameterization_hits_basic_vertices(c in curves()) {
        let t = arclength_table(&c);
        let all = c.segment_lengths().all(|d| d > 0.0);
        let basic = basic_vertex_indices(&c, Tolerances::default());
        for k in 0..c.len() {
            if all || basic.contains(&k) {
                let p = point_at_arclength(&c, &t, t.cumulative()[k]).unwrap();
                prop_assert!(p.coords() == c.vertex(k), "vertex {}: {:?} vs {:?}", k, p.coords(), c.vertex(k));
            }
        }
    }

    #[test]
    fn respaced_vertices_sit_at_even_arclengths(c in curves()) {
        let f = respace(&c);
        let t = arclength_table(&c);
        let m = c.segments();
        for k in 1..m {
            let s = (k as f64 * t.total() / m as f64).min(t.total());
            let p = point_at_arclength(&c, &t, s).unwrap();
            prop_assert!(p.coords() == f.vertex(k));
        }
    }

    #[test]
    fn refining_a_curve_keeps_it_similar_and_the_same_length(
        c in curves(),
        cuts in prop::collection::vec((0usize..50, 0.0f64..1.0, any::<bool>()), 0..10),
    ) {
        // Insert points on existing segments and duplicate vertices.
        let dim = c.dim();
        let mut rows: Vec<Vec<f64>> = c.vertices().map(|v| v.to_vec()).collect();
        for (idx, t, dup) in cuts {
            let k = idx % (rows.len() - 1);
            let new = if dup {
                rows[k].clone()
            } else {
                (0..dim).map(|i| rows[k][i] + t * (rows[k + 1][i] - rows[k][i])).collect()
            };
            rows.insert(k + 1, new);
        }
        let d = PolygonalCurve::from_rows(&rows).unwrap();
        let tol = Tolerances::default();
        prop_assert!(similar(&c, &d, tol).unwrap());
        prop_assert!(similar(&d, &c, tol).unwrap());
        prop_assert!((c.length() - d.length()).abs() <= tol.bound(c.length()));
    }

    #[test]
    fn similar_curves_have_equal_length(c in curves()) {
        let f = respace(&c);
        let tol = Tolerances::default();
        if similar(&c, &f, tol).unwrap() {
            prop_assert!((c.length() - f.length()).abs() <= tol.bound(c.length()));
        }
        prop_assert!(similar(&c, &c, tol).unwrap());
    }

    #[test]
    fn equilateral_curves_are_fixed(seed in any::<u64>(), dim in 1usize..=4, m in 1usize..=50) {
        let mut rng = common::rng(seed);
        let c = common::equilateral_curve(&mut rng, dim, m, 1.0);
        prop_assert!(is_equilateral(&c, Tolerances::default()));
        let f = respace(&c);
        let moved = f.max_vertex_displacement(&c).unwrap();
        prop_assert!(moved <= ABS, "moved {}", moved);
    }
}

/// Three-way agreement: length preserved, similar to the respacing, and the
/// respacing equilateral.
fn three_way(c: &PolygonalCurve) -> [bool; 3] {
    let tol = Tolerances::default();
    let f = respace(c);
    [
        (c.length() - f.length()).abs() <= tol.bound(c.length()),
        similar(c, &f, tol).unwrap(),
        is_equilateral(&f, tol),
    ]
}

#[test]
fn respacing_equivalences_on_generic_curves() {
    let mut rng = common::rng(7);
    for i in 0..500 {
        let dim = 1 + i % 4;
        let c = common::uniform_curve(&mut rng, dim.max(2), 2 + i % 40, 10.0);
        assert_eq!(three_way(&c), [false; 3], "curve {i}");
    }
}

#[test]
fn respacing_equivalences_on_fixed_points() {
    let mut rng = common::rng(8);
    for i in 0..100 {
        let c = common::equilateral_curve(&mut rng, 1 + i % 4, 1 + i % 30, 0.7);
        assert_eq!(three_way(&c), [true; 3], "curve {i}");
    }
    // One respacing short of equilateral: C = {0, 1, 1} on a line.
    let c = PolygonalCurve::from_rows(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0]]).unwrap();
    assert_eq!(three_way(&c), [true; 3]);
}

#[test]
fn parameterization_matches_brute_force_walk() {
    let mut rng = common::rng(11);
    use rand::Rng;
    for _ in 0..10_000 {
        let dim = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=12);
        let c = common::uniform_curve(&mut rng, dim, m, 10.0);
        let total = c.length();
        let s = rng.gen_range(0.0..=total);
        let brute = oracle_point_at_arclength(&c, s, 10_000).unwrap();
        let exact = point_at_arclength(&c, &arclength_table(&c), s).unwrap();
        assert!(
            exact.distance(&brute) <= 1e-9 * total,
            "s={s} L={total}: {exact} vs {brute}"
        );
    }
}
