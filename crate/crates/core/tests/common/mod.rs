#![allow(dead_code)]

use halving_core::{cross, generate, orient, CrossResult, GeneratorSpec, Point, PointConfig, Shape};

pub fn config(v: &[(i64, i64)]) -> PointConfig {
    PointConfig::new(v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
}

pub fn square() -> PointConfig {
    config(&[(0, 0), (2, 0), (2, 2), (0, 2)])
}

pub fn star() -> PointConfig {
    config(&[(0, 0), (4, 0), (2, 4), (2, 1)])
}

pub fn single_edge() -> PointConfig {
    config(&[(0, 0), (1, 0)])
}

pub fn convex(n: usize) -> PointConfig {
    generate(&GeneratorSpec::new(Shape::Convex, n)).unwrap()
}

/// 100 seeded random configurations, n cycling through 4, 6, ..., 24.
pub fn random_corpus() -> Vec<PointConfig> {
    (0..100u64)
        .map(|seed| {
            let n = 4 + 2 * (seed as usize % 11);
            generate(&GeneratorSpec::random(n, seed, 100)).unwrap()
        })
        .collect()
}

/// 25 input pairs for the cross construction, each input with n <= 12.
pub fn cross_pairs() -> Vec<(PointConfig, PointConfig)> {
    let mut pairs = vec![
        (square(), square()),
        (square(), star()),
        (star(), square()),
        (single_edge(), single_edge()),
        (star(), convex(6)),
    ];
    for seed in 0..20u64 {
        let na = 2 + 2 * (seed as usize % 6);
        let nb = 4 + 2 * ((seed as usize / 2) % 5);
        let a = generate(&GeneratorSpec::random(na, 1000 + seed, 50)).unwrap();
        let b = generate(&GeneratorSpec::random(nb, 2000 + seed, 50)).unwrap();
        pairs.push((a, b));
    }
    pairs
}

pub fn cross_outputs() -> Vec<CrossResult> {
    cross_pairs().iter().map(|(a, b)| cross(a, b).unwrap()).collect()
}

/// West-minus-East count of `others` against the line through `a` and `b`,
/// using nothing but `orient`.
pub fn balance(points: &[Point], a: usize, b: usize, others: impl Iterator<Item = usize>) -> i64 {
    others
        .filter(|&v| v != a && v != b)
        .map(|v| orient(&points[a], &points[b], &points[v]) as i64)
        .sum()
}

/// The unordered two-set partition of `others` cut by the line through
/// `a` and `b`, normalized so the first vertex is on the `false` side.
pub fn cut(points: &[Point], a: usize, b: usize, others: &[usize]) -> Vec<bool> {
    let sides: Vec<bool> = others
        .iter()
        .map(|&v| orient(&points[a], &points[b], &points[v]) > 0)
        .collect();
    if sides.first() == Some(&true) {
        sides.iter().map(|s| !s).collect()
    } else {
        sides
    }
}
