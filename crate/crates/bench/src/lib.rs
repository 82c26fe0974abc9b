//! Shared inputs for the benchmarks.

use halving_core::{generate, GeneratorSpec, PointConfig, Shape};

/// A seeded random configuration of `n` points with coordinates in `[-1000, 1000]`.
pub fn random(n: usize, seed: u64) -> PointConfig {
    generate(&GeneratorSpec::random(n, seed, 1000)).expect("sampling succeeds at this bound")
}

pub fn convex(n: usize) -> PointConfig {
    generate(&GeneratorSpec::new(Shape::Convex, n)).expect("convex sizes are even")
}
