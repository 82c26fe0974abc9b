//! Segmentarizing, the cross construction and configuration generators.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::PointConfig;
use crate::error::Error;
use crate::exact::{affine_apply, side_of, AffineMap, DirectedLine, Point, Scalar, Side};
use crate::halving::{halving_edges, Geograph};
use crate::orientation::{choose_direction, direction_candidates, Direction};

/// Squeeze `config` into a thin segment along `axis`.
///
/// The first output coordinate is the projection onto `axis`, rescaled to
/// span `[-1, 1]`; the second is the projection onto the axis' North,
/// centered, scaled by the same factor and then by `epsilon`. The map is
/// affine with positive determinant, so halving pairs are unchanged.
pub fn segmentarize(config: &PointConfig, axis: &Direction, epsilon: &Scalar) -> Result<PointConfig, Error> {
    if epsilon.signum() <= 0 || epsilon > &Scalar::one() {
        return Err(Error::InvalidEpsilon(epsilon.clone()));
    }
    let east: Vec<Scalar> = config.points().iter().map(|p| axis.east(p)).collect();
    let north: Vec<Scalar> = config.points().iter().map(|p| axis.north(p)).collect();
    let (lo, hi) = min_max(&east);
    if lo == hi {
        return Err(Error::DegenerateExtent);
    }
    let (nlo, nhi) = min_max(&north);
    let two = Scalar::from_int(2);
    let scale = &two / (hi - lo);
    let squeeze = epsilon * &scale;
    let mid = (nlo + nhi) / &two;
    let t = axis.t();
    let map = AffineMap {
        m: [[scale.clone(), &scale * t], [-(&squeeze * t), squeeze.clone()]],
        t: [-(&scale * lo) - Scalar::one(), -(&squeeze * &mid)],
    };
    affine_apply(&map, config)
}

fn min_max(values: &[Scalar]) -> (&Scalar, &Scalar) {
    let lo = values.iter().min().expect("nonempty");
    let hi = values.iter().max().expect("nonempty");
    (lo, hi)
}

/// Stretch the first coordinate so the two middle values land on -1 and +1.
fn center_median_gap(block: &PointConfig) -> Result<PointConfig, Error> {
    let mut xs: Vec<&Scalar> = block.points().iter().map(|p| &p.x).collect();
    xs.sort();
    let half = xs.len() / 2;
    let (lo, hi) = (xs[half - 1], xs[half]);
    let width = hi - lo;
    let two = Scalar::from_int(2);
    let map = AffineMap {
        m: [[&two / &width, Scalar::zero()], [Scalar::zero(), Scalar::one()]],
        t: [-((lo + hi) / &width), Scalar::zero()],
    };
    affine_apply(&map, block)
}

/// Starting squeeze factor for the cross construction.
pub const CROSS_INITIAL_EPSILON: (i64, i64) = (1, 4);
/// Shrink iterations before giving up.
pub const CROSS_MAX_ATTEMPTS: u32 = 64;
/// Translations of the second block tried per iteration when superposition
/// lands three points on a line.
pub const CROSS_PERTURBATIONS: usize = 16;

/// Output of [`cross`].
#[derive(Debug, Clone)]
pub struct CrossResult {
    pub config: PointConfig,
    /// Recomputed from scratch on `config`.
    pub geograph: Geograph,
    /// Vertex ranges of the first and second input.
    pub blocks: [Range<usize>; 2],
    /// Number of epsilon values tried, starting at 1.
    pub attempts: u32,
    pub epsilon: Scalar,
}

/// What went wrong when a superposition fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossViolation {
    /// Recomputed edges differ from the relabeled disjoint union.
    EdgeMismatch {
        missing: Vec<(usize, usize)>,
        extra: Vec<(usize, usize)>,
    },
    /// A halving line of one block leaves the other unbalanced.
    Unbalanced { edge: (usize, usize), balance: i64 },
    /// Two halving lines of one block cut the other block differently.
    SplitPartition {
        first: (usize, usize),
        second: (usize, usize),
    },
}

/// Check a two-block superposition: the first `split` points are block A,
/// the rest block B, and the inputs had edge sets `a_edges`, `b_edges`
/// (indices local to each block).
pub fn verify_cross(
    config: &PointConfig,
    split: usize,
    a_edges: &[(usize, usize)],
    b_edges: &[(usize, usize)],
) -> Result<Geograph, CrossViolation> {
    let g = halving_edges(config);
    let mut expected: Vec<(usize, usize)> = a_edges
        .iter()
        .copied()
        .chain(b_edges.iter().map(|&(i, j)| (i + split, j + split)))
        .collect();
    expected.sort_unstable();
    if g.edges() != expected.as_slice() {
        return Err(CrossViolation::EdgeMismatch {
            missing: expected.iter().filter(|e| !g.has_edge(e.0, e.1)).copied().collect(),
            extra: g
                .edges()
                .iter()
                .filter(|e| expected.binary_search(e).is_err())
                .copied()
                .collect(),
        });
    }
    let n = config.len();
    check_block_cuts(config, a_edges, split..n)?;
    let b_global: Vec<(usize, usize)> = b_edges.iter().map(|&(i, j)| (i + split, j + split)).collect();
    check_block_cuts(config, &b_global, 0..split)?;
    Ok(g)
}

/// Every line of `edges` must halve `other`, and all of them must induce the
/// same partition of it.
fn check_block_cuts(config: &PointConfig, edges: &[(usize, usize)], other: Range<usize>) -> Result<(), CrossViolation> {
    let pts = config.points();
    let mut reference: Option<((usize, usize), Vec<bool>)> = None;
    for &(i, j) in edges {
        let line = DirectedLine::new(pts[i].clone(), pts[j].clone()).expect("distinct points");
        let mut sides: Vec<bool> = Vec::with_capacity(other.len());
        let mut balance = 0i64;
        for p in &pts[other.clone()] {
            match side_of(&line, p) {
                Side::West => {
                    balance += 1;
                    sides.push(true);
                }
                Side::East => {
                    balance -= 1;
                    sides.push(false);
                }
                Side::On => sides.push(false),
            }
        }
        if balance != 0 {
            return Err(CrossViolation::Unbalanced { edge: (i, j), balance });
        }
        if sides.first() == Some(&true) {
            sides.iter_mut().for_each(|s| *s = !*s);
        }
        match &reference {
            None => reference = Some(((i, j), sides)),
            Some((first, cut)) if *cut != sides => {
                return Err(CrossViolation::SplitPartition {
                    first: *first,
                    second: (i, j),
                })
            }
            Some(_) => {}
        }
    }
    Ok(())
}

/// Superimpose `a` and `b` so that the underlying graph of the union is the
/// disjoint union of theirs.
///
/// `a` is segmentarized along its generic direction and laid along the
/// x-axis with its median gap on `[-1, 1]`; `b` is treated the same way and
/// turned a quarter turn onto the y-axis. The union is verified by
/// recomputing its halving edges; on failure epsilon is halved and the
/// construction retried.
pub fn cross(a: &PointConfig, b: &PointConfig) -> Result<CrossResult, Error> {
    let ga = halving_edges(a);
    let gb = halving_edges(b);
    let da = choose_direction(&ga);
    let db = choose_direction(&gb);
    let quarter_turn = AffineMap::linear([[Scalar::zero(), -Scalar::one()], [Scalar::one(), Scalar::zero()]]);
    let split = a.len();
    let mut epsilon = Scalar::ratio(CROSS_INITIAL_EPSILON.0, CROSS_INITIAL_EPSILON.1);

    for attempt in 1..=CROSS_MAX_ATTEMPTS {
        let block_a = center_median_gap(&segmentarize(a, &da, &epsilon)?)?;
        let block_b = affine_apply(&quarter_turn, &center_median_gap(&segmentarize(b, &db, &epsilon)?)?)?;

        let mut superposed = None;
        for shift in direction_candidates().take(CROSS_PERTURBATIONS) {
            let nudge = AffineMap::translation(&shift * &epsilon, &shift / Scalar::from_int(8));
            let points: Vec<Point> = block_a
                .points()
                .iter()
                .cloned()
                .chain(block_b.points().iter().map(|p| nudge.apply(p)))
                .collect();
            match PointConfig::new(points) {
                Ok(c) => {
                    superposed = Some(c);
                    break;
                }
                Err(Error::DuplicatePoints { .. } | Error::CollinearTriple { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        let config = superposed.ok_or(Error::GeneralPositionClash {
            perturbations: CROSS_PERTURBATIONS,
        })?;

        if let Ok(geograph) = verify_cross(&config, split, ga.edges(), gb.edges()) {
            return Ok(CrossResult {
                config,
                geograph,
                blocks: [0..split, split..split + b.len()],
                attempts: attempt,
                epsilon,
            });
        }
        epsilon = epsilon / Scalar::from_int(2);
    }
    Err(Error::RetryLimitExceeded {
        attempts: CROSS_MAX_ATTEMPTS,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Strictly convex position on the parabola `y = x^2`.
    Convex,
    /// The four-point triangle with one interior point.
    Star,
    /// Seeded rejection sampling on an integer grid.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub shape: Shape,
    pub n: usize,
    pub seed: u64,
    /// Random points are drawn from `[-bound, bound]^2`.
    pub bound: i64,
}

impl GeneratorSpec {
    pub fn new(shape: Shape, n: usize) -> Self {
        GeneratorSpec {
            shape,
            n,
            seed: 0,
            bound: DEFAULT_BOUND,
        }
    }

    pub fn random(n: usize, seed: u64, bound: i64) -> Self {
        GeneratorSpec {
            shape: Shape::Random,
            n,
            seed,
            bound,
        }
    }
}

pub const DEFAULT_BOUND: i64 = 1000;
/// Consecutive rejections tolerated by the random generator.
pub const MAX_REJECTIONS: usize = 10_000;
/// Largest accepted grid bound; keeps sampled cross products well inside `i128`.
pub const MAX_BOUND: i64 = 1 << 40;

pub fn generate(spec: &GeneratorSpec) -> Result<PointConfig, Error> {
    let invalid = |msg: String| Err(Error::InvalidGeneratorSpec(msg));
    if !spec.n.is_multiple_of(2) || spec.n < 2 {
        return invalid(format!("n = {} must be even and at least 2", spec.n));
    }
    match spec.shape {
        Shape::Convex => {
            if spec.n < 4 {
                return invalid("convex configurations need n >= 4".into());
            }
            // Odd abscissas centered on 0: x = -(n-1), ..., n-1.
            let n = spec.n as i64;
            let points = (0..n)
                .map(|i| {
                    let x = 2 * i - (n - 1);
                    Point::from_ints(x, x * x)
                })
                .collect();
            PointConfig::new(points)
        }
        Shape::Star => {
            if spec.n != 4 {
                return invalid("the star shape has exactly 4 points".into());
            }
            PointConfig::new(vec![
                Point::from_ints(0, 0),
                Point::from_ints(4, 0),
                Point::from_ints(2, 4),
                Point::from_ints(2, 1),
            ])
        }
        Shape::Random => {
            if spec.bound <= 0 || spec.bound > MAX_BOUND {
                return invalid(format!("bound {} must lie in 1..={MAX_BOUND}", spec.bound));
            }
            random_points(spec)
        }
    }
}

/// ChaCha8 seeded with `seed`; each candidate is `x` then `y`, each uniform
/// on `-bound..=bound`. A candidate is rejected if it repeats a point or is
/// collinear with two accepted points.
fn random_points(spec: &GeneratorSpec) -> Result<PointConfig, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut accepted: Vec<[i128; 2]> = Vec::with_capacity(spec.n);
    let mut rejections = 0;
    while accepted.len() < spec.n {
        let candidate = [
            rng.random_range(-spec.bound..=spec.bound) as i128,
            rng.random_range(-spec.bound..=spec.bound) as i128,
        ];
        if fits(&accepted, &candidate) {
            accepted.push(candidate);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= MAX_REJECTIONS {
                return Err(Error::ExhaustedSampling {
                    placed: accepted.len(),
                    rejections,
                });
            }
        }
    }
    PointConfig::new(
        accepted
            .iter()
            .map(|&[x, y]| Point::from_ints(x as i64, y as i64))
            .collect(),
    )
}

fn fits(accepted: &[[i128; 2]], c: &[i128; 2]) -> bool {
    if accepted.contains(c) {
        return false;
    }
    for (i, p) in accepted.iter().enumerate() {
        for q in &accepted[i + 1..] {
            if (q[0] - p[0]) * (c[1] - p[1]) == (q[1] - p[1]) * (c[0] - p[0]) {
                return false;
            }
        }
    }
    true
}
