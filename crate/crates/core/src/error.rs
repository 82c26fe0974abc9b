use thiserror::Error;

use crate::exact::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a configuration needs at least 2 points, got {n}")]
    TooFewPoints { n: usize },
    #[error("point count {n} is odd; halving lines need an even number of points")]
    OddSize { n: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("points {} {} {} are collinear", .indices[0], .indices[1], .indices[2])]
    CollinearTriple { indices: [usize; 3] },
    #[error("a directed line needs two distinct points")]
    DegenerateLine,
    #[error("affine map is singular (zero determinant)")]
    SingularTransform,
    #[error("vertex {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("direction (1, {t}) gives vertices {first} and {second} the same projection")]
    ProjectionTie { t: Scalar, first: usize, second: usize },
    #[error("epsilon must satisfy 0 < epsilon <= 1, got {0}")]
    InvalidEpsilon(Scalar),
    #[error("all points project to one value on the axis")]
    DegenerateExtent,
    #[error("superimposed blocks are not in general position after {perturbations} translations")]
    GeneralPositionClash { perturbations: usize },
    #[error("cross construction did not verify within {attempts} shrink iterations")]
    RetryLimitExceeded { attempts: u32 },
    #[error("invalid generator spec: {0}")]
    InvalidGeneratorSpec(String),
    #[error("rejection sampling failed {rejections} consecutive times after placing {placed} points")]
    ExhaustedSampling { placed: usize, rejections: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("selection splits component {component}")]
    NotAComponentUnion { component: usize },
}
