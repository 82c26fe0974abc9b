//! Integer coordinates for the hot predicates.
//!
//! A configuration scaled by the lcm of its denominators is an integer
//! configuration with exactly the same orientation signs. When every scaled
//! coordinate stays below 2^61 in magnitude, cross products fit in `i128`;
//! otherwise the same code runs over `BigInt`.

use std::cmp::Ordering;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Point;

pub(crate) trait Coord: Clone + Ord + Zero + Sub<Output = Self> + Mul<Output = Self> {}

impl Coord for i128 {}
impl Coord for BigInt {}

pub(crate) enum IntPoints {
    Small(Vec<[i128; 2]>),
    Big(Vec<[BigInt; 2]>),
}

const SMALL_LIMIT: i64 = 1 << 61;

pub(crate) fn integerize(points: &[Point]) -> IntPoints {
    let mut lcm = BigInt::one();
    for p in points {
        lcm = lcm.lcm(p.x.denom());
        lcm = lcm.lcm(p.y.denom());
    }
    let scale = |s: &crate::exact::Scalar| s.numer() * (&lcm / s.denom());
    let big: Vec<[BigInt; 2]> = points.iter().map(|p| [scale(&p.x), scale(&p.y)]).collect();
    let limit = BigInt::from(SMALL_LIMIT);
    if big.iter().flatten().all(|c| c.abs() < limit) {
        IntPoints::Small(
            big.iter()
                .map(|[x, y]| [x.to_i128().unwrap(), y.to_i128().unwrap()])
                .collect(),
        )
    } else {
        IntPoints::Big(big)
    }
}

#[inline]
pub(crate) fn cross<T: Coord>(a: &[T; 2], b: &[T; 2]) -> T {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

#[inline]
pub(crate) fn diff<T: Coord>(a: &[T; 2], b: &[T; 2]) -> [T; 2] {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
}

/// A direction vector folded into the half-open upper half-plane
/// (angle in `[0, pi)`), remembering whether it was negated.
pub(crate) struct Folded<T> {
    pub vec: [T; 2],
    pub flipped: bool,
    pub index: usize,
}

pub(crate) fn fold<T: Coord>(v: [T; 2], index: usize) -> Folded<T> {
    let zero = T::zero();
    let lower = v[1] < zero || (v[1] == zero && v[0] < zero);
    if lower {
        Folded {
            vec: [zero.clone() - v[0].clone(), zero - v[1].clone()],
            flipped: true,
            index,
        }
    } else {
        Folded {
            vec: v,
            flipped: false,
            index,
        }
    }
}

/// Angular order of folded vectors. Equal means parallel.
pub(crate) fn angle_cmp<T: Coord>(a: &[T; 2], b: &[T; 2]) -> Ordering {
    T::zero().cmp(&cross(a, b))
}

/// Vectors from `pivot` to every other point, folded and sorted by angle.
pub(crate) fn sorted_fan<T: Coord>(points: &[[T; 2]], pivot: usize) -> Vec<Folded<T>> {
    let mut fan: Vec<Folded<T>> = points
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != pivot)
        .map(|(j, q)| fold(diff(q, &points[pivot]), j))
        .collect();
    fan.sort_by(|a, b| angle_cmp(&a.vec, &b.vec));
    fan
}
