//! Exact rational scalars, points, directed lines and the sign predicates
//! everything else is built on.
//!
//! No floating point is used anywhere in this module. A [`Scalar`] is always
//! kept in lowest terms with a positive denominator, so structural equality
//! is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::PointConfig;
use crate::error::Error;

/// An arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(value: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numerator / denominator`, reduced. Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        Scalar(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn ratio(numerator: i64, denominator: i64) -> Self {
        Scalar::new(numerator, denominator)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always strictly positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Scalar {
        Scalar(self.0.recip())
    }

    /// Lossy conversion for rendering only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Scalar(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a string is not an integer or an `a/b` fraction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{0}`")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let parse_int = |part: &str| -> Result<BigInt, ParseScalarError> {
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            part.parse::<BigInt>().map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(Scalar(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(Scalar(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

/// A point of the rational plane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Scalar; 2]", from = "[Scalar; 2]")]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }
}

impl From<Point> for [Scalar; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<[Scalar; 2]> for Point {
    fn from([x, y]: [Scalar; 2]) -> Self {
        Point { x, y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
///
/// `+1` when `r` is strictly left of `p -> q`, `-1` when strictly right and
/// `0` when the three points are collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i32 {
    let lhs = (&q.x - &p.x) * (&r.y - &p.y);
    let rhs = (&q.y - &p.y) * (&r.x - &p.x);
    match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Which side of a [`DirectedLine`] a point lies on. The line's travel
/// direction is North, so West is to its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    West,
    East,
    On,
}

/// A line through `base` and `tip`, directed from `base` to `tip`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedLine {
    base: Point,
    tip: Point,
}

impl DirectedLine {
    pub fn new(base: Point, tip: Point) -> Result<Self, Error> {
        if base == tip {
            return Err(Error::DegenerateLine);
        }
        Ok(DirectedLine { base, tip })
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn tip(&self) -> &Point {
        &self.tip
    }

    pub fn reversed(&self) -> DirectedLine {
        DirectedLine {
            base: self.tip.clone(),
            tip: self.base.clone(),
        }
    }
}

pub fn side_of(line: &DirectedLine, p: &Point) -> Side {
    match orient(&line.base, &line.tip, p) {
        1 => Side::West,
        -1 => Side::East,
        _ => Side::On,
    }
}

/// Number of West points minus number of East points. Points on the line
/// count for neither side.
pub fn g_balance<'a, I>(points: I, line: &DirectedLine) -> i64
where
    I: IntoIterator<Item = &'a Point>,
{
    points
        .into_iter()
        .map(|p| match side_of(line, p) {
            Side::West => 1,
            Side::East => -1,
            Side::On => 0,
        })
        .sum()
}

/// A rational affine map `p -> m p + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    /// Row-major 2x2 linear part.
    pub m: [[Scalar; 2]; 2],
    pub t: [Scalar; 2],
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap::linear([[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]])
    }

    pub fn linear(m: [[Scalar; 2]; 2]) -> Self {
        AffineMap {
            m,
            t: [Scalar::zero(), Scalar::zero()],
        }
    }

    pub fn translation(dx: Scalar, dy: Scalar) -> Self {
        AffineMap {
            t: [dx, dy],
            ..AffineMap::identity()
        }
    }

    pub fn det(&self) -> Scalar {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &Point) -> Point {
        let x = &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0];
        let y = &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1];
        Point::new(x, y)
    }

    /// The map `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        let mut m: [[Scalar; 2]; 2] = Default::default();
        for (r, row) in m.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = &self.m[r][0] * &inner.m[0][c] + &self.m[r][1] * &inner.m[1][c];
            }
        }
        let shifted = self.apply(&Point::new(inner.t[0].clone(), inner.t[1].clone()));
        AffineMap {
            m,
            t: [shifted.x, shifted.y],
        }
    }
}

/// Map every point of `config` through `map`.
pub fn affine_apply(map: &AffineMap, config: &PointConfig) -> Result<PointConfig, Error> {
    if map.det().is_zero() {
        return Err(Error::SingularTransform);
    }
    let points = config.points().iter().map(|p| map.apply(p)).collect();
    PointConfig::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn line(a: (i64, i64), b: (i64, i64)) -> DirectedLine {
        DirectedLine::new(p(a.0, a.1), p(b.0, b.1)).unwrap()
    }

    fn square() -> Vec<Point> {
        vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]
    }

    #[test]
    fn scalar_is_canonical() {
        let s = Scalar::ratio(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(Scalar::ratio(0, 7), Scalar::zero());
        assert_eq!(Scalar::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn scalar_parse_and_display() {
        assert_eq!("3/6".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert_eq!("-4".parse::<Scalar>().unwrap().to_string(), "-4");
        assert_eq!("+4/2".parse::<Scalar>().unwrap().to_string(), "2");
        for bad in ["", "1/0", "a", "1.5", "1/", "/2", "--1", "1/-"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(2, 0)), 0);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), -1);
    }

    #[test]
    fn side_of_examples() {
        assert_eq!(side_of(&line((0, 0), (2, 0)), &p(1, 1)), Side::West);
        assert_eq!(side_of(&line((0, 0), (2, 0)), &p(1, -1)), Side::East);
        assert_eq!(side_of(&line((0, 0), (2, 2)), &p(1, 1)), Side::On);
    }

    #[test]
    fn balance_examples() {
        let sq = square();
        assert_eq!(g_balance(&sq, &line((0, 0), (2, 2))), 0);
        assert_eq!(g_balance(&sq, &line((0, 0), (2, 0))), 2);
    }

    #[test]
    fn degenerate_line_rejected() {
        assert!(matches!(
            DirectedLine::new(p(1, 1), p(1, 1)),
            Err(Error::DegenerateLine)
        ));
    }

    #[test]
    fn affine_examples() {
        let sq = PointConfig::new(square()).unwrap();
        assert_eq!(affine_apply(&AffineMap::identity(), &sq).unwrap(), sq);

        let squash = AffineMap::linear([[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::ratio(1, 4)]]);
        let out = affine_apply(&squash, &sq).unwrap();
        let expected = vec![
            p(0, 0),
            p(2, 0),
            Point::new(Scalar::from_int(2), Scalar::ratio(1, 2)),
            Point::new(Scalar::zero(), Scalar::ratio(1, 2)),
        ];
        assert_eq!(out.points(), expected.as_slice());

        let singular = AffineMap::linear([
            [Scalar::one(), Scalar::from_int(2)],
            [Scalar::from_int(2), Scalar::from_int(4)],
        ]);
        assert!(matches!(affine_apply(&singular, &sq), Err(Error::SingularTransform)));
    }

    #[test]
    fn compose_matches_sequential_application() {
        let a = AffineMap {
            m: [
                [Scalar::ratio(1, 2), Scalar::from_int(3)],
                [Scalar::from_int(-1), Scalar::ratio(2, 3)],
            ],
            t: [Scalar::from_int(5), Scalar::ratio(-1, 7)],
        };
        let b = AffineMap {
            m: [
                [Scalar::from_int(2), Scalar::zero()],
                [Scalar::ratio(1, 3), Scalar::one()],
            ],
            t: [Scalar::ratio(3, 2), Scalar::from_int(4)],
        };
        let q = Point::new(Scalar::ratio(7, 5), Scalar::from_int(-3));
        assert_eq!(a.compose(&b).apply(&q), a.apply(&b.apply(&q)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_point() -> impl Strategy<Value = Point> {
            (-50i64..50, 1i64..6, -50i64..50, 1i64..6)
                .prop_map(|(a, b, c, d)| Point::new(Scalar::ratio(a, b), Scalar::ratio(c, d)))
        }

        fn arb_map() -> impl Strategy<Value = AffineMap> {
            proptest::array::uniform6(-6i64..6).prop_map(|v| AffineMap {
                m: [
                    [Scalar::from_int(v[0]), Scalar::from_int(v[1])],
                    [Scalar::from_int(v[2]), Scalar::from_int(v[3])],
                ],
                t: [Scalar::from_int(v[4]), Scalar::ratio(v[5], 3)],
            })
        }

        proptest! {
            #[test]
            fn orient_antisymmetric(a in arb_point(), b in arb_point(), c in arb_point()) {
                prop_assert_eq!(orient(&a, &b, &c), -orient(&a, &c, &b));
            }

            #[test]
            fn orient_translation_invariant(
                a in arb_point(), b in arb_point(), c in arb_point(), d in arb_point()
            ) {
                let shift = |q: &Point| Point::new(&q.x + &d.x, &q.y + &d.y);
                prop_assert_eq!(orient(&a, &b, &c), orient(&shift(&a), &shift(&b), &shift(&c)));
            }

            #[test]
            fn reversal_swaps_sides(a in arb_point(), b in arb_point(), c in arb_point()) {
                prop_assume!(a != b);
                let l = DirectedLine::new(a, b).unwrap();
                let swapped = match side_of(&l, &c) {
                    Side::West => Side::East,
                    Side::East => Side::West,
                    Side::On => Side::On,
                };
                prop_assert_eq!(side_of(&l.reversed(), &c), swapped);
            }

            #[test]
            fn balance_of_reversed_line_negates(
                pts in proptest::collection::vec(arb_point(), 0..12),
                a in arb_point(), b in arb_point(),
            ) {
                prop_assume!(a != b);
                let l = DirectedLine::new(a, b).unwrap();
                prop_assert_eq!(g_balance(&pts, &l) + g_balance(&pts, &l.reversed()), 0);
            }

            #[test]
            fn affine_map_scales_orientation_by_det_sign(
                m in arb_map(), a in arb_point(), b in arb_point(), c in arb_point()
            ) {
                let det = m.det().signum();
                prop_assume!(det != 0);
                let mapped = orient(&m.apply(&a), &m.apply(&b), &m.apply(&c));
                prop_assert_eq!(mapped, det * orient(&a, &b, &c));
            }
        }
    }
}
