//! Generic orientations of a geograph.
//!
//! A [`Direction`] `d = (1, t)` plays the role of East; North is `d` turned a
//! quarter turn counter-clockwise, `(-t, 1)`. Sorting vertices by their
//! projection onto `d` gives the left-to-right order used by degrees, halves
//! and chains. No coordinates are rotated, so everything stays rational.

use std::cmp::Ordering;

use crate::error::Error;
use crate::exact::{Point, Scalar};
use crate::halving::Geograph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    t: Scalar,
}

impl Direction {
    /// An unchecked direction `(1, t)`. Use [`OrientedGeograph::new`] to
    /// validate it against a configuration.
    pub fn new(t: Scalar) -> Self {
        Direction { t }
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    /// Projection onto `(1, t)`.
    pub fn east(&self, p: &Point) -> Scalar {
        &p.x + &self.t * &p.y
    }

    /// Projection onto `(-t, 1)`.
    pub fn north(&self, p: &Point) -> Scalar {
        &p.y - &self.t * &p.x
    }

    /// Returns a pair of points with equal projection, if any.
    pub fn first_tie(&self, points: &[Point]) -> Option<(usize, usize)> {
        let mut keyed: Vec<(Scalar, usize)> = points.iter().enumerate().map(|(i, p)| (self.east(p), i)).collect();
        keyed.sort();
        keyed.windows(2).find(|w| w[0].0 == w[1].0).map(|w| (w[0].1, w[1].1))
    }
}

/// The fixed search sequence `0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3,
/// 1/4, ...`: denominators ascending, then reduced numerators by magnitude,
/// positive first. Every term lies in `[-1, 1]` and none repeats.
pub fn direction_candidates() -> impl Iterator<Item = Scalar> {
    std::iter::once(Scalar::zero()).chain((1i64..).flat_map(|den| {
        (1..=den)
            .filter(move |&num| num_integer::gcd(num, den) == 1)
            .flat_map(move |num| [Scalar::ratio(num, den), Scalar::ratio(-num, den)])
    }))
}

/// The first candidate that gives every point a distinct projection.
///
/// Distinct projections already rule out edges perpendicular to `d`, since
/// such an edge would join two points with equal projection.
pub fn choose_direction(g: &Geograph) -> Direction {
    choose_direction_for(g.config().points())
}

pub fn choose_direction_for(points: &[Point]) -> Direction {
    direction_candidates()
        .map(Direction::new)
        .find(|d| d.first_tie(points).is_none())
        .expect("only finitely many candidates produce ties")
}

/// A geograph with a generic direction and the induced vertex order.
#[derive(Debug, Clone)]
pub struct OrientedGeograph {
    geograph: Geograph,
    direction: Direction,
    /// Vertex indices sorted by ascending projection.
    order: Vec<usize>,
    /// `rank[v]` is the position of `v` in `order`.
    rank: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl OrientedGeograph {
    pub fn new(geograph: Geograph, direction: Direction) -> Result<Self, Error> {
        let points = geograph.config().points();
        let proj: Vec<Scalar> = points.iter().map(|p| direction.east(p)).collect();
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| proj[a].cmp(&proj[b]));
        if let Some(w) = order.windows(2).find(|w| proj[w[0]] == proj[w[1]]) {
            return Err(Error::ProjectionTie {
                t: direction.t.clone(),
                first: w[0].min(w[1]),
                second: w[0].max(w[1]),
            });
        }
        let mut rank = vec![0; order.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let adjacency = geograph.adjacency();
        Ok(OrientedGeograph {
            geograph,
            direction,
            order,
            rank,
            adjacency,
        })
    }

    /// Orient with [`choose_direction`].
    pub fn with_default_direction(geograph: Geograph) -> Self {
        let d = choose_direction(&geograph);
        OrientedGeograph::new(geograph, d).expect("chosen direction has no ties")
    }

    pub fn geograph(&self) -> &Geograph {
        &self.geograph
    }

    pub fn direction(&self) -> &Direction {
        &self.direction
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Compare two vertices by projection.
    pub fn cmp_vertices(&self, a: usize, b: usize) -> Ordering {
        self.rank[a].cmp(&self.rank[b])
    }

    fn check(&self, v: usize) -> Result<(), Error> {
        if v >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: v,
                n: self.len(),
            });
        }
        Ok(())
    }

    /// Neighbors with smaller projection than `v`.
    pub fn left_degree(&self, v: usize) -> Result<usize, Error> {
        self.check(v)?;
        Ok(self.adjacency[v]
            .iter()
            .filter(|&&u| self.rank[u] < self.rank[v])
            .count())
    }

    /// Neighbors with larger projection than `v`.
    pub fn right_degree(&self, v: usize) -> Result<usize, Error> {
        self.check(v)?;
        Ok(self.adjacency[v]
            .iter()
            .filter(|&&u| self.rank[u] > self.rank[v])
            .count())
    }

    pub fn in_left_half(&self, v: usize) -> bool {
        self.rank[v] < self.len() / 2
    }

    /// The first and last `n / 2` vertices in projection order.
    pub fn halves(&self) -> (Vec<usize>, Vec<usize>) {
        let (left, right) = self.order.split_at(self.len() / 2);
        (left.to_vec(), right.to_vec())
    }
}
