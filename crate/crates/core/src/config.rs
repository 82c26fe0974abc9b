use std::collections::HashMap;

use crate::error::Error;
use crate::exact::Point;
use crate::kernel::{self, Coord, IntPoints};

/// An even-sized planar point set in general position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointConfig {
    points: Vec<Point>,
}

impl PointConfig {
    /// Validates size parity, distinctness and the absence of collinear
    /// triples, in that order.
    pub fn new(points: Vec<Point>) -> Result<Self, Error> {
        let n = points.len();
        if n < 2 {
            return Err(Error::TooFewPoints { n });
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize { n });
        }
        check_distinct(&points)?;
        check_general_position(&points)?;
        Ok(PointConfig { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> Result<&Point, Error> {
        self.points.get(index).ok_or(Error::IndexOutOfRange {
            index,
            n: self.points.len(),
        })
    }

    /// The sub-configuration on `indices` (kept in the given order).
    pub fn subset(&self, indices: &[usize]) -> Result<PointConfig, Error> {
        let points = indices
            .iter()
            .map(|&i| self.point(i).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        PointConfig::new(points)
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}

pub(crate) fn check_distinct(points: &[Point]) -> Result<(), Error> {
    let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = seen.get(p) {
            return Err(Error::DuplicatePoints { first, second: i });
        }
        seen.insert(p, i);
    }
    Ok(())
}

/// Assumes distinct points. Sorting the fan around each pivot puts any two
/// points collinear with it next to each other, so this is O(n^2 log n).
pub(crate) fn check_general_position(points: &[Point]) -> Result<(), Error> {
    match kernel::integerize(points) {
        IntPoints::Small(p) => first_collinear(&p),
        IntPoints::Big(p) => first_collinear(&p),
    }
    .map_or(Ok(()), |indices| Err(Error::CollinearTriple { indices }))
}

fn first_collinear<T: Coord>(points: &[[T; 2]]) -> Option<[usize; 3]> {
    for pivot in 0..points.len() {
        let fan = kernel::sorted_fan(points, pivot);
        for pair in fan.windows(2) {
            if kernel::cross(&pair[0].vec, &pair[1].vec).is_zero() {
                let mut t = [pivot, pair[0].index, pair[1].index];
                t.sort_unstable();
                return Some(t);
            }
        }
    }
    None
}
