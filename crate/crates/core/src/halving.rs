//! Halving edges, the underlying geograph and its connected components.
//!
//! Two enumerations are provided. [`halving_edges_reference`] is the
//! definition read literally: for every pair, count the others on each side
//! of the line through it (O(n^3) exact rational side tests).
//! [`halving_edges`] gets the same answer in O(n^2 log n) by sorting the fan
//! of directions around each point and sweeping a line through it, over
//! integer-scaled coordinates.

use crate::config::PointConfig;
use crate::error::Error;
use crate::exact::{g_balance, DirectedLine};
use crate::kernel::{self, Coord, IntPoints};

/// A point configuration together with a set of edges between its points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Geograph {
    config: PointConfig,
    /// Canonical `(min, max)` pairs, lexicographically sorted.
    edges: Vec<(usize, usize)>,
}

impl Geograph {
    /// Canonicalizes and sorts `edges`. Rejects self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(config: PointConfig, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let n = config.len();
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge(a, b));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0].0, w[0].1));
        }
        Ok(Geograph { config, edges: canon })
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.config.len()
    }

    pub fn is_empty(&self) -> bool {
        self.config.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Edges with both endpoints in `indices`, relabeled by position in
    /// `indices`.
    pub fn restricted_edges(&self, indices: &[usize]) -> Vec<(usize, usize)> {
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &v) in indices.iter().enumerate() {
            pos[v] = k;
        }
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Whether the line through points `i` and `j` leaves equally many of the
/// other points on each side.
pub fn is_halving_pair(config: &PointConfig, i: usize, j: usize) -> Result<bool, Error> {
    let (p, q) = (config.point(i)?, config.point(j)?);
    if i == j {
        return Err(Error::InvalidEdge(i, j));
    }
    let line = DirectedLine::new(p.clone(), q.clone())?;
    let others = config
        .points()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, p)| p);
    Ok(g_balance(others, &line) == 0)
}

/// The underlying geograph, straight from the definition.
pub fn halving_edges_reference(config: &PointConfig) -> Geograph {
    let n = config.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if is_halving_pair(config, i, j).expect("indices in range") {
                edges.push((i, j));
            }
        }
    }
    Geograph {
        config: config.clone(),
        edges,
    }
}

/// The underlying geograph of `config`: one edge per halving line.
pub fn halving_edges(config: &PointConfig) -> Geograph {
    let mut edges = match kernel::integerize(config.points()) {
        IntPoints::Small(p) => sweep(&p),
        IntPoints::Big(p) => sweep(&p),
    };
    edges.sort_unstable();
    Geograph {
        config: config.clone(),
        edges,
    }
}

/// Rotate a line about each pivot through half a turn. Between consecutive
/// fan directions exactly one point changes side, so the left count updates
/// in O(1); a pair is halving when the left count is `(n - 2) / 2`.
fn sweep<T: Coord>(points: &[[T; 2]]) -> Vec<(usize, usize)> {
    let n = points.len();
    let half = (n - 2) / 2;
    let mut edges = Vec::new();
    for pivot in 0..n {
        let fan = kernel::sorted_fan(points, pivot);
        // At the first direction every unflipped point lies strictly left.
        let mut left = fan.iter().skip(1).filter(|f| !f.flipped).count();
        for k in 0..fan.len() {
            if k > 0 {
                left = left + usize::from(fan[k - 1].flipped) - usize::from(!fan[k].flipped);
            }
            if left == half && pivot < fan[k].index {
                edges.push((pivot, fan[k].index));
            }
        }
    }
    edges
}

/// Connected components as disjoint vertex classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentPartition {
    /// Each class sorted ascending; classes sorted by smallest member.
    classes: Vec<Vec<usize>>,
    /// `label[v]` is the index of the class containing `v`.
    label: Vec<usize>,
}

impl ComponentPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.label[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sorted vertex set of the union of the chosen classes.
    pub fn union_of(&self, class_ids: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = class_ids
            .iter()
            .flat_map(|&c| self.classes[c].iter().copied())
            .collect();
        v.sort_unstable();
        v
    }

    /// Checks that `selection` contains whole classes only and returns those
    /// class ids, ascending.
    pub fn classes_covering(&self, selection: &[usize]) -> Result<Vec<usize>, Error> {
        let n = self.label.len();
        let mut hit = vec![0usize; self.classes.len()];
        let mut seen = vec![false; n];
        for &v in selection {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if !seen[v] {
                seen[v] = true;
                hit[self.label[v]] += 1;
            }
        }
        let mut ids = Vec::new();
        for (c, &count) in hit.iter().enumerate() {
            if count == self.classes[c].len() {
                ids.push(c);
            } else if count != 0 {
                return Err(Error::NotAComponentUnion { component: c });
            }
        }
        Ok(ids)
    }
}

pub fn components(g: &Geograph) -> ComponentPartition {
    let n = g.len();
    let adj = g.adjacency();
    let mut label = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![start];
        label[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if label[u] == usize::MAX {
                    label[u] = id;
                    class.push(u);
                    stack.push(u);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    ComponentPartition { classes, label }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Point;

    pub(crate) fn config(v: &[(i64, i64)]) -> PointConfig {
        PointConfig::new(v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    const SQUARE: [(i64, i64); 4] = [(0, 0), (2, 0), (2, 2), (0, 2)];
    const STAR: [(i64, i64); 4] = [(0, 0), (4, 0), (2, 4), (2, 1)];
    const HEXAGON: [(i64, i64); 6] = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)];

    #[test]
    fn halving_pair_examples() {
        let sq = config(&SQUARE);
        assert!(is_halving_pair(&sq, 0, 2).unwrap());
        assert!(!is_halving_pair(&sq, 0, 1).unwrap());
        let star = config(&STAR);
        assert!(is_halving_pair(&star, 0, 3).unwrap());
        assert!(matches!(
            is_halving_pair(&sq, 0, 4),
            Err(Error::IndexOutOfRange { index: 4, n: 4 })
        ));
    }

    #[test]
    fn four_point_and_hexagon_edges() {
        assert_eq!(halving_edges(&config(&SQUARE)).edges(), &[(0, 2), (1, 3)]);
        assert_eq!(halving_edges(&config(&STAR)).edges(), &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(halving_edges(&config(&HEXAGON)).edges(), &[(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn two_points_form_one_edge() {
        let g = halving_edges(&config(&[(0, 0), (1, 0)]));
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn component_examples() {
        let sq = components(&halving_edges(&config(&SQUARE)));
        assert_eq!(sq.classes(), &[vec![0, 2], vec![1, 3]]);
        let star = components(&halving_edges(&config(&STAR)));
        assert_eq!(star.classes(), &[vec![0, 1, 2, 3]]);
        let bare = Geograph::new(config(&[(0, 0), (1, 0)]), vec![]).unwrap();
        assert_eq!(components(&bare).classes(), &[vec![0], vec![1]]);
    }

    #[test]
    fn geograph_rejects_bad_edges() {
        let c = config(&SQUARE);
        assert_eq!(Geograph::new(c.clone(), vec![(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(
            Geograph::new(c.clone(), vec![(0, 2), (2, 0)]),
            Err(Error::InvalidEdge(0, 2))
        );
        assert!(matches!(
            Geograph::new(c.clone(), vec![(0, 7)]),
            Err(Error::IndexOutOfRange { index: 7, .. })
        ));
        let g = Geograph::new(c, vec![(3, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn union_validation() {
        let p = components(&halving_edges(&config(&SQUARE)));
        assert_eq!(p.classes_covering(&[2, 0]).unwrap(), vec![0]);
        assert_eq!(
            p.classes_covering(&[0, 1]),
            Err(Error::NotAComponentUnion { component: 0 })
        );
        assert_eq!(p.union_of(&[1, 0]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn restricted_edges_relabel() {
        let g = halving_edges(&config(&STAR));
        assert_eq!(g.restricted_edges(&[3, 2, 1]), vec![(0, 1), (0, 2)]);
    }
}
