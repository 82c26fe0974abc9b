//! Chain decomposition of an oriented underlying geograph.
//!
//! At each vertex the incident edges are split into those reaching left and
//! those reaching right, each group sorted by slope in the `(east, north)`
//! frame of the direction. When there is one more right edge than left edges,
//! left edge `k` continues into right edge `k + 1` and the lowest right edge
//! starts a chain. When there is one more left edge, left edge `k` continues
//! into right edge `k` and the highest left edge ends a chain. Any other
//! degree pattern means the input is not an underlying geograph.
//!
//! The resulting chains are checked against the four chain properties every
//! time they are built.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::audit::Witness;
use crate::error::Error;
use crate::exact::Scalar;
use crate::orientation::OrientedGeograph;

/// A left-to-right path of geograph edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    vertices: Vec<usize>,
}

impl Chain {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn left_end(&self) -> usize {
        self.vertices[0]
    }

    pub fn right_end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    /// Chains ordered by the projection rank of their left endpoint.
    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

/// A failed chain property: which one, and the vertices/edges involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainViolation {
    pub property: &'static str,
    pub witness: Witness,
}

pub fn chain_decomposition(og: &OrientedGeograph) -> Result<ChainDecomposition, Error> {
    let dir = og.direction();
    let points = og.geograph().config().points();
    let frame: Vec<(Scalar, Scalar)> = points.iter().map(|p| (dir.east(p), dir.north(p))).collect();

    // Slope of the edge {a, b} measured from its left end, as (d_north, d_east)
    // with d_east > 0.
    let slope = |a: usize, b: usize| -> (Scalar, Scalar) {
        let (l, r) = if og.rank(a) < og.rank(b) { (a, b) } else { (b, a) };
        (&frame[r].1 - &frame[l].1, &frame[r].0 - &frame[l].0)
    };
    let by_slope = |s: &(Scalar, Scalar), t: &(Scalar, Scalar)| -> Ordering { (&s.0 * &t.1).cmp(&(&t.0 * &s.1)) };

    let mut next: HashMap<(usize, usize), usize> = HashMap::new();
    let mut starts: Vec<(usize, usize)> = Vec::new();
    for v in 0..og.len() {
        let (mut lefts, mut rights): (Vec<usize>, Vec<usize>) =
            og.neighbors(v).iter().partition(|&&u| og.rank(u) < og.rank(v));
        lefts.sort_by(|&a, &b| by_slope(&slope(a, v), &slope(b, v)));
        rights.sort_by(|&a, &b| by_slope(&slope(v, a), &slope(v, b)));
        let offset = if rights.len() == lefts.len() + 1 {
            starts.push((v, rights[0]));
            1
        } else if lefts.len() == rights.len() + 1 {
            0
        } else {
            return Err(Error::InvariantViolation(format!(
                "vertex {v} has left degree {} and right degree {}",
                lefts.len(),
                rights.len()
            )));
        };
        for (k, &u) in lefts.iter().enumerate() {
            if let Some(&w) = rights.get(k + offset) {
                next.insert((u, v), w);
            }
        }
    }

    starts.sort_by_key(|&(v, _)| og.rank(v));
    let chains = starts
        .into_iter()
        .map(|(v, w)| {
            let mut vertices = vec![v, w];
            let (mut prev, mut cur) = (v, w);
            while let Some(&nxt) = next.get(&(prev, cur)) {
                vertices.push(nxt);
                (prev, cur) = (cur, nxt);
            }
            Chain { vertices }
        })
        .collect();
    let decomposition = ChainDecomposition { chains };
    match chain_violation(og, &decomposition) {
        None => Ok(decomposition),
        Some(v) => Err(Error::InvariantViolation(format!(
            "chain property `{}` fails at vertices {:?} edges {:?}",
            v.property, v.witness.vertices, v.witness.edges
        ))),
    }
}

/// Checks the chain properties and the derived count `n / 2`. Returns the
/// first failure.
pub fn chain_violation(og: &OrientedGeograph, dec: &ChainDecomposition) -> Option<ChainViolation> {
    let fail = |property, vertices: Vec<usize>, edges: Vec<(usize, usize)>| {
        Some(ChainViolation {
            property,
            witness: Witness { vertices, edges },
        })
    };
    let g = og.geograph();
    let n = og.len();

    for chain in &dec.chains {
        if chain.vertices.len() < 2 {
            return fail("chains are nonempty paths", chain.vertices.clone(), vec![]);
        }
        for (a, b) in chain.edges() {
            if !g.has_edge(a, b) || og.rank(a) >= og.rank(b) {
                return fail("chains travel left to right along edges", vec![a, b], vec![(a, b)]);
            }
        }
    }

    let mut uses: HashMap<(usize, usize), usize> = g.edges().iter().map(|&e| (e, 0)).collect();
    for (a, b) in dec.chains.iter().flat_map(Chain::edges) {
        *uses.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let mut bad: Vec<(usize, usize)> = uses.into_iter().filter(|&(_, c)| c != 1).map(|(e, _)| e).collect();
    if !bad.is_empty() {
        bad.sort_unstable();
        return fail("every halving edge is in exactly one chain", vec![], bad);
    }

    let mut left_end = vec![0usize; n];
    let mut right_end = vec![0usize; n];
    for chain in &dec.chains {
        left_end[chain.left_end()] += 1;
        right_end[chain.right_end()] += 1;
    }
    let bad: Vec<usize> = (0..n).filter(|&v| left_end[v] + right_end[v] != 1).collect();
    if !bad.is_empty() {
        return fail("every vertex is the endpoint of exactly one chain", bad, vec![]);
    }
    let bad: Vec<usize> = (0..n).filter(|&v| og.in_left_half(v) && left_end[v] != 1).collect();
    if !bad.is_empty() {
        return fail("left-half vertices are left endpoints", bad, vec![]);
    }
    let bad: Vec<usize> = (0..n).filter(|&v| !og.in_left_half(v) && right_end[v] != 1).collect();
    if !bad.is_empty() {
        return fail("right-half vertices are right endpoints", bad, vec![]);
    }
    if dec.chains.len() * 2 != n {
        return fail("there are n/2 chains", vec![], vec![]);
    }
    None
}
