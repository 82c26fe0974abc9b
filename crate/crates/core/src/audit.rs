//! Machine checks of the structural results about underlying geographs,
//! run on concrete configurations.
//!
//! Each `verify_*` function produces one [`CheckRecord`]; [`audit`] runs the
//! whole suite in a fixed order and collects the records into an
//! [`AuditReport`]. A failing record carries a [`Witness`] naming the
//! offending vertices and edges.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chains::{chain_decomposition, chain_violation};
use crate::config::PointConfig;
use crate::error::Error;
use crate::exact::{side_of, DirectedLine, Side};
use crate::halving::{components, halving_edges, ComponentPartition, Geograph};
use crate::orientation::OrientedGeograph;

/// Component unions are enumerated exhaustively when there are at most this
/// many components, and sampled otherwise.
pub const EXHAUSTIVE_COMPONENT_LIMIT: usize = 8;
pub const SAMPLED_UNIONS: usize = 256;
const UNION_SAMPLE_SEED: u64 = 0x4841_4c56_494e_4721;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Witness {
    fn edge(a: usize, b: usize) -> Self {
        Witness {
            vertices: vec![a, b],
            edges: vec![(a.min(b), a.max(b))],
        }
    }

    fn vertices(vertices: Vec<usize>) -> Self {
        Witness {
            vertices,
            edges: vec![],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckRecord {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(name: &str, detail: impl Into<String>, witness: Witness) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(witness),
        }
    }

    fn report(name: &str, detail: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: Status::ReportOnly,
            detail: detail.into(),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub points: usize,
    pub halving_lines: usize,
    pub components: usize,
    /// `t` of the direction `(1, t)` used for orientation-dependent checks.
    pub direction: String,
    pub unions_checked: usize,
    pub unions_exhaustive: bool,
    pub checks: Vec<CheckRecord>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let plural = |k: usize, word: &str| {
            if k == 1 {
                format!("{k} {word}")
            } else {
                format!("{k} {word}s")
            }
        };
        let _ = writeln!(
            out,
            "{} points, {}, {}, direction (1, {})",
            self.points,
            plural(self.halving_lines, "halving line"),
            plural(self.components, "component"),
            self.direction
        );
        let _ = writeln!(
            out,
            "component unions checked: {} ({})",
            self.unions_checked,
            if self.unions_exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
        );
        for c in &self.checks {
            let _ = writeln!(out, "[{:<6}] {:<22} {}", c.status.to_string(), c.name, c.detail);
            if let Some(w) = &c.witness {
                if c.status == Status::Fail {
                    let _ = writeln!(out, "         witness: vertices {:?} edges {:?}", w.vertices, w.edges);
                }
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            out.push_str("result: all checks pass\n");
        } else {
            let _ = writeln!(out, "result: {} failing", plural(failed, "check"));
        }
        out
    }
}

fn mask(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

fn edge_line(g: &Geograph, a: usize, b: usize) -> DirectedLine {
    let pts = g.config().points();
    DirectedLine::new(pts[a].clone(), pts[b].clone()).expect("distinct points")
}

/// Balance of the points selected by `within` (minus `a`, `b`) against the
/// line through `a` and `b`.
fn balance_on(g: &Geograph, a: usize, b: usize, within: &[bool]) -> i64 {
    let line = edge_line(g, a, b);
    g.config()
        .points()
        .iter()
        .enumerate()
        .filter(|&(v, _)| within[v] && v != a && v != b)
        .map(|(_, p)| match side_of(&line, p) {
            Side::West => 1,
            Side::East => -1,
            Side::On => 0,
        })
        .sum()
}

fn balance_failure(g: &Geograph, selected: &[bool]) -> Option<(i64, Witness)> {
    g.edges()
        .iter()
        .filter(|&&(a, b)| selected[a] && selected[b])
        .find_map(|&(a, b)| {
            let bal = balance_on(g, a, b, selected);
            (bal != 0).then(|| (bal, Witness::edge(a, b)))
        })
}

/// Lines of edges inside `from` must split the points of `onto` evenly.
fn mix_failure(g: &Geograph, from: &[bool], onto: &[bool]) -> Option<(i64, Witness)> {
    g.edges()
        .iter()
        .filter(|&&(a, b)| from[a] && from[b])
        .find_map(|&(a, b)| {
            let bal = balance_on(g, a, b, onto);
            (bal != 0).then(|| (bal, Witness::edge(a, b)))
        })
}

fn subtraction_failure(g: &Geograph, selection: &[usize]) -> Option<(String, Witness)> {
    let mut sel = selection.to_vec();
    sel.sort_unstable();
    sel.dedup();
    let sub = match g.config().subset(&sel) {
        Ok(sub) => sub,
        Err(e) => {
            return Some((
                format!("selection is not a valid configuration: {e}"),
                Witness::vertices(sel),
            ))
        }
    };
    let recomputed = halving_edges(&sub);
    let restricted = g.restricted_edges(&sel);
    if recomputed.edges() == restricted.as_slice() {
        return None;
    }
    let relabel = |e: &(usize, usize)| (sel[e.0], sel[e.1]);
    let mut diff: Vec<(usize, usize)> = recomputed
        .edges()
        .iter()
        .filter(|e| !restricted.contains(e))
        .chain(restricted.iter().filter(|e| !recomputed.edges().contains(e)))
        .map(relabel)
        .collect();
    diff.sort_unstable();
    Some((
        format!(
            "{} edges differ between the selection alone and the full configuration",
            diff.len()
        ),
        Witness {
            vertices: sel,
            edges: diff,
        },
    ))
}

/// Every edge of `g` inside `selection` has zero balance with respect to the
/// other selected points.
pub fn verify_balance_theorem(g: &Geograph, selection: &[usize]) -> Result<CheckRecord, Error> {
    components(g).classes_covering(selection)?;
    let selected = mask(g.len(), selection);
    Ok(match balance_failure(g, &selected) {
        None => CheckRecord::pass(
            "balance-theorem",
            "selection balance is zero on every internal halving line",
        ),
        Some((bal, w)) => CheckRecord::fail(
            "balance-theorem",
            format!("selection balance {bal} on a halving line"),
            w,
        ),
    })
}

/// Halving lines inside `a` halve `b`, and vice versa.
pub fn verify_componentmix(g: &Geograph, a: &[usize], b: &[usize]) -> Result<CheckRecord, Error> {
    let partition = components(g);
    partition.classes_covering(a)?;
    partition.classes_covering(b)?;
    let (ma, mb) = (mask(g.len(), a), mask(g.len(), b));
    if let Some(v) = (0..g.len()).find(|&v| ma[v] == mb[v]) {
        return Err(Error::InvariantViolation(format!(
            "vertex {v} must lie in exactly one of the two sides"
        )));
    }
    Ok(match mix_failure(g, &ma, &mb).or_else(|| mix_failure(g, &mb, &ma)) {
        None => CheckRecord::pass("componentmix", "each side's halving lines halve the other side"),
        Some((bal, w)) => CheckRecord::fail(
            "componentmix",
            format!("a halving line leaves balance {bal} on the other side"),
            w,
        ),
    })
}

/// Left-half vertices have right degree one more than left degree, and
/// the mirror statement for the right half.
pub fn verify_leftright(og: &OrientedGeograph) -> CheckRecord {
    let bad: Vec<usize> = (0..og.len())
        .filter(|&v| {
            let (l, r) = (og.left_degree(v).unwrap(), og.right_degree(v).unwrap());
            if og.in_left_half(v) {
                r != l + 1
            } else {
                l != r + 1
            }
        })
        .collect();
    if bad.is_empty() {
        CheckRecord::pass("leftright", "degree excess is +1 toward the far half at every vertex")
    } else {
        CheckRecord::fail(
            "leftright",
            format!("{} vertices violate the degree excess", bad.len()),
            Witness::vertices(bad),
        )
    }
}

/// The selection's points alone have exactly the halving lines that `g` has
/// inside the selection.
pub fn verify_subtraction(g: &Geograph, selection: &[usize]) -> Result<CheckRecord, Error> {
    components(g).classes_covering(selection)?;
    Ok(match subtraction_failure(g, selection) {
        None => CheckRecord::pass("subtraction", "recomputed halving lines match the restriction"),
        Some((detail, w)) => CheckRecord::fail("subtraction", detail, w),
    })
}

fn component_halves_failure(og: &OrientedGeograph, partition: &ComponentPartition) -> Option<Witness> {
    for class in partition.classes() {
        let mut ordered = class.clone();
        ordered.sort_by(|&a, &b| og.cmp_vertices(a, b));
        if ordered.len() % 2 != 0 {
            return Some(Witness::vertices(ordered));
        }
        let (left, right) = ordered.split_at(ordered.len() / 2);
        let bad: Vec<usize> = left
            .iter()
            .filter(|&&v| !og.in_left_half(v))
            .chain(right.iter().filter(|&&v| og.in_left_half(v)))
            .copied()
            .collect();
        if !bad.is_empty() {
            return Some(Witness::vertices(bad));
        }
    }
    None
}

/// The left half of each component lies in the global left half, and
/// likewise on the right.
pub fn verify_component_halves(og: &OrientedGeograph) -> CheckRecord {
    let partition = components(og.geograph());
    match component_halves_failure(og, &partition) {
        None => CheckRecord::pass("component-halves", "component halves sit inside the global halves"),
        Some(w) => CheckRecord::fail("component-halves", "a component half straddles the global median", w),
    }
}

/// Component-class selections for the union-quantified checks.
fn component_unions(k: usize) -> (Vec<Vec<usize>>, bool) {
    if k <= EXHAUSTIVE_COMPONENT_LIMIT {
        let unions = (1u32..(1 << k))
            .map(|m| (0..k).filter(|&c| m & (1 << c) != 0).collect())
            .collect();
        return (unions, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(UNION_SAMPLE_SEED);
    let mut unions = Vec::with_capacity(SAMPLED_UNIONS);
    while unions.len() < SAMPLED_UNIONS {
        let pick: Vec<usize> = (0..k).filter(|_| rng.random_bool(0.5)).collect();
        if !pick.is_empty() {
            unions.push(pick);
        }
    }
    (unions, false)
}

fn leaf_report(g: &Geograph, partition: &ComponentPartition) -> CheckRecord {
    let deg = g.degrees();
    let leaves: Vec<usize> = partition
        .classes()
        .iter()
        .map(|c| c.iter().filter(|&&v| deg[v] == 1).count())
        .collect();
    let few: Vec<usize> = partition
        .classes()
        .iter()
        .zip(&leaves)
        .filter(|(c, &l)| c.len() > 2 && l < 3)
        .flat_map(|(c, _)| c.iter().copied())
        .collect();
    let listed = leaves.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
    let detail = if few.is_empty() {
        format!("leaves per component: {listed}")
    } else {
        format!("leaves per component: {listed}; some component with more than 2 vertices has fewer than 3 leaves")
    };
    CheckRecord::report("leaf-count", detail, (!few.is_empty()).then(|| Witness::vertices(few)))
}

/// Whether all halving lines of a component cut its complement the same way.
fn cross_likeness_report(g: &Geograph, partition: &ComponentPartition) -> CheckRecord {
    let n = g.len();
    let pts = g.config().points();
    let mut not_cross_like = Vec::new();
    let mut considered = 0;
    for (id, class) in partition.classes().iter().enumerate() {
        let outside: Vec<usize> = (0..n).filter(|&v| partition.class_of(v) != id).collect();
        if outside.is_empty() {
            continue;
        }
        considered += 1;
        let cut = |a: usize, b: usize| -> Vec<bool> {
            let line = edge_line(g, a, b);
            let sides: Vec<bool> = outside.iter().map(|&v| side_of(&line, &pts[v]) == Side::West).collect();
            // Normalize so the first outside vertex is always on the `false` side.
            if sides[0] {
                sides.iter().map(|s| !s).collect()
            } else {
                sides
            }
        };
        let mut cuts = g
            .edges()
            .iter()
            .filter(|&&(a, b)| partition.class_of(a) == id && partition.class_of(b) == id)
            .map(|&(a, b)| cut(a, b));
        if let Some(first) = cuts.next() {
            if cuts.any(|c| c != first) {
                not_cross_like.extend(class.iter().copied());
            }
        }
    }
    let detail = if considered == 0 {
        "single component; nothing to compare".to_string()
    } else if not_cross_like.is_empty() {
        format!("all {considered} components cut their complement into one common pair of halves")
    } else {
        "some component's halving lines cut its complement in different ways".to_string()
    };
    CheckRecord::report(
        "cross-likeness",
        detail,
        (!not_cross_like.is_empty()).then(|| Witness::vertices(not_cross_like)),
    )
}

/// Run every check on `config`.
///
/// Order: halving lines, minimum count, odd degrees, leftright, chain
/// properties, then over component unions the balance theorem,
/// componentmix and subtraction, then each component as a configuration of
/// its own, component halves, and the two report-only summaries.
pub fn audit(config: &PointConfig) -> AuditReport {
    let g = halving_edges(config);
    let n = g.len();
    let og = OrientedGeograph::with_default_direction(g.clone());
    let partition = components(&g);
    let mut checks = Vec::new();

    checks.push(CheckRecord::pass(
        "halving-lines",
        format!("{} halving lines", g.edges().len()),
    ));

    let e = g.edges().len();
    checks.push(if e >= n / 2 {
        CheckRecord::pass("minimum-count", format!("{e} >= n/2 = {}", n / 2))
    } else {
        CheckRecord::fail("minimum-count", format!("{e} < n/2 = {}", n / 2), Witness::default())
    });

    let deg = g.degrees();
    let even: Vec<usize> = (0..n).filter(|&v| deg[v].is_multiple_of(2)).collect();
    checks.push(if even.is_empty() {
        CheckRecord::pass("odd-degree", "every vertex has odd degree")
    } else {
        CheckRecord::fail(
            "odd-degree",
            format!("{} vertices have even degree", even.len()),
            Witness::vertices(even),
        )
    });

    checks.push(verify_leftright(&og));

    checks.push(match chain_decomposition(&og) {
        Ok(dec) => match chain_violation(&og, &dec) {
            None => CheckRecord::pass(
                "chain-properties",
                format!("{} chains satisfy all chain properties", dec.len()),
            ),
            Some(v) => CheckRecord::fail("chain-properties", v.property, v.witness),
        },
        Err(e) => CheckRecord::fail("chain-properties", e.to_string(), Witness::default()),
    });

    let (unions, exhaustive) = component_unions(partition.len());
    let mut balance = None;
    let mut mix = None;
    let mut subtraction = None;
    for classes in &unions {
        let selection = partition.union_of(classes);
        let selected = mask(n, &selection);
        let rest: Vec<bool> = selected.iter().map(|s| !s).collect();
        if balance.is_none() {
            balance = balance_failure(&g, &selected);
        }
        if mix.is_none() {
            mix = mix_failure(&g, &selected, &rest).or_else(|| mix_failure(&g, &rest, &selected));
        }
        if subtraction.is_none() {
            subtraction = subtraction_failure(&g, &selection);
        }
    }
    let scope = format!("{} component unions", unions.len());
    checks.push(match balance {
        None => CheckRecord::pass("balance-theorem", format!("zero selection balance over {scope}")),
        Some((bal, w)) => CheckRecord::fail("balance-theorem", format!("selection balance {bal}"), w),
    });
    checks.push(match mix {
        None => CheckRecord::pass("componentmix", format!("mutual halving over {scope}")),
        Some((bal, w)) => CheckRecord::fail("componentmix", format!("complement balance {bal}"), w),
    });
    checks.push(match subtraction {
        None => CheckRecord::pass(
            "subtraction",
            format!("restricted edges recomputed exactly over {scope}"),
        ),
        Some((detail, w)) => CheckRecord::fail("subtraction", detail, w),
    });

    checks.push(if partition.len() == 1 {
        CheckRecord::pass("component-is-geograph", "single component")
    } else {
        let bad = partition.classes().iter().find(|class| match config.subset(class) {
            Ok(sub) => {
                let ok = audit(&sub).passed();
                !ok || halving_edges(&sub).edges() != g.restricted_edges(class).as_slice()
            }
            Err(_) => true,
        });
        match bad {
            None => CheckRecord::pass(
                "component-is-geograph",
                format!("each of {} components audits clean on its own", partition.len()),
            ),
            Some(class) => CheckRecord::fail(
                "component-is-geograph",
                "a component fails as a configuration of its own",
                Witness::vertices(class.clone()),
            ),
        }
    });

    checks.push(verify_component_halves(&og));
    checks.push(leaf_report(&g, &partition));
    checks.push(cross_likeness_report(&g, &partition));

    AuditReport {
        points: n,
        halving_lines: e,
        components: partition.len(),
        direction: og.direction().t().to_string(),
        unions_checked: unions.len(),
        unions_exhaustive: exhaustive,
        checks,
    }
}

/// Names of the checks in [`audit`], in order.
pub const AUDIT_CHECKS: [&str; 12] = [
    "halving-lines",
    "minimum-count",
    "odd-degree",
    "leftright",
    "chain-properties",
    "balance-theorem",
    "componentmix",
    "subtraction",
    "component-is-geograph",
    "component-halves",
    "leaf-count",
    "cross-likeness",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cross, generate, GeneratorSpec, Shape};
    use crate::exact::{Point, Scalar};
    use crate::orientation::Direction;

    fn config(v: &[(i64, i64)]) -> PointConfig {
        PointConfig::new(v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn square() -> PointConfig {
        config(&[(0, 0), (2, 0), (2, 2), (0, 2)])
    }

    fn star() -> PointConfig {
        config(&[(0, 0), (4, 0), (2, 4), (2, 1)])
    }

    fn polygon(n: usize) -> PointConfig {
        generate(&GeneratorSpec::new(Shape::Convex, n)).unwrap()
    }

    #[test]
    fn square_audits_clean() {
        let r = audit(&square());
        assert!(r.passed(), "{}", r.to_text());
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, AUDIT_CHECKS);
        assert_eq!(r.unions_checked, 3);
        assert!(r.unions_exhaustive);
    }

    #[test]
    fn star_reports_three_leaves() {
        let r = audit(&star());
        assert!(r.passed());
        assert_eq!(r.halving_lines, 3);
        assert_eq!(r.check("leaf-count").unwrap().detail, "leaves per component: 3");
        assert!(r.to_text().contains("3 halving lines"));
    }

    #[test]
    fn polygon_reports_two_leaves_per_component() {
        let r = audit(&polygon(8));
        assert!(r.passed());
        let leaf = r.check("leaf-count").unwrap();
        assert_eq!(leaf.status, Status::ReportOnly);
        assert_eq!(leaf.detail, "leaves per component: 2, 2, 2, 2");
        assert_eq!(r.unions_checked, 15);
    }

    #[test]
    fn many_components_are_sampled() {
        let r = audit(&polygon(20));
        assert!(r.passed());
        assert!(!r.unions_exhaustive);
        assert_eq!(r.unions_checked, SAMPLED_UNIONS);
        assert_eq!(r, audit(&polygon(20)));
    }

    #[test]
    fn balance_theorem_examples() {
        let c = cross(&square(), &star()).unwrap();
        let star_block: Vec<usize> = c.blocks[1].clone().collect();
        assert!(verify_balance_theorem(&c.geograph, &star_block).unwrap().passed());
        let all: Vec<usize> = (0..8).collect();
        assert!(verify_balance_theorem(&c.geograph, &all).unwrap().passed());
        let g = halving_edges(&square());
        assert!(verify_balance_theorem(&g, &[0, 2]).unwrap().passed());
        assert_eq!(
            verify_balance_theorem(&g, &[0, 1]),
            Err(Error::NotAComponentUnion { component: 0 })
        );
    }

    #[test]
    fn componentmix_examples() {
        let c = cross(&square(), &square()).unwrap();
        let (a, b): (Vec<usize>, Vec<usize>) = (c.blocks[0].clone().collect(), c.blocks[1].clone().collect());
        assert!(verify_componentmix(&c.geograph, &a, &b).unwrap().passed());
        let g = halving_edges(&square());
        assert!(verify_componentmix(&g, &[0, 2], &[1, 3]).unwrap().passed());
        assert!(verify_componentmix(&g, &[0, 1, 2, 3], &[]).unwrap().passed());
        assert!(verify_componentmix(&g, &[0, 2], &[1, 3, 0]).is_err());
    }

    #[test]
    fn subtraction_examples() {
        let c = cross(&square(), &star()).unwrap();
        let sq: Vec<usize> = c.blocks[0].clone().collect();
        assert!(verify_subtraction(&c.geograph, &sq).unwrap().passed());
        assert_eq!(halving_edges(&c.config.subset(&sq).unwrap()).edges(), &[(0, 2), (1, 3)]);

        let e = config(&[(0, 0), (1, 0)]);
        let ee = cross(&e, &e).unwrap().config;
        let eee = cross(&ee, &e).unwrap();
        let p = components(&eee.geograph);
        assert_eq!(p.len(), 3);
        for class in p.classes() {
            assert!(verify_subtraction(&eee.geograph, class).unwrap().passed());
            assert_eq!(halving_edges(&eee.config.subset(class).unwrap()).edges(), &[(0, 1)]);
        }
    }

    #[test]
    fn leftright_and_component_halves_examples() {
        for c in [square(), star(), polygon(6)] {
            let og = OrientedGeograph::with_default_direction(halving_edges(&c));
            assert!(verify_leftright(&og).passed());
            assert!(verify_component_halves(&og).passed());
        }
        let og = OrientedGeograph::new(halving_edges(&star()), Direction::new(Scalar::ratio(1, 8))).unwrap();
        assert!(verify_leftright(&og).passed());
    }

    #[test]
    fn non_underlying_geograph_fails_with_witnesses() {
        // The square's sides instead of its diagonals.
        let g = Geograph::new(square(), vec![(0, 1), (2, 3)]).unwrap();
        let rec = verify_balance_theorem(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(rec.status, Status::Fail);
        assert_eq!(rec.witness.unwrap().edges, vec![(0, 1)]);
        let mix = verify_componentmix(&g, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(mix.status, Status::Fail);
        // Each side alone is its own underlying geograph, so subtraction and
        // the degree checks cannot tell; a star at one corner breaks leftright.
        assert!(verify_subtraction(&g, &[0, 1]).unwrap().passed());
        let bad = Geograph::new(square(), vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let og = OrientedGeograph::with_default_direction(bad);
        assert_eq!(verify_leftright(&og).status, Status::Fail);
    }

    #[test]
    fn report_serializes() {
        let r = audit(&star());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"report-only\""));
        let back: AuditReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn cross_likeness_reports_per_component() {
        let c = cross(&star(), &square()).unwrap();
        let r = audit(&c.config);
        assert!(r.passed(), "{}", r.to_text());
        let rec = r.check("cross-likeness").unwrap();
        assert_eq!(
            rec.detail,
            "all 3 components cut their complement into one common pair of halves"
        );
    }
}
