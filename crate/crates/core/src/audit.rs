//! Executable checks of the structure forced on extremal rainbow dominating
//! functions of cubic graphs.
//!
//! Minimality of the audited assignment is the caller's claim; nothing here
//! re-solves. A failed verification is reported as a failing `valid_trdf`
//! check so the remaining checks still run.

use serde::Serialize;

use crate::constructions::TriPartition;
use crate::error::{Error, Result};
use crate::graph::{is_cubic, Graph, PetersenParams, Vertex};
use crate::rdf::{census, verify_trdf, ColorSet, RainbowAssignment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
    /// Vertices where the check fails.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<Vertex>,
}

/// Orientation and partition found by [`audit_outer_pattern`]: outer
/// position `i` of the pattern sits at `u_{shift + i}` (or `u_{shift - i}`
/// when reflected).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OuterPattern {
    pub shift: usize,
    pub reflected: bool,
    pub partition: [ColorSet; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<Check>,
    pub overall: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<OuterPattern>,
}

impl AuditReport {
    fn new(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        AuditReport {
            checks,
            overall,
            pattern: None,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, passed: bool, details: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        details: details.into(),
        vertices: vec![],
    }
}

fn check_at(name: &str, ok: &str, bad: Vec<Vertex>, what: &str) -> Check {
    if bad.is_empty() {
        check(name, true, ok)
    } else {
        Check {
            name: name.into(),
            passed: false,
            details: format!("{what} at {}", list(&bad)),
            vertices: bad,
        }
    }
}

fn list(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn contract(reason: String) -> Error {
    Error::Contract {
        reason,
        violations: vec![],
    }
}

fn precondition(g: &Graph, a: &RainbowAssignment, t: usize, num: usize, den: usize) -> Result<()> {
    if a.len() != g.n_vertices() {
        return Err(Error::input(format!(
            "assignment covers {} vertices, graph has {}",
            a.len(),
            g.n_vertices()
        )));
    }
    if !is_cubic(g) {
        return Err(contract("graph is not cubic".into()));
    }
    if a.t() != t {
        return Err(contract(format!("expected a {t}-assignment, got t = {}", a.t())));
    }
    let n = g.n_vertices();
    if a.weight() * den != num * n {
        return Err(contract(format!(
            "weight {} is not the extremal {num}/{den} * {n}",
            a.weight()
        )));
    }
    Ok(())
}

fn valid(g: &Graph, a: &RainbowAssignment) -> Result<Check> {
    let verdict = verify_trdf(g, a)?;
    let bad: Vec<Vertex> = verdict.violations().iter().map(|v| v.vertex).collect();
    Ok(check_at("valid_trdf", "every uncolored vertex sees all colors", bad, "colors missing"))
}

fn half_colored(g: &Graph, a: &RainbowAssignment) -> Check {
    let colored = a.colored().count();
    let n = g.n_vertices();
    check(
        "half_colored",
        2 * colored == n,
        format!("{colored} of {n} vertices colored"),
    )
}

fn vanishing(a: &RainbowAssignment, sizes: &[usize]) -> Check {
    let c = census(a);
    let counts: Vec<String> = sizes.iter().map(|&i| format!("n_{i} = {}", c.n(i))).collect();
    check(
        &format!("n{}_vanish", sizes.iter().map(|i| i.to_string()).collect::<String>()),
        sizes.iter().all(|&i| c.n(i) == 0),
        counts.join(", "),
    )
}

/// Uncolored vertices whose neighbor sets are not a partition of the full
/// color set into nonempty blocks.
fn partition_failures(g: &Graph, a: &RainbowAssignment) -> Vec<Vertex> {
    let full = ColorSet::full(a.t());
    (0..g.n_vertices())
        .filter(|&v| a.get(v).is_empty())
        .filter(|&v| {
            let mut seen = ColorSet::EMPTY;
            for &w in g.neighbors(v) {
                let s = a.get(w);
                if s.is_empty() || !s.is_disjoint(seen) {
                    return true;
                }
                seen = seen.union(s);
            }
            seen != full
        })
        .collect()
}

fn neighbor_partition(g: &Graph, a: &RainbowAssignment) -> Check {
    check_at(
        "neighbor_partition",
        "neighbor sets of every uncolored vertex partition the colors",
        partition_failures(g, a),
        "no partition",
    )
}

/// Edges inside the colored class and inside the uncolored class.
fn same_class_edges(g: &Graph, a: &RainbowAssignment) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut colored = vec![];
    let mut uncolored = vec![];
    for (x, y) in g.edges() {
        match (a.get(x).is_empty(), a.get(y).is_empty()) {
            (false, false) => colored.extend([x, y]),
            (true, true) => uncolored.extend([x, y]),
            _ => {}
        }
    }
    for v in [&mut colored, &mut uncolored] {
        v.sort_unstable();
        v.dedup();
    }
    (colored, uncolored)
}

/// Structure of a 4-rainbow function of weight `2|V|/3` on a cubic graph.
pub fn audit_extremal_4(g: &Graph, a: &RainbowAssignment) -> Result<AuditReport> {
    precondition(g, a, 4, 2, 3)?;
    let n = g.n_vertices();
    let c = census(a);
    let census_ok = 3 * c.n(1) == n && 6 * c.n(2) == n && c.n(3) == 0 && c.n(4) == 0;
    let (inside_colored, inside_uncolored) = same_class_edges(g, a);
    let mut bad = inside_colored;
    bad.extend(inside_uncolored);
    bad.sort_unstable();
    bad.dedup();
    Ok(AuditReport::new(vec![
        valid(g, a)?,
        half_colored(g, a),
        check(
            "census",
            census_ok,
            format!(
                "n_1 = {}, n_2 = {}, n_3 = {}, n_4 = {} (|V| = {n})",
                c.n(1),
                c.n(2),
                c.n(3),
                c.n(4)
            ),
        ),
        check_at(
            "bipartition",
            "every edge joins a colored and an uncolored vertex",
            bad,
            "edge inside a class",
        ),
        neighbor_partition(g, a),
    ]))
}

/// Structure of a 5-rainbow function of weight `5|V|/6` on a cubic graph.
pub fn audit_extremal_5(g: &Graph, a: &RainbowAssignment) -> Result<AuditReport> {
    precondition(g, a, 5, 5, 6)?;
    let (inside_colored, _) = same_class_edges(g, a);
    Ok(AuditReport::new(vec![
        valid(g, a)?,
        half_colored(g, a),
        check_at(
            "colored_independent",
            "no two colored vertices are adjacent",
            inside_colored,
            "adjacent colored vertices",
        ),
        neighbor_partition(g, a),
        vanishing(a, &[4, 5]),
    ]))
}

/// Finds the outer-cycle pattern `A-0-B-0-C-0` of period 6, trying every
/// rotation and both reflections.
///
/// The assignment must have weight `t·n/3` (`t in 3..=5`) and partition
/// property at every uncolored vertex; otherwise this is a contract error.
pub fn audit_outer_pattern(params: PetersenParams, a: &RainbowAssignment) -> Result<AuditReport> {
    let g = crate::graph::build_generalized_petersen(params);
    let (n, t) = (params.n(), a.t());
    if a.len() != g.n_vertices() {
        return Err(Error::input(format!(
            "assignment covers {} vertices, P({n},{}) has {}",
            a.len(),
            params.k(),
            g.n_vertices()
        )));
    }
    if !(3..=5).contains(&t) {
        return Err(contract(format!("outer pattern audit covers t in 3..=5, got {t}")));
    }
    if 3 * a.weight() != t * n {
        return Err(contract(format!("weight {} is not the extremal t·n/3 = {t}·{n}/3", a.weight())));
    }
    let failures = partition_failures(&g, a);
    if !failures.is_empty() {
        return Err(contract(format!(
            "neighbor sets do not partition the colors at {}",
            list(&failures)
        )));
    }

    let mut checks = vec![check(
        "neighbor_partition",
        true,
        "neighbor sets of every uncolored vertex partition the colors",
    )];
    let outer = |i: usize| a.get(params.outer(i % n));
    let mut found = None;
    if n % 6 == 0 {
        'search: for reflected in [false, true] {
            for shift in 0..n {
                let at = |i: usize| {
                    if reflected {
                        outer(shift + n - i % n)
                    } else {
                        outer(shift + i)
                    }
                };
                let periodic = (0..n).all(|i| at(i) == at(i % 6));
                let gaps = [1, 3, 5].iter().all(|&i| at(i).is_empty());
                if periodic && gaps {
                    if let Some(p) = TriPartition::from_sets(t, [at(0), at(2), at(4)]) {
                        found = Some(OuterPattern {
                            shift,
                            reflected,
                            partition: p.parts(),
                        });
                        break 'search;
                    }
                }
            }
        }
    }
    checks.push(check(
        "period_6",
        found.is_some(),
        match &found {
            Some(p) => format!(
                "A-0-B-0-C-0 from u_{}{}, A = {}, B = {}, C = {}",
                p.shift,
                if p.reflected { " reflected" } else { "" },
                p.partition[0],
                p.partition[1],
                p.partition[2]
            ),
            None if n % 6 != 0 => format!("n = {n} is not a multiple of 6"),
            None => "no rotation or reflection matches A-0-B-0-C-0".into(),
        },
    ));
    let mut report = AuditReport::new(checks);
    report.pattern = found;
    Ok(report)
}

/// Below `3|V|/4` a minimum 4-rainbow function has `n_3 = n_4 = 0`; below
/// `|V|` a minimum 5-rainbow function has `n_4 = n_5 = 0`. Other cases pass
/// vacuously.
pub fn audit_weight_census_bounds(a: &RainbowAssignment, g: &Graph, t: usize) -> Result<AuditReport> {
    if a.t() != t {
        return Err(Error::input(format!("assignment uses t = {}, expected {t}", a.t())));
    }
    let n = g.n_vertices();
    let w = a.weight();
    let mut checks = vec![valid(g, a)?];
    match t {
        4 if 4 * w < 3 * n => checks.push(vanishing(a, &[3, 4])),
        5 if w < n => checks.push(vanishing(a, &[4, 5])),
        _ => checks.push(check("census_bound", true, format!("vacuous: weight {w} at t = {t}"))),
    }
    Ok(AuditReport::new(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{default_tripartition, extremal_pattern, rotate_petersen};
    use crate::graph::build_generalized_petersen;

    fn pattern(n: usize, t: usize) -> (PetersenParams, Graph, RainbowAssignment) {
        let p = PetersenParams::new(n, 1).unwrap();
        let a = extremal_pattern(n, 1, t, &default_tripartition(t).unwrap()).unwrap();
        (p, build_generalized_petersen(p), a)
    }

    #[test]
    fn pattern_passes_both_audits() {
        let (_, g, a) = pattern(12, 4);
        let r = audit_extremal_4(&g, &a).unwrap();
        assert!(r.overall, "{r:?}");
        let (_, g, a) = pattern(6, 5);
        assert!(audit_extremal_5(&g, &a).unwrap().overall);
    }

    #[test]
    fn perturbed_pattern_fails_the_partition_check() {
        let (p, g, a) = pattern(12, 4);
        let mut sets = a.into_colors();
        sets.swap(p.outer(0), p.outer(1));
        let a = RainbowAssignment::new(4, sets).unwrap();
        let r = audit_extremal_4(&g, &a).unwrap();
        assert!(!r.overall);
        let c = r.check("neighbor_partition").unwrap();
        assert!(!c.passed && c.vertices.contains(&p.outer(0)), "{c:?}");
    }

    #[test]
    fn wrong_weight_is_a_contract_error() {
        let (p, g, a) = pattern(6, 4);
        let mut sets = a.into_colors();
        sets[p.outer(1)] = ColorSet::single(1);
        let a = RainbowAssignment::new(4, sets).unwrap();
        assert!(matches!(audit_extremal_4(&g, &a), Err(Error::Contract { .. })));
    }

    #[test]
    fn outer_pattern_is_found_in_every_rotation() {
        let (p, _, a) = pattern(12, 3);
        for shift in 0..12 {
            let r = audit_outer_pattern(p, &rotate_petersen(p, &a, shift)).unwrap();
            assert!(r.overall, "shift {shift}: {r:?}");
        }
        let r = audit_outer_pattern(p, &a).unwrap();
        let found = r.pattern.unwrap();
        assert_eq!((found.shift, found.reflected), (0, false));
    }

    #[test]
    fn detected_partition_regenerates_the_pattern() {
        let (p, g, a) = pattern(18, 5);
        let r = audit_outer_pattern(p, &rotate_petersen(p, &a, 5)).unwrap();
        let [x, y, z] = r.pattern.unwrap().partition;
        let again = extremal_pattern(18, 1, 5, &TriPartition::new(5, x, y, z).unwrap()).unwrap();
        assert_eq!(again.weight(), a.weight());
        assert!(verify_trdf(&g, &again).unwrap().passed());
    }

    #[test]
    fn audits_ignore_color_names() {
        let (_, g, a) = pattern(12, 5);
        let b = a.permute_colors(&[3, 5, 1, 2, 4]);
        assert_eq!(audit_extremal_5(&g, &a).unwrap().overall, audit_extremal_5(&g, &b).unwrap().overall);
    }

    #[test]
    fn census_bounds() {
        let (_, g, a) = pattern(6, 4);
        let r = audit_weight_census_bounds(&a, &g, 4).unwrap();
        assert!(r.overall && r.check("n34_vanish").is_some());
        let heavy = RainbowAssignment::new(4, vec![ColorSet::single(1); 12]).unwrap();
        let r = audit_weight_census_bounds(&heavy, &g, 4).unwrap();
        assert!(r.overall && r.check("census_bound").unwrap().details.starts_with("vacuous"));
    }
}
