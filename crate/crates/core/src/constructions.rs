//! Explicit rainbow dominating functions: the 6-periodic extremal patterns
//! on `P(n,k)`, the one-color lift, and the 4-rainbow function of the
//! 36-vertex example graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{example_layout, Graph, PetersenParams, K4_PAIRS};
use crate::rdf::{census, require_trdf, ColorSet, RainbowAssignment, MAX_COLORS};

/// Three pairwise disjoint nonempty color sets covering `{1, ..., t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriPartition {
    t: usize,
    parts: [ColorSet; 3],
}

impl TriPartition {
    pub fn new(t: usize, a: ColorSet, b: ColorSet, c: ColorSet) -> Result<Self> {
        if !(3..=MAX_COLORS).contains(&t) {
            return Err(Error::domain(format!("a tri-partition needs 3 <= t <= {MAX_COLORS}, got {t}")));
        }
        if [a, b, c].iter().any(|s| s.is_empty()) {
            return Err(Error::domain("tri-partition parts must be nonempty"));
        }
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::domain(format!("parts {a}, {b}, {c} overlap")));
        }
        if a.union(b).union(c) != ColorSet::full(t) {
            return Err(Error::domain(format!("parts {a}, {b}, {c} do not cover 1..={t}")));
        }
        Ok(TriPartition { t, parts: [a, b, c] })
    }

    /// Recognizes a tri-partition among three sets, if they form one.
    pub fn from_sets(t: usize, sets: [ColorSet; 3]) -> Option<Self> {
        TriPartition::new(t, sets[0], sets[1], sets[2]).ok()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn a(&self) -> ColorSet {
        self.parts[0]
    }

    pub fn b(&self) -> ColorSet {
        self.parts[1]
    }

    pub fn c(&self) -> ColorSet {
        self.parts[2]
    }

    pub fn parts(&self) -> [ColorSet; 3] {
        self.parts
    }
}

/// `({1},{2},{3})`, `({1,2},{3},{4})` or `({1,2},{3,4},{5})`.
pub fn default_tripartition(t: usize) -> Result<TriPartition> {
    let s = |c: &[usize]| ColorSet::from_colors(c.iter().copied());
    match t {
        3 => TriPartition::new(3, s(&[1]), s(&[2]), s(&[3])),
        4 => TriPartition::new(4, s(&[1, 2]), s(&[3]), s(&[4])),
        5 => TriPartition::new(5, s(&[1, 2]), s(&[3, 4]), s(&[5])),
        _ => Err(Error::domain(format!("default tri-partition defined for t in {{3,4,5}}, got {t}"))),
    }
}

pub(crate) fn check_extremal_params(n: usize, k: usize) -> Result<PetersenParams> {
    if !n.is_multiple_of(6) {
        return Err(Error::domain(format!("extremal pattern needs n = 0 (mod 6), got n = {n}")));
    }
    if k % 6 != 1 && k % 6 != 5 {
        return Err(Error::domain(format!(
            "extremal pattern needs k = 1 or 5 (mod 6), got k = {k} = {} (mod 6)",
            k % 6
        )));
    }
    if k == 0 || 2 * k >= n {
        return Err(Error::domain(format!("extremal pattern needs 1 <= k < n/2, got k = {k}, n = {n}")));
    }
    PetersenParams::new(n, k)
}

/// The 6-periodic pattern on `P(n,k)`:
///
/// ```text
/// outer  u_{6i} = A, u_{6i+2} = B, u_{6i+4} = C, odd u empty
/// inner  v_{6i+1} = C, v_{6i+3} = A, v_{6i+5} = B, even v empty
/// ```
///
/// Every uncolored vertex then sees exactly `A`, `B` and `C`, one set per
/// neighbor, and the weight is `t·n/3`.
pub fn extremal_pattern(n: usize, k: usize, t: usize, p: &TriPartition) -> Result<RainbowAssignment> {
    if !(3..=5).contains(&t) {
        return Err(Error::domain(format!("extremal pattern defined for t in {{3,4,5}}, got {t}")));
    }
    if p.t() != t {
        return Err(Error::domain(format!("tri-partition is over {} colors, t = {t}", p.t())));
    }
    let params = check_extremal_params(n, k)?;
    let mut colors = vec![ColorSet::EMPTY; 2 * n];
    let outer = [p.a(), ColorSet::EMPTY, p.b(), ColorSet::EMPTY, p.c(), ColorSet::EMPTY];
    let inner = [ColorSet::EMPTY, p.c(), ColorSet::EMPTY, p.a(), ColorSet::EMPTY, p.b()];
    for i in 0..n {
        colors[params.outer(i)] = outer[i % 6];
        colors[params.inner(i)] = inner[i % 6];
    }
    RainbowAssignment::new(t, colors)
}

/// Shifts every index of a `P(n,k)` assignment: `u_i -> u_{i+shift}`,
/// `v_i -> v_{i+shift}`.
pub fn rotate_petersen(params: PetersenParams, a: &RainbowAssignment, shift: usize) -> RainbowAssignment {
    relabel_petersen(params, a, |i| (i + shift) % params.n())
}

/// `u_i -> u_{-i}`, `v_i -> v_{-i}`.
pub fn reflect_petersen(params: PetersenParams, a: &RainbowAssignment) -> RainbowAssignment {
    relabel_petersen(params, a, |i| (params.n() - i) % params.n())
}

fn relabel_petersen(
    params: PetersenParams,
    a: &RainbowAssignment,
    map: impl Fn(usize) -> usize,
) -> RainbowAssignment {
    let n = params.n();
    assert_eq!(a.len(), 2 * n);
    let mut colors = vec![ColorSet::EMPTY; 2 * n];
    for i in 0..n {
        colors[params.outer(map(i))] = a.get(params.outer(i));
        colors[params.inner(map(i))] = a.get(params.inner(i));
    }
    RainbowAssignment::new(a.t(), colors).expect("relabeling keeps colors in range")
}

/// Turns an `ℓ`-rainbow dominating function into an `(ℓ+1)`-rainbow one.
///
/// The least-used color `i*` (smallest index on ties) is picked; every
/// uncolored vertex then hands the new color `ℓ+1` to its lowest-id
/// neighbor carrying `i*`. The weight grows by at most `|U_{i*}|`.
pub fn lift(g: &Graph, a: &RainbowAssignment) -> Result<RainbowAssignment> {
    require_trdf(g, a)?;
    let l = a.t();
    if l + 1 > MAX_COLORS {
        return Err(Error::domain(format!("cannot lift past {MAX_COLORS} colors")));
    }
    let classes = census(a).class_sizes;
    let pick = (1..=l).min_by_key(|&c| (classes[c - 1], c)).unwrap();
    let mut colors = a.colors().to_vec();
    for v in 0..g.n_vertices() {
        if !a.get(v).is_empty() {
            continue;
        }
        let u = *g
            .neighbors(v)
            .iter()
            .find(|&&u| a.get(u).contains(pick))
            .expect("verified assignment dominates every uncolored vertex");
        colors[u].insert(l + 1);
    }
    RainbowAssignment::new(l + 1, colors)
}

/// The 4-rainbow function on [`crate::graph::build_example_graph`]: branch
/// vertex `b` of each copy gets `{b+1}`, subdivision vertices stay empty,
/// and each hub gets its own color pair.
pub fn example_4rdf() -> RainbowAssignment {
    use example_layout::*;
    let mut colors = vec![ColorSet::EMPTY; N_VERTICES];
    for copy in 0..COPIES {
        for b in 0..4 {
            colors[branch(copy, b)] = ColorSet::single(b + 1);
        }
    }
    for (p, &(a, b)) in K4_PAIRS.iter().enumerate() {
        colors[hub(p)] = ColorSet::from_colors([a + 1, b + 1]);
    }
    RainbowAssignment::new(4, colors).expect("colors within 1..=4")
}
