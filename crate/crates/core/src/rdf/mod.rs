//! Rainbow assignments: color sets per vertex, the rainbow domination test,
//! weights and census counts.

mod io;

pub use io::{parse_assignment, serialize_assignment};

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest supported number of colors.
pub const MAX_COLORS: usize = 16;

/// A subset of `{1, ..., 16}`; color `c` is bit `c - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u16);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u16) -> Self {
        ColorSet(bits)
    }

    /// `{1, ..., t}`.
    pub fn full(t: usize) -> Self {
        debug_assert!(t <= MAX_COLORS);
        ColorSet(((1u32 << t) - 1) as u16)
    }

    /// Panics on colors outside `1..=16`.
    pub fn from_colors<I: IntoIterator<Item = usize>>(colors: I) -> Self {
        let mut bits = 0u16;
        for c in colors {
            assert!((1..=MAX_COLORS).contains(&c), "color {c} out of range");
            bits |= 1 << (c - 1);
        }
        ColorSet(bits)
    }

    pub fn single(c: usize) -> Self {
        ColorSet::from_colors([c])
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: usize) -> bool {
        (1..=MAX_COLORS).contains(&c) && self.0 & (1 << (c - 1)) != 0
    }

    pub fn max_color(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: ColorSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(&mut self, c: usize) {
        *self = self.union(ColorSet::single(c));
    }

    pub fn remove(&mut self, c: usize) {
        *self = self.difference(ColorSet::single(c));
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_COLORS).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A color count `t` together with one [`ColorSet`] per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RainbowAssignment {
    t: usize,
    colors: Vec<ColorSet>,
}

impl RainbowAssignment {
    pub fn new(t: usize, colors: Vec<ColorSet>) -> Result<Self> {
        if !(1..=MAX_COLORS).contains(&t) {
            return Err(Error::domain(format!("color count t = {t} outside 1..={MAX_COLORS}")));
        }
        let full = ColorSet::full(t);
        if let Some((v, s)) = colors.iter().enumerate().find(|(_, s)| !s.difference(full).is_empty()) {
            return Err(Error::input(format!(
                "vertex {v} carries color {} > t = {t}",
                s.difference(full).max_color()
            )));
        }
        Ok(RainbowAssignment { t, colors })
    }

    /// Every vertex uncolored.
    pub fn empty(t: usize, n_vertices: usize) -> Result<Self> {
        RainbowAssignment::new(t, vec![ColorSet::EMPTY; n_vertices])
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[ColorSet] {
        &self.colors
    }

    pub fn get(&self, v: Vertex) -> ColorSet {
        self.colors[v]
    }

    pub fn into_colors(self) -> Vec<ColorSet> {
        self.colors
    }

    pub fn weight(&self) -> usize {
        weight(self)
    }

    /// Vertices with a nonempty set.
    pub fn colored(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.colors.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(v, _)| v)
    }

    /// Renames color `c` to `perm[c - 1]`; `perm` must be a permutation of
    /// `1..=t`.
    pub fn permute_colors(&self, perm: &[usize]) -> RainbowAssignment {
        assert_eq!(perm.len(), self.t);
        let colors = self
            .colors
            .iter()
            .map(|s| ColorSet::from_colors(s.iter().map(|c| perm[c - 1])))
            .collect();
        RainbowAssignment { t: self.t, colors }
    }

    /// Same sets, reinterpreted under a different color count.
    pub fn with_t(&self, t: usize) -> Result<RainbowAssignment> {
        RainbowAssignment::new(t, self.colors.clone())
    }
}

pub fn weight(a: &RainbowAssignment) -> usize {
    a.colors.iter().map(|s| s.len()).sum()
}

/// An uncolored vertex together with the colors absent from its
/// neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub missing: ColorSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "violations", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(Vec<Violation>),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Pass => &[],
            Verdict::Fail(v) => v,
        }
    }
}

fn check_length(g: &Graph, a: &RainbowAssignment) -> Result<()> {
    if a.len() != g.n_vertices() {
        return Err(Error::input(format!(
            "assignment covers {} vertices, graph has {}",
            a.len(),
            g.n_vertices()
        )));
    }
    Ok(())
}

/// Union of the neighbors' sets.
pub fn neighborhood_colors(g: &Graph, a: &RainbowAssignment, v: Vertex) -> ColorSet {
    g.neighbors(v)
        .iter()
        .fold(ColorSet::EMPTY, |acc, &w| acc.union(a.get(w)))
}

/// Checks that every uncolored vertex sees all `t` colors among its
/// neighbors. Failures list every offending vertex, not just the first.
pub fn verify_trdf(g: &Graph, a: &RainbowAssignment) -> Result<Verdict> {
    check_length(g, a)?;
    let full = ColorSet::full(a.t);
    let violations: Vec<_> = (0..g.n_vertices())
        .filter(|&v| a.get(v).is_empty())
        .filter_map(|v| {
            let missing = full.difference(neighborhood_colors(g, a, v));
            (!missing.is_empty()).then_some(Violation { vertex: v, missing })
        })
        .collect();
    Ok(if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail(violations)
    })
}

/// Convenience wrapper turning a failed verdict into [`Error::Contract`].
pub fn require_trdf(g: &Graph, a: &RainbowAssignment) -> Result<()> {
    match verify_trdf(g, a)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(violations) => Err(Error::Contract {
            reason: format!("assignment is not a {}-rainbow dominating function", a.t),
            violations,
        }),
    }
}

pub fn is_singleton(a: &RainbowAssignment) -> bool {
    a.colors.iter().all(|s| s.len() <= 1)
}

/// Vertex counts by set size and color-class sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    /// `by_size[i]` = number of vertices carrying exactly `i` colors, `i = 0..=t`.
    pub by_size: Vec<usize>,
    /// `class_sizes[c - 1]` = number of vertices carrying color `c`.
    pub class_sizes: Vec<usize>,
}

impl Census {
    pub fn n(&self, i: usize) -> usize {
        self.by_size.get(i).copied().unwrap_or(0)
    }

    pub fn class(&self, c: usize) -> usize {
        self.class_sizes[c - 1]
    }

    pub fn colored(&self) -> usize {
        self.by_size.iter().skip(1).sum()
    }
}

pub fn census(a: &RainbowAssignment) -> Census {
    let mut by_size = vec![0; a.t + 1];
    let mut class_sizes = vec![0; a.t];
    for s in &a.colors {
        by_size[s.len()] += 1;
        for c in s.iter() {
            class_sizes[c - 1] += 1;
        }
    }
    Census { by_size, class_sizes }
}

// Color c precedes color d when, at the first vertex where their
// memberships differ, c is present.
fn class_order(a: &[Vertex], b: &[Vertex]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    b.len().cmp(&a.len())
}

/// The color permutation that canonicalizes `a`: `perm[c - 1]` is the new
/// name of color `c`.
///
/// Colors are ranked by their membership vectors over vertices `0, 1, ...`,
/// a color present earlier ranking first. This is the permutation making
/// the vertex-major sequence of sets lexicographically least when a set
/// containing smaller colors counts as smaller.
pub fn canonical_permutation(a: &RainbowAssignment) -> Vec<usize> {
    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); a.t];
    for (v, s) in a.colors.iter().enumerate() {
        for c in s.iter() {
            classes[c - 1].push(v);
        }
    }
    let mut order: Vec<usize> = (0..a.t).collect();
    order.sort_by(|&x, &y| class_order(&classes[x], &classes[y]).then(x.cmp(&y)));
    let mut perm = vec![0; a.t];
    for (rank, &c) in order.iter().enumerate() {
        perm[c] = rank + 1;
    }
    perm
}

pub fn canonicalize_colors(a: &RainbowAssignment) -> RainbowAssignment {
    a.permute_colors(&canonical_permutation(a))
}
