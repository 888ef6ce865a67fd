//! Branch and bound over vertices with a shared, deterministic incumbent.
//!
//! The tree is cut into subtrees (in DFS order) that run on the rayon pool.
//! The shared best packs `(weight, subtree)`; a subtree abandons nodes that
//! can only tie a lower-indexed subtree, so the returned witness is the first
//! optimum in DFS order whatever the thread count.

use std::cmp::Reverse;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::bound::{ceil_div, Discharge};
use super::{Method, SearchBudget, SolveResult, SolveStats};
use crate::bounds::generic_lower_bound;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rdf::{verify_trdf, ColorSet, RainbowAssignment, MAX_COLORS};

const SUBTREES: usize = 256;
const FLUSH: u64 = 1024;
const HINT: u64 = u32::MAX as u64;

#[derive(Clone, Debug, Default)]
pub struct BranchBoundOptions {
    /// Starting incumbent; must be a valid assignment for the same `t`.
    pub hint: Option<RainbowAssignment>,
}

pub fn solve_branch_bound(g: &Graph, t: usize, budget: SearchBudget) -> Result<SolveResult> {
    solve_branch_bound_with(g, t, budget, &BranchBoundOptions::default())
}

/// Order: maximum degree first, then the vertex closing the most
/// neighborhoods, then most placed neighbors, earliest placed neighbor,
/// degree, and lowest id.
pub(crate) fn vertex_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n_vertices();
    let mut pos = vec![usize::MAX; n];
    let mut placed_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let key = |v: Vertex| {
            let closing = usize::from(placed_nbrs[v] == g.degree(v))
                + g.neighbors(v)
                    .iter()
                    .filter(|&&w| pos[w] != usize::MAX && placed_nbrs[w] + 1 == g.degree(w))
                    .count();
            let earliest = g.neighbors(v).iter().map(|&w| pos[w]).min().unwrap_or(usize::MAX);
            (closing, placed_nbrs[v], Reverse(earliest), g.degree(v), Reverse(v))
        };
        let connected = (0..n).any(|v| pos[v] == usize::MAX && placed_nbrs[v] > 0);
        let v = (0..n)
            .filter(|&v| pos[v] == usize::MAX && (!connected || placed_nbrs[v] > 0))
            .max_by_key(|&v| if connected { key(v) } else { (0, 0, Reverse(0), g.degree(v), Reverse(v)) })
            .unwrap();
        pos[v] = step;
        order.push(v);
        for &w in g.neighbors(v) {
            placed_nbrs[w] += 1;
        }
    }
    order
}

/// Sets allowed once `m` colors are in use, by size then value: new colors
/// must be exactly `m+1, ..., m+j`.
fn branch_sets(t: usize) -> Vec<Vec<u16>> {
    (0..=t)
        .map(|m| {
            let mut sets: Vec<u16> = (0..1u32 << t)
                .filter(|&x| {
                    let hi = x >> m;
                    hi & (hi + 1) == 0
                })
                .map(|x| x as u16)
                .collect();
            sets.sort_by_key(|&x| (x.count_ones(), x));
            sets
        })
        .collect()
}

struct Problem<'g> {
    g: &'g Graph,
    full: u16,
    order: Vec<Vertex>,
    sets: Vec<Vec<u16>>,
    dis: Discharge,
}

#[derive(Clone)]
struct State {
    set: Vec<u16>,
    assigned: Vec<bool>,
    seen: Vec<u16>,
    open: Vec<u8>,
    term: Vec<i64>,
    lb: i64,
    weight: u64,
    used: usize,
    undo: Vec<u16>,
}

impl State {
    fn new(p: &Problem<'_>) -> Self {
        let n = p.g.n_vertices();
        let mut s = State {
            set: vec![0; n],
            assigned: vec![false; n],
            seen: vec![0; n],
            open: (0..n).map(|v| p.g.degree(v) as u8).collect(),
            term: vec![0; n],
            lb: 0,
            weight: 0,
            used: 0,
            undo: vec![],
        };
        for v in 0..n {
            s.term[v] = s.compute_term(p, v);
            s.lb += s.term[v];
        }
        s
    }

    fn compute_term(&self, p: &Problem<'_>, v: Vertex) -> i64 {
        let missing = (p.full & !self.seen[v]).count_ones() as usize;
        let open = self.open[v] as usize;
        if !self.assigned[v] {
            p.dis.unassigned(p.g.degree(v), missing, open)
        } else if self.set[v] == 0 {
            p.dis.uncolored(missing, open)
        } else {
            0
        }
    }

    fn refresh(&mut self, p: &Problem<'_>, v: Vertex) {
        let new = self.compute_term(p, v);
        self.lb += new - self.term[v];
        self.term[v] = new;
    }

    fn apply(&mut self, p: &Problem<'_>, v: Vertex, x: u16) {
        self.assigned[v] = true;
        self.set[v] = x;
        self.weight += x.count_ones() as u64;
        self.undo.push(self.used as u16);
        self.used = self.used.max(16 - x.leading_zeros() as usize);
        for &w in p.g.neighbors(v) {
            self.undo.push(self.seen[w]);
            self.seen[w] |= x;
            self.open[w] -= 1;
            self.refresh(p, w);
        }
        self.refresh(p, v);
    }

    fn revert(&mut self, p: &Problem<'_>, v: Vertex) {
        for &w in p.g.neighbors(v).iter().rev() {
            self.seen[w] = self.undo.pop().unwrap();
            self.open[w] += 1;
            self.refresh(p, w);
        }
        self.used = self.undo.pop().unwrap() as usize;
        self.weight -= self.set[v].count_ones() as u64;
        self.assigned[v] = false;
        self.set[v] = 0;
        self.refresh(p, v);
    }

    fn bound(&self) -> u64 {
        self.weight + ceil_div(self.lb.max(0))
    }
}

struct Shared {
    best: AtomicU64,
    nodes: AtomicU64,
    abort: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl Shared {
    fn publish(&self, weight: u64, subtree: u64) {
        self.best.fetch_min((weight << 32) | subtree, Ordering::Relaxed);
    }

    fn flush(&self, local: &mut u64) {
        let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.budget.max_nodes || self.start.elapsed() > self.budget.max_elapsed {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

struct Worker<'a, 'g> {
    p: &'a Problem<'g>,
    shared: &'a Shared,
    subtree: u64,
    best: u64,
    witness: Option<Vec<u16>>,
    nodes: u64,
}

impl Worker<'_, '_> {
    fn pruned(&self, b: u64) -> bool {
        if b >= self.best {
            return true;
        }
        let g = self.shared.best.load(Ordering::Relaxed);
        let (gw, gi) = (g >> 32, g & 0xffff_ffff);
        b > gw || (b == gw && self.subtree >= gi)
    }

    fn dfs(&mut self, s: &mut State, depth: usize) {
        self.nodes += 1;
        if self.nodes >= FLUSH {
            self.shared.flush(&mut self.nodes);
        }
        if self.shared.abort.load(Ordering::Relaxed) {
            return;
        }
        if depth == self.p.order.len() {
            self.best = s.weight;
            self.witness = Some(s.set.clone());
            self.shared.publish(s.weight, self.subtree);
            return;
        }
        let v = self.p.order[depth];
        let sets = &self.p.sets[s.used];
        for &x in sets {
            if self.pruned(s.weight + x.count_ones() as u64) {
                break;
            }
            s.apply(self.p, v, x);
            if !self.pruned(s.bound()) {
                self.dfs(s, depth + 1);
            }
            s.revert(self.p, v);
        }
    }
}

pub fn solve_branch_bound_with(
    g: &Graph,
    t: usize,
    budget: SearchBudget,
    options: &BranchBoundOptions,
) -> Result<SolveResult> {
    let start = Instant::now();
    if !(1..=MAX_COLORS).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside 1..={MAX_COLORS}")));
    }
    if g.max_degree() > u8::MAX as usize {
        return Err(Error::domain("maximum degree above 255"));
    }
    let n = g.n_vertices();
    let (mut incumbent, mut incumbent_set) = (n as u64, vec![1u16; n]);
    if let Some(h) = &options.hint {
        if h.t() != t {
            return Err(Error::input(format!("hint is a {}-assignment, expected t = {t}", h.t())));
        }
        if !verify_trdf(g, h)?.passed() {
            return Err(Error::input("hint is not a valid rainbow dominating function"));
        }
        if (h.weight() as u64) < incumbent {
            incumbent = h.weight() as u64;
            incumbent_set = h.colors().iter().map(|c| c.bits()).collect();
        }
    }

    let p = Problem {
        g,
        full: ColorSet::full(t).bits(),
        order: vertex_order(g),
        sets: branch_sets(t),
        dis: Discharge::new(t, g.max_degree()),
    };
    let mut proven = p.dis.root(g);
    if let Some(d) = g.regular_degree().filter(|&d| d > 0) {
        proven = proven.max(generic_lower_bound(n as u64, d as u64, t as u64));
    }

    let shared = Shared {
        best: AtomicU64::new((incumbent << 32) | HINT),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        start,
        budget,
    };

    let finish = |optimum: u64, sets: Vec<u16>, nodes: u64| -> Result<SolveResult> {
        let witness = RainbowAssignment::new(t, sets.into_iter().map(ColorSet::from_bits).collect())?;
        Ok(SolveResult {
            optimum,
            witness,
            method: Method::BranchBound,
            stats: SolveStats { nodes, states: 0 },
            elapsed: start.elapsed(),
        })
    };

    if incumbent <= proven {
        return finish(incumbent, incumbent_set, 0);
    }

    // Split the tree into subtrees, level by level, keeping DFS order.
    let mut prefixes: Vec<Vec<u16>> = vec![vec![]];
    let mut depth = 0;
    let mut split_nodes = 0u64;
    while prefixes.len() < SUBTREES && depth < n {
        let v = p.order[depth];
        let mut next = vec![];
        for prefix in &prefixes {
            let mut s = State::new(&p);
            for (d, &x) in prefix.iter().enumerate() {
                s.apply(&p, p.order[d], x);
            }
            for &x in &p.sets[s.used] {
                if s.weight + x.count_ones() as u64 >= incumbent {
                    break;
                }
                split_nodes += 1;
                s.apply(&p, v, x);
                if s.bound() < incumbent {
                    let mut child = prefix.clone();
                    child.push(x);
                    next.push(child);
                }
                s.revert(&p, v);
            }
        }
        prefixes = next;
        depth += 1;
    }
    shared.nodes.fetch_add(split_nodes, Ordering::Relaxed);

    let outcomes: Vec<(u64, Option<Vec<u16>>)> = prefixes
        .par_iter()
        .enumerate()
        .map(|(j, prefix)| {
            let mut s = State::new(&p);
            for (d, &x) in prefix.iter().enumerate() {
                s.apply(&p, p.order[d], x);
            }
            let mut w = Worker {
                p: &p,
                shared: &shared,
                subtree: j as u64,
                best: incumbent,
                witness: None,
                nodes: 0,
            };
            if !w.pruned(s.bound()) {
                w.dfs(&mut s, prefix.len());
            }
            shared.flush(&mut w.nodes);
            (w.best, w.witness)
        })
        .collect();

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let mut best = (incumbent, incumbent_set);
    for (w, sets) in outcomes {
        if let Some(sets) = sets {
            if w < best.0 {
                best = (w, sets);
            }
        }
    }
    if shared.abort.load(Ordering::Relaxed) && best.0 > proven {
        return Err(Error::BudgetExhausted {
            incumbent_weight: best.0,
            incumbent: Some(best.1.into_iter().map(ColorSet::from_bits).collect()),
            proven_lower: proven,
            nodes,
        });
    }
    finish(best.0, best.1, nodes)
}
