//! Cyclic profile dynamic program for `P(n,k)`.
//!
//! The vertices touching the wrap-around (`u_0`, `v_0 .. v_{k-1}`) are
//! seeded first, one seed assignment per run; then columns are placed in
//! order (`u_i`, and `v_i` once `i >= k`). The state is the code of every
//! placed vertex that still has an unplaced neighbor: its color set when
//! colored, otherwise the colors it still misses. A vertex is checked when
//! its last neighbor is placed. Seeds are enumerated up to color
//! permutation and solved in parallel.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::bound::{ceil_div, Discharge};
use super::{petersen_hint, Method, SearchBudget, SolveResult, SolveStats};
use crate::bounds::generic_lower_bound;
use crate::error::{Error, Result};
use crate::graph::{build_generalized_petersen, Graph, PetersenParams, Vertex};
use crate::rdf::{canonicalize_colors, ColorSet, RainbowAssignment, MAX_COLORS};

const SEED_ENUMERATION_LIMIT: u128 = 1 << 24;
const NONE: u32 = u32::MAX;

/// Wrap vertices first, then column by column.
fn column_order(p: PetersenParams) -> (Vec<Vertex>, usize) {
    let (n, k) = (p.n(), p.k());
    let mut order = vec![p.outer(0)];
    order.extend((0..k).map(|i| p.inner(i)));
    for i in 1..n {
        order.push(p.outer(i));
        if i >= k {
            order.push(p.inner(i));
        }
    }
    (order, k + 1)
}

struct Boundary {
    degree: usize,
    open: usize,
    /// New-frontier slots of the placed neighbors.
    slots: Vec<usize>,
}

struct Step {
    /// Previous-frontier slots of the placed neighbors.
    nbr_slots: Vec<usize>,
    /// Previous-frontier slots whose last neighbor this step places.
    closing: Vec<usize>,
    self_closes: bool,
    /// Source of every new-frontier slot: a previous slot, or the new vertex.
    layout: Vec<Option<usize>>,
    frontier: Vec<Vertex>,
    /// Unplaced neighbors of each new-frontier vertex.
    slot_open: Vec<usize>,
    /// Unplaced vertices with a placed neighbor.
    boundary: Vec<Boundary>,
    /// Bound share of the other unplaced vertices.
    rest: i64,
}

struct Plan {
    t: usize,
    width: u32,
    full: u32,
    order: Vec<Vertex>,
    seeds: usize,
    steps: Vec<Step>,
    dis: Discharge,
}

impl Plan {
    fn new(g: &Graph, order: Vec<Vertex>, seeds: usize, t: usize) -> Self {
        let n = g.n_vertices();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut placed_nbrs = vec![0usize; n];
        let mut frontier: Vec<Vertex> = vec![];
        let mut steps = Vec::with_capacity(n);
        let dis = Discharge::new(t, g.max_degree());
        for &x in &order {
            let slot = |v: Vertex| frontier.iter().position(|&f| f == v).unwrap();
            let nbr_slots: Vec<usize> = g
                .neighbors(x)
                .iter()
                .filter(|&&w| pos[w] < pos[x])
                .map(|&w| slot(w))
                .collect();
            for &w in g.neighbors(x) {
                placed_nbrs[w] += 1;
            }
            let closing: Vec<usize> = g
                .neighbors(x)
                .iter()
                .filter(|&&w| pos[w] < pos[x] && placed_nbrs[w] == g.degree(w))
                .map(|&w| slot(w))
                .collect();
            let self_closes = placed_nbrs[x] == g.degree(x);
            let mut layout: Vec<Option<usize>> = (0..frontier.len())
                .filter(|j| !closing.contains(j))
                .map(Some)
                .collect();
            let mut next: Vec<Vertex> = layout.iter().map(|j| frontier[j.unwrap()]).collect();
            if !self_closes {
                layout.push(None);
                next.push(x);
            }
            let placed = |v: Vertex| pos[v] <= pos[x];
            let open = |v: Vertex| g.neighbors(v).iter().filter(|&&w| !placed(w)).count();
            let slot_open = next.iter().map(|&v| open(v)).collect();
            let mut boundary = vec![];
            let mut rest = 0;
            for v in (0..n).filter(|&v| !placed(v)) {
                let slots: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| placed(w))
                    .map(|&w| next.iter().position(|&f| f == w).unwrap())
                    .collect();
                if slots.is_empty() {
                    rest += dis.unassigned(g.degree(v), t, g.degree(v));
                } else {
                    boundary.push(Boundary {
                        degree: g.degree(v),
                        open: open(v),
                        slots,
                    });
                }
            }
            frontier = next.clone();
            steps.push(Step {
                nbr_slots,
                closing,
                self_closes,
                layout,
                frontier: next,
                slot_open,
                boundary,
                rest,
            });
        }
        Plan {
            t,
            width: t as u32 + 1,
            full: (1u32 << t) - 1,
            order,
            seeds,
            steps,
            dis,
        }
    }

    /// Lower bound on the weight still to be placed after `step`, given the
    /// new frontier codes.
    fn remaining(&self, step: &Step, codes: &[u32]) -> u64 {
        let colored_bit = 1u32 << self.t;
        let mut charge = step.rest;
        for (j, &c) in codes.iter().enumerate() {
            if c & colored_bit == 0 {
                charge += self.dis.uncolored(c.count_ones() as usize, step.slot_open[j]);
            }
        }
        for b in &step.boundary {
            let seen = b
                .slots
                .iter()
                .filter(|&&j| codes[j] & colored_bit != 0)
                .fold(0, |acc, &j| acc | codes[j]);
            let missing = (self.full & !seen).count_ones() as usize;
            charge += self.dis.unassigned(b.degree, missing, b.open);
        }
        ceil_div(charge.max(0))
    }

    fn max_slots(&self) -> usize {
        self.steps.iter().map(|s| s.frontier.len()).max().unwrap_or(0)
    }

    /// Upper estimate of the widest layer for one seed.
    fn seed_estimate(&self, seed: &[u16]) -> u128 {
        let running = (1u128 << (self.t + 1)) - 1;
        let per_seed_slot = |v: Vertex| {
            let i = self.order.iter().position(|&o| o == v).unwrap();
            match seed.get(i) {
                Some(0) => 1u128 << self.t,
                Some(_) => 1,
                None => running,
            }
        };
        self.steps
            .iter()
            .map(|s| s.frontier.iter().fold(1u128, |acc, &v| acc.saturating_mul(per_seed_slot(v))))
            .max()
            .unwrap_or(1)
    }
}

struct Control<'a> {
    budget: &'a SearchBudget,
    start: Instant,
    states: AtomicU64,
    abort: AtomicBool,
}

impl Control<'_> {
    fn charge(&self, states: u64) -> bool {
        self.states.fetch_add(states, Ordering::Relaxed);
        if self.start.elapsed() > self.budget.max_elapsed {
            self.abort.store(true, Ordering::Relaxed);
        }
        !self.abort.load(Ordering::Relaxed)
    }
}

/// Optimum for one seed with weight at most `ub`, with its assignment in
/// plan order.
fn run_seed(plan: &Plan, seed: &[u16], ub: u64, ctl: &Control<'_>) -> Option<(u64, Vec<u16>)> {
    let w = plan.width;
    let code_mask = (1u128 << w) - 1;
    let colored_bit = 1u32 << plan.t;
    let mut states: Vec<u128> = vec![0];
    let mut weights: Vec<u32> = vec![0];
    let mut history: Vec<(Vec<u32>, Vec<u16>)> = Vec::with_capacity(plan.steps.len());
    let mut codes = vec![0u32; plan.max_slots() + 1];
    let mut next_codes: Vec<u32> = Vec::with_capacity(plan.max_slots() + 1);
    let all_sets: Vec<u16> = (0..=plan.full as u16).collect();

    for (si, step) in plan.steps.iter().enumerate() {
        let choices: &[u16] = if si < plan.seeds { std::slice::from_ref(&seed[si]) } else { &all_sets };
        let mut index: FxHashMap<u128, (u32, u32)> = FxHashMap::default();
        let mut next_states = vec![];
        let mut next_weights: Vec<u32> = vec![];
        let mut parents = vec![];
        let mut picks = vec![];
        let prev_len = if si == 0 { 0 } else { plan.steps[si - 1].frontier.len() };
        for (i, (&st, &wt)) in states.iter().zip(&weights).enumerate() {
            for (j, code) in codes.iter_mut().enumerate().take(prev_len) {
                *code = ((st >> (w as usize * j)) & code_mask) as u32;
            }
            let union = step
                .nbr_slots
                .iter()
                .filter(|&&j| codes[j] & colored_bit != 0)
                .fold(0, |acc, &j| acc | codes[j])
                & plan.full;
            'choice: for &x in choices {
                let nw = wt + x.count_ones();
                if nw as u64 > ub {
                    continue;
                }
                let x = x as u32;
                let self_code = if x != 0 { colored_bit | x } else { plan.full & !union };
                if step.self_closes && self_code != 0 && self_code & colored_bit == 0 {
                    continue;
                }
                let code_of = |j: usize| {
                    let c = codes[j];
                    if c & colored_bit == 0 && step.nbr_slots.contains(&j) {
                        c & !x
                    } else {
                        c
                    }
                };
                for &j in &step.closing {
                    let c = code_of(j);
                    if c & colored_bit == 0 && c != 0 {
                        continue 'choice;
                    }
                }
                next_codes.clear();
                next_codes.extend(step.layout.iter().map(|src| match src {
                    Some(j) => code_of(*j),
                    None => self_code,
                }));
                let mut ns = 0u128;
                for (slot, &c) in next_codes.iter().enumerate() {
                    ns |= (c as u128) << (w as usize * slot);
                }
                let entry = index.entry(ns).or_insert((NONE, u32::MAX));
                if entry.1 == u32::MAX {
                    entry.1 = plan.remaining(step, &next_codes) as u32;
                }
                if nw as u64 + entry.1 as u64 > ub {
                    continue;
                }
                if entry.0 == NONE {
                    entry.0 = next_states.len() as u32;
                    next_states.push(ns);
                    next_weights.push(nw);
                    parents.push(i as u32);
                    picks.push(x as u16);
                } else {
                    let e = entry.0 as usize;
                    if nw < next_weights[e] {
                        next_weights[e] = nw;
                        parents[e] = i as u32;
                        picks[e] = x as u16;
                    }
                }
            }
        }
        if !ctl.charge(next_states.len() as u64) {
            return None;
        }
        history.push((parents, picks));
        states = next_states;
        weights = next_weights;
        if states.is_empty() {
            return None;
        }
    }
    debug_assert_eq!(states, vec![0]);
    let best = weights[0];
    let mut sets = vec![0u16; plan.steps.len()];
    let mut at = 0usize;
    for (si, (parents, picks)) in history.iter().enumerate().rev() {
        sets[si] = picks[at];
        at = parents[at] as usize;
    }
    Some((best as u64, sets))
}

fn seed_count(t: usize, seeds: usize) -> u128 {
    (1u128 << t).checked_pow(seeds as u32).unwrap_or(u128::MAX)
}

fn canonical_seeds(t: usize, seeds: usize) -> Vec<Vec<u16>> {
    let base = 1u64 << t;
    (0..seed_count(t, seeds) as u64)
        .filter_map(|code| {
            let mut c = code;
            let sets: Vec<ColorSet> = (0..seeds)
                .map(|_| {
                    let s = ColorSet::from_bits((c % base) as u16);
                    c /= base;
                    s
                })
                .collect();
            let a = RainbowAssignment::new(t, sets).unwrap();
            (canonicalize_colors(&a) == a).then(|| a.colors().iter().map(|s| s.bits()).collect())
        })
        .collect()
}

fn factorial(t: usize) -> u128 {
    (1..=t as u128).product()
}

struct Prepared {
    plan: Plan,
    root: u64,
    seeds: Vec<Vec<u16>>,
    estimate: u128,
}

fn prepare(params: PetersenParams, t: usize) -> Result<std::result::Result<Prepared, u128>> {
    if !(1..=MAX_COLORS).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside 1..={MAX_COLORS}")));
    }
    let g = build_generalized_petersen(params);
    let (order, n_seeds) = column_order(params);
    let plan = Plan::new(&g, order, n_seeds, t);
    if plan.max_slots() as u32 * plan.width > 128 {
        let per_layer = ((1u128 << (t + 1)) - 1).saturating_pow(plan.max_slots() as u32);
        return Ok(Err(per_layer));
    }
    let total = seed_count(t, n_seeds);
    if total > SEED_ENUMERATION_LIMIT {
        let running = ((1u128 << (t + 1)) - 1).saturating_pow((plan.max_slots() - n_seeds) as u32);
        return Ok(Err((total / factorial(t)).saturating_mul(running)));
    }
    let seeds = canonical_seeds(t, n_seeds);
    let estimate = seeds
        .iter()
        .fold(0u128, |acc, s| acc.saturating_add(plan.seed_estimate(s)));
    let root = plan.dis.root(&g);
    Ok(Ok(Prepared { plan, root, seeds, estimate }))
}

/// Upper estimate of the states the profile DP would hold, summed over the
/// canonical seeds (each seed's widest layer).
pub fn profile_dp_estimate(params: PetersenParams, t: usize) -> Result<u128> {
    Ok(match prepare(params, t)? {
        Ok(p) => p.estimate,
        Err(e) => e,
    })
}

pub fn solve_profile_dp(params: PetersenParams, t: usize, budget: SearchBudget) -> Result<SolveResult> {
    let start = Instant::now();
    let prepared = match prepare(params, t)? {
        Ok(p) if p.estimate <= budget.max_states as u128 => p,
        Ok(p) => return Err(Error::Refused { estimate: p.estimate, limit: budget.max_states }),
        Err(estimate) => return Err(Error::Refused { estimate, limit: budget.max_states }),
    };
    let Prepared { plan, root, seeds, .. } = prepared;
    let n_vertices = 2 * params.n();
    let (ub, fallback) = match petersen_hint(params, t) {
        Some(h) => (h.weight() as u64, h.colors().iter().map(|c| c.bits()).collect()),
        None => (n_vertices as u64, vec![1u16; n_vertices]),
    };
    let proven = generic_lower_bound(n_vertices as u64, 3, t as u64).max(root);
    if ub <= proven {
        return Ok(SolveResult {
            optimum: ub,
            witness: RainbowAssignment::new(t, fallback.into_iter().map(ColorSet::from_bits).collect())?,
            method: Method::ProfileDp,
            stats: SolveStats::default(),
            elapsed: start.elapsed(),
        });
    }
    let ctl = Control {
        budget: &budget,
        start,
        states: AtomicU64::new(0),
        abort: AtomicBool::new(false),
    };
    // Raise the cap one unit at a time: the first cap admitting a solution
    // is the optimum, and every failed cap is a proven lower bound.
    let mut best: Option<(u64, Vec<u16>)> = None;
    let mut lower = proven;
    while best.is_none() && lower < ub && !ctl.abort.load(Ordering::Relaxed) {
        let outcomes: Vec<Option<(u64, Vec<u16>)>> =
            seeds.par_iter().map(|s| run_seed(&plan, s, lower, &ctl)).collect();
        if ctl.abort.load(Ordering::Relaxed) {
            break;
        }
        for (w, sets) in outcomes.into_iter().flatten() {
            if best.as_ref().is_none_or(|b| w < b.0) {
                let mut by_vertex = vec![0u16; n_vertices];
                for (i, &v) in plan.order.iter().enumerate() {
                    by_vertex[v] = sets[i];
                }
                best = Some((w, by_vertex));
            }
        }
        if best.is_none() {
            lower += 1;
        }
    }
    let states = ctl.states.load(Ordering::Relaxed);
    if ctl.abort.load(Ordering::Relaxed) {
        return Err(Error::BudgetExhausted {
            incumbent_weight: ub,
            incumbent: Some(fallback.into_iter().map(ColorSet::from_bits).collect()),
            proven_lower: lower,
            nodes: states,
        });
    }
    let (optimum, sets) = best.unwrap_or((ub, fallback));
    Ok(SolveResult {
        optimum,
        witness: RainbowAssignment::new(t, sets.into_iter().map(ColorSet::from_bits).collect())?,
        method: Method::ProfileDp,
        stats: SolveStats { nodes: 0, states },
        elapsed: start.elapsed(),
    })
}
