//! Exact computation of `γ_rt`: a parallel branch and bound for arbitrary
//! graphs and a cyclic profile dynamic program for `P(n,k)`.

mod bb;
mod bound;
mod certify;
mod dp;

use std::time::Duration;

use serde::Serialize;

pub use bb::{solve_branch_bound, solve_branch_bound_with, BranchBoundOptions};
pub use bound::discharge_lower_bound;
pub use certify::{certify, certify_petersen, Certificate};
pub use dp::{profile_dp_estimate, solve_profile_dp};

use crate::bounds::characterized_exact;
use crate::constructions::{default_tripartition, extremal_pattern};
use crate::error::Result;
use crate::graph::{Graph, PetersenParams};
use crate::rdf::RainbowAssignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BranchBound,
    ProfileDp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BranchBound => "branch_bound",
            Method::ProfileDp => "profile_dp",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_states: u64,
    pub max_elapsed: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_states: 100_000_000,
            max_elapsed: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Search nodes expanded (branch and bound).
    pub nodes: u64,
    /// DP states created (profile DP).
    pub states: u64,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub optimum: u64,
    pub witness: RainbowAssignment,
    pub method: Method,
    pub stats: SolveStats,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    Graph(&'a Graph),
    Petersen(PetersenParams),
}

/// Best known starting assignment for `P(n,k)`: the extremal pattern on
/// characterized instances.
pub fn petersen_hint(params: PetersenParams, t: usize) -> Option<RainbowAssignment> {
    let (n, k) = (params.n(), params.k());
    if !(3..=5).contains(&t) || characterized_exact(n as u64, k as u64, t as u64).ok()?.is_none() {
        return None;
    }
    extremal_pattern(n, k, t, &default_tripartition(t).ok()?).ok()
}

/// Profile DP for `P(n,k)` (refusing if its estimate exceeds the state
/// budget), branch and bound for anything else.
pub fn solve_auto(instance: Instance<'_>, t: usize, budget: SearchBudget) -> Result<SolveResult> {
    match instance {
        Instance::Graph(g) => solve_branch_bound(g, t, budget),
        Instance::Petersen(p) => solve_profile_dp(p, t, budget),
    }
}
