use serde::Serialize;

use super::bound::discharge_lower_bound;
use crate::bounds::{bounds_pckk, generic_lower_bound, known_exact_pn1, Mode};
use crate::error::{Error, Result};
use crate::graph::{build_generalized_petersen, Graph, PetersenParams};
use crate::rdf::{require_trdf, RainbowAssignment};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
pub enum Certificate {
    Exact {
        weight: u64,
        lower_bound: u64,
        source: String,
    },
    UpperOnly {
        weight: u64,
        lower_bound: u64,
        gap: u64,
        source: String,
    },
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        matches!(self, Certificate::Exact { .. })
    }

    pub fn lower_bound(&self) -> u64 {
        match self {
            Certificate::Exact { lower_bound, .. } | Certificate::UpperOnly { lower_bound, .. } => *lower_bound,
        }
    }
}

fn check(g: &Graph, t: usize, candidate: &RainbowAssignment) -> Result<()> {
    if candidate.t() != t {
        return Err(Error::input(format!("candidate uses t = {}, expected {t}", candidate.t())));
    }
    require_trdf(g, candidate)
}

fn graph_lower(g: &Graph, t: usize) -> (u64, String) {
    let mut best = (discharge_lower_bound(g, t), "discharging".to_string());
    if let Some(d) = g.regular_degree().filter(|&d| d > 0) {
        let generic = generic_lower_bound(g.n_vertices() as u64, d as u64, t as u64);
        if generic >= best.0 {
            best = (generic, "LBKuzman".into());
        }
    }
    best
}

fn package(weight: u64, (lower_bound, source): (u64, String)) -> Certificate {
    if weight <= lower_bound {
        Certificate::Exact {
            weight,
            lower_bound,
            source,
        }
    } else {
        Certificate::UpperOnly {
            weight,
            lower_bound,
            gap: weight - lower_bound,
            source,
        }
    }
}

/// Exact when the candidate's weight meets a lower bound valid for every
/// graph of this shape.
pub fn certify(g: &Graph, t: usize, candidate: &RainbowAssignment) -> Result<Certificate> {
    check(g, t, candidate)?;
    Ok(package(candidate.weight() as u64, graph_lower(g, t)))
}

/// As [`certify`], also using the `P(ck,k)` catalog and prism values.
pub fn certify_petersen(params: PetersenParams, t: usize, candidate: &RainbowAssignment) -> Result<Certificate> {
    let g = build_generalized_petersen(params);
    check(&g, t, candidate)?;
    let mut best = graph_lower(&g, t);
    if let Some(c) = params.multiplier().filter(|&c| c >= 3) {
        let r = bounds_pckk(c as u64, params.k() as u64, t as u64, Mode::Corrected)?;
        let lower = r.exact.unwrap_or(r.lower);
        if lower > best.0 {
            let labels: Vec<&str> = r.sources.iter().map(|s| s.label()).collect();
            best = (lower, labels.join("+"));
        }
    }
    if params.k() == 1 {
        if let Some(v) = known_exact_pn1(params.n() as u64, t as u64) {
            if v > best.0 {
                best = (v, "PrismExact".into());
            }
        }
    }
    Ok(package(candidate.weight() as u64, best))
}
