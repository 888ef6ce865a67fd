//! Admissible lower bound on the weight still to be placed.
//!
//! Every colored vertex with `s` colors sends `φ(s)` to each neighbor. In the
//! final assignment a colored vertex keeps at least `κ(deg)` and an uncolored
//! vertex receives at least `ψ(t, deg)`; charges are scaled by [`SCALE`].
//! In a partial assignment only unassigned vertices send, and each vertex's
//! share is bounded from its own state, so the sum bounds the unplaced weight.

use crate::graph::Graph;

pub(crate) const SCALE: i64 = 180;
pub(crate) const INF: i64 = 1 << 40;

fn phi_table(t: usize) -> Vec<i64> {
    let fixed: &[i64] = match t {
        1 => &[0, 45],
        2 => &[0, 36, 72],
        4 => &[0, 20, 80, 120, 120],
        5 => &[0, 10, 70, 130, 150, 150],
        _ => &[],
    };
    if !fixed.is_empty() {
        return fixed.to_vec();
    }
    (0..=t as i64)
        .map(|s| match t {
            3 => 30 * s,
            _ => (60 * (s - 1)).clamp(0, SCALE),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub(crate) struct Discharge {
    t: usize,
    /// `kappa[d]`: least charge kept by a colored vertex of degree `d`.
    kappa: Vec<i64>,
    /// `psi[r][m]`: least charge `r` neighbors send while carrying `m` colors.
    psi: Vec<Vec<i64>>,
}

impl Discharge {
    pub(crate) fn new(t: usize, max_degree: usize) -> Self {
        let phi = phi_table(t);
        let kappa = (0..=max_degree)
            .map(|d| (1..=t).map(|s| SCALE * s as i64 - d as i64 * phi[s]).min().unwrap())
            .collect();
        let mut psi = vec![vec![INF; t + 1]; max_degree + 1];
        psi[0][0] = 0;
        for r in 1..=max_degree {
            for m in 0..=t {
                psi[r][m] = (0..=t)
                    .map(|s| phi[s] + psi[r - 1][m.saturating_sub(s)])
                    .min()
                    .unwrap()
                    .min(INF);
            }
        }
        Discharge { t, kappa, psi }
    }

    /// Share of an unassigned vertex of degree `deg` that still misses
    /// `missing` colors and has `open` unassigned neighbors.
    #[inline]
    pub(crate) fn unassigned(&self, deg: usize, missing: usize, open: usize) -> i64 {
        self.kappa[deg].min(self.psi[open][missing])
    }

    /// Share of an assigned uncolored vertex.
    #[inline]
    pub(crate) fn uncolored(&self, missing: usize, open: usize) -> i64 {
        self.psi[open][missing]
    }

    /// Lower bound on the whole weight, from an empty assignment.
    pub(crate) fn root(&self, g: &Graph) -> u64 {
        let total: i64 = (0..g.n_vertices())
            .map(|v| self.unassigned(g.degree(v), self.t, g.degree(v)))
            .sum();
        ceil_div(total.max(0))
    }
}

#[inline]
pub(crate) fn ceil_div(charge: i64) -> u64 {
    ((charge + SCALE - 1) / SCALE) as u64
}

/// Discharging lower bound on `γ_rt(g)`; valid for any graph.
pub fn discharge_lower_bound(g: &Graph, t: usize) -> u64 {
    Discharge::new(t, g.max_degree()).root(g)
}
