//! Rainbow domination on cubic graphs, with generalized Petersen graphs
//! `P(n,k)` as the main family.
//!
//! A `t`-rainbow dominating function gives every vertex a subset of
//! `{1, ..., t}` so that each vertex with the empty set sees all `t` colors
//! among its neighbors. This crate builds such functions, verifies them,
//! computes the minimum weight exactly on small instances and compares the
//! results against closed-form bounds.

pub mod audit;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod rdf;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, PetersenParams, Vertex};
pub use rdf::{Census, ColorSet, RainbowAssignment, Verdict, Violation};
