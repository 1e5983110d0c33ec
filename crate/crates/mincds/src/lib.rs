//! Minimum connected dominating set toolkit: a bi-objective evolutionary
//! search with a Pareto archive, the classic greedy baseline, an exhaustive
//! oracle for small instances, seeded random instance generators, and an
//! experiment harness emitting reproducible CSV/JSON reports.
//!
//! A vertex subset is scored by two minimized objectives: a feasibility
//! value combining the component counts of the induced and covered
//! subgraphs (2 exactly for connected dominating sets), and the subset size.
//! The search keeps an archive of mutually incomparable subsets and returns
//! the feasible member once one exists.

pub mod engine;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod objectives;
mod union_find;
pub mod vertex_set;

pub use engine::{Algorithm, Budget, RunConfig, RunReport, run};
pub use exact::{DEFAULT_ORACLE_CAP, ExactResult, exact_min_cds};
pub use format::{parse_graph, write_graph};
pub use generate::{GenSpec, Model, generate};
pub use graph::{Graph, GraphError, is_connected};
pub use greedy::{GreedyRun, GreedyStep, greedy_cds};
pub use objectives::{Dominance, Evaluation, compare, evaluate};
pub use vertex_set::VertexSet;

use thiserror::Error;

/// Why a solver refused to start.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error(
        "solvers need at least 3 vertices, got {n}: with fewer, the empty set \
         already scores the minimal feasibility value and shadows real solutions"
    )]
    GraphTooSmall { n: usize },
}
