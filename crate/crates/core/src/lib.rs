//! Exact vertex-stability invariants for small graphs.
//!
//! The crate computes how many vertices must be deleted to lower the
//! chromatic or clique number (optionally requiring the deleted set to be
//! independent), builds the extremal graph families where the two answers
//! differ, and models the SAT instances whose independence graphs give a
//! second such family.

pub mod budget;
pub mod constructions;
pub mod critical;
pub mod graph;
pub mod invariants;
pub mod sat;
pub mod stability;

pub use budget::{Budget, BudgetExceeded, DEFAULT_NODE_BUDGET};
pub use graph::{CliquePartition, Coloring, Graph, GraphError, VertexSet};
pub use stability::{Parameter, StabilityError, StabilityReport};
