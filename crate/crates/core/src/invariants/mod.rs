//! Exact chromatic number, clique number and k-colorability.

mod clique;
mod coloring;

pub use clique::{clique_number, cliques_of_size, enumerate_maximum_cliques, maximum_clique};
pub use coloring::{chromatic_number, is_k_colorable, ChromaticResult, MAX_SEARCH_COLORS};

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Coloring, Graph, VertexSet};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("coloring search with {0} colors exceeds the supported maximum")]
    TooManyColors(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub chi: usize,
    pub omega: usize,
    pub witness_coloring: Coloring,
    pub witness_clique: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantJson {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub chi: usize,
    pub omega: usize,
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
}

impl InvariantSummary {
    pub fn to_json(&self) -> InvariantJson {
        InvariantJson {
            n: self.n,
            m: self.m,
            delta: self.delta,
            chi: self.chi,
            omega: self.omega,
            coloring: self.witness_coloring.colors().to_vec(),
            clique: self.witness_clique.to_vec(),
        }
    }
}

pub fn summarize(g: &Graph, budget: &Budget) -> Result<InvariantSummary, SolveError> {
    let r = chromatic_number(g, budget)?;
    Ok(InvariantSummary {
        n: g.n(),
        m: g.edge_count(),
        delta: g.max_degree(),
        chi: r.chi,
        omega: r.clique.len(),
        witness_coloring: r.coloring,
        witness_clique: r.clique,
    })
}
