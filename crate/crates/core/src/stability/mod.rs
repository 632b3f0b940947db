//! Exact chromatic and clique vertex-stability numbers.
//!
//! `vs_P(G)` is the fewest vertices whose deletion lowers `P` (`χ` or `ω`);
//! `ivs_P(G)` is the same minimum over independent sets. Witnesses are the
//! lexicographically least minimum sets, as sorted vertex lists.

mod fbounds;
mod search;

pub use fbounds::{f_bounds, k_delta, FBounds, FBoundsError};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::Budget;
use crate::critical::peel_to_critical;
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::invariants::{
    chromatic_number, clique_number, cliques_of_size, enumerate_maximum_cliques, is_k_colorable, maximum_clique,
    SolveError,
};
use search::HittingSearch;

/// Cap on maximum cliques used to seed the chromatic search; any subset of
/// them is still a valid set of obstacles.
const CHI_SEED_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Chi,
    Omega,
}

impl Parameter {
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Chi => "chi",
            Parameter::Omega => "omega",
        }
    }
}

impl std::str::FromStr for Parameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "chi" => Ok(Parameter::Chi),
            "omega" => Ok(Parameter::Omega),
            other => Err(format!("unknown parameter `{other}` (expected chi or omega)")),
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum StabilityError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("the graph has no vertices, so there is nothing to reduce")]
    NothingToReduce,
}

impl From<crate::budget::BudgetExceeded> for StabilityError {
    fn from(e: crate::budget::BudgetExceeded) -> Self {
        StabilityError::Solve(e.into())
    }
}

/// Both stability numbers of one parameter.
///
/// `exhausted` is true when the search space was fully explored, so absent
/// values mean "does not exist"; when false the budget ran out and absent
/// values are unknown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub parameter: Parameter,
    pub parameter_value: usize,
    pub value: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub independent_value: Option<usize>,
    pub independent_witness: Option<Vec<usize>>,
    pub exhausted: bool,
}

/// Setup shared by the plain and independent searches.
struct Problem {
    value: usize,
    obstacles: Vec<VertexSet>,
    /// Size of a known independent reducing set, when one is known.
    independent_upper: Option<usize>,
}

fn setup(g: &Graph, param: Parameter, budget: &Budget) -> Result<Problem, StabilityError> {
    if g.n() == 0 {
        return Err(StabilityError::NothingToReduce);
    }
    match param {
        Parameter::Chi => {
            let chi = chromatic_number(g, budget)?;
            let smallest_class = chi.coloring.classes().iter().map(|c| c.len()).filter(|&l| l > 0).min();
            let obstacles = if chi.clique.len() == chi.chi {
                let mut seeds = cliques_of_size(g, chi.chi, budget)?;
                seeds.truncate(CHI_SEED_LIMIT);
                seeds
            } else {
                Vec::new()
            };
            Ok(Problem {
                value: chi.chi,
                obstacles,
                independent_upper: smallest_class,
            })
        }
        Parameter::Omega => {
            let cliques = enumerate_maximum_cliques(g, budget)?;
            Ok(Problem {
                value: cliques[0].len(),
                obstacles: cliques,
                independent_upper: None,
            })
        }
    }
}

fn run(
    g: &Graph,
    param: Parameter,
    independent: bool,
    cap: usize,
    budget: &Budget,
) -> Result<Option<VertexSet>, StabilityError> {
    let problem = setup(g, param, budget)?;
    let value = problem.value;
    match param {
        Parameter::Chi => {
            let target = value - 1;
            let test = |s: &VertexSet| -> Result<Option<VertexSet>, SolveError> {
                let (h, _) = delete_vertices(g, s).expect("candidate inside the graph");
                if is_k_colorable(&h, target, budget)?.is_some() {
                    return Ok(None);
                }
                let keep = s.complement();
                Ok(Some(chi_obstacle(g, &keep, target, budget)?))
            };
            let mut search = HittingSearch::new(g, independent, problem.obstacles, budget, test);
            let from = search.disjoint_lower_bound().max(1);
            // a color class of an optimal coloring always works
            let to = problem.independent_upper.unwrap_or(g.n()).min(cap);
            Ok(search.minimum(from, to)?)
        }
        Parameter::Omega => {
            let test = |_: &VertexSet| -> Result<Option<VertexSet>, SolveError> { Ok(None) };
            let mut search = HittingSearch::new(g, independent, problem.obstacles, budget, test);
            let from = search.disjoint_lower_bound().max(1);
            let to = if independent {
                match search.any_independent_hitting_set()? {
                    Some(s) => s.len(),
                    None => return Ok(None),
                }
            } else {
                g.n()
            };
            Ok(search.minimum(from, to.min(cap))?)
        }
    }
}

/// Obstacle inside `keep` for the chromatic search: a `(target+1)`-clique
/// if there is one, otherwise a critical subgraph found by peeling.
fn chi_obstacle(g: &Graph, keep: &VertexSet, target: usize, budget: &Budget) -> Result<VertexSet, SolveError> {
    let (h, old) = g.induced(keep);
    let clique = maximum_clique(&h, budget)?;
    if clique.len() > target {
        return Ok(VertexSet::from_vertices(
            g.n(),
            clique.iter().take(target + 1).map(|v| old[v]),
        ));
    }
    peel_to_critical(g, keep, target, budget)
}

/// `vs_P(g)` with its canonical witness.
pub fn vertex_stability(g: &Graph, param: Parameter, budget: &Budget) -> Result<VertexSet, StabilityError> {
    Ok(run(g, param, false, usize::MAX, budget)?.expect("deleting every vertex always reduces the parameter"))
}

/// `ivs_P(g)` with its canonical witness; `None` when no independent set
/// lowers the parameter (possible only for `ω`).
pub fn independent_vertex_stability(
    g: &Graph,
    param: Parameter,
    budget: &Budget,
) -> Result<Option<VertexSet>, StabilityError> {
    run(g, param, true, usize::MAX, budget)
}

/// The canonical minimum reducing set if it has at most `max_size`
/// vertices, `None` otherwise. Cheaper than the full search when only a
/// bound is in question.
pub fn reducing_set_within(
    g: &Graph,
    param: Parameter,
    independent: bool,
    max_size: usize,
    budget: &Budget,
) -> Result<Option<VertexSet>, StabilityError> {
    run(g, param, independent, max_size, budget)
}

/// The smallest color class of the canonical optimal coloring (ties to the
/// lower color). Removing it lowers `χ`.
pub fn reduce_by_color_class(g: &Graph, budget: &Budget) -> Result<VertexSet, StabilityError> {
    if g.n() == 0 {
        return Err(StabilityError::NothingToReduce);
    }
    let chi = chromatic_number(g, budget)?;
    Ok(chi
        .coloring
        .classes()
        .into_iter()
        .filter(|c| !c.is_empty())
        .min_by_key(|c| c.len())
        .expect("nonempty graph has a color class"))
}

/// Computes both numbers; budget exhaustion produces a partial report with
/// `exhausted = false` instead of an error.
pub fn stability_report(g: &Graph, param: Parameter, budget: &Budget) -> Result<StabilityReport, StabilityError> {
    let parameter_value = match param {
        Parameter::Chi => chromatic_number(g, budget)?.chi,
        Parameter::Omega => clique_number(g, budget)?,
    };
    let mut report = StabilityReport {
        parameter: param,
        parameter_value,
        value: None,
        witness: None,
        independent_value: None,
        independent_witness: None,
        exhausted: false,
    };
    match vertex_stability(g, param, budget) {
        Ok(w) => {
            report.value = Some(w.len());
            report.witness = Some(w.to_vec());
        }
        Err(StabilityError::Solve(_)) => return Ok(report),
        Err(e) => return Err(e),
    }
    match independent_vertex_stability(g, param, budget) {
        Ok(w) => {
            report.independent_value = w.as_ref().map(VertexSet::len);
            report.independent_witness = w.map(|w| w.to_vec());
            report.exhausted = true;
        }
        Err(StabilityError::Solve(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(report)
}
