//! Minimum "reducing set" search shared by every stability number.
//!
//! A set reduces the parameter only if it meets every obstacle: a vertex
//! set whose induced subgraph keeps the parameter at its full value
//! (maximum cliques, critical subgraphs). Candidates are enumerated by size,
//! then lexicographically, skipping any that miss a known obstacle. A
//! candidate that survives the obstacles but still fails the exact test
//! yields a fresh obstacle inside its complement.

use crate::budget::Budget;
use crate::graph::{Graph, VertexSet};
use crate::invariants::SolveError;

/// Exact test for a full-size candidate: `Ok(None)` when removing it lowers
/// the parameter, otherwise an obstacle disjoint from it.
pub(crate) type Verdict = Result<Option<VertexSet>, SolveError>;

pub(crate) struct HittingSearch<'a, F> {
    g: &'a Graph,
    independent: bool,
    budget: &'a Budget,
    obstacles: Vec<VertexSet>,
    test: F,
}

impl<'a, F> HittingSearch<'a, F>
where
    F: FnMut(&VertexSet) -> Verdict,
{
    pub(crate) fn new(g: &'a Graph, independent: bool, obstacles: Vec<VertexSet>, budget: &'a Budget, test: F) -> Self {
        HittingSearch {
            g,
            independent,
            budget,
            obstacles,
            test,
        }
    }

    /// Greedy count of pairwise-disjoint obstacles: a lower bound on the
    /// size of any reducing set.
    pub(crate) fn disjoint_lower_bound(&self) -> usize {
        let mut used = VertexSet::new(self.g.n());
        let mut count = 0;
        let mut order: Vec<&VertexSet> = self.obstacles.iter().collect();
        order.sort_by_key(|o| o.len());
        for o in order {
            if !o.intersects(&used) {
                used.union_with(o);
                count += 1;
            }
        }
        count
    }

    /// Lexicographically least reducing set of the smallest size in
    /// `from..=to`, if any.
    pub(crate) fn minimum(&mut self, from: usize, to: usize) -> Result<Option<VertexSet>, SolveError> {
        for size in from..=to.min(self.g.n()) {
            let unhit: Vec<usize> = (0..self.obstacles.len()).collect();
            let known = self.obstacles.len();
            let blocked = VertexSet::new(self.g.n());
            if let Some(w) = self.dfs(0, size, &mut Vec::new(), unhit, known, &blocked)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn dfs(
        &mut self,
        start: usize,
        size: usize,
        chosen: &mut Vec<usize>,
        mut unhit: Vec<usize>,
        known: usize,
        blocked: &VertexSet,
    ) -> Result<Option<VertexSet>, SolveError> {
        self.budget.tick()?;
        for i in known..self.obstacles.len() {
            if !chosen.iter().any(|&v| self.obstacles[i].contains(v)) {
                unhit.push(i);
            }
        }
        let known = self.obstacles.len();
        let remaining = size - chosen.len();

        if remaining == 0 {
            if !unhit.is_empty() {
                return Ok(None);
            }
            let set = VertexSet::from_vertices(self.g.n(), chosen.iter().copied());
            return match (self.test)(&set)? {
                None => Ok(Some(set)),
                Some(obstacle) => {
                    debug_assert!(!obstacle.intersects(&set));
                    self.obstacles.push(obstacle);
                    Ok(None)
                }
            };
        }

        let n = self.g.n();
        let mut eligible = VertexSet::new(n);
        for v in start..n {
            if !blocked.contains(v) {
                eligible.insert(v);
            }
        }
        let candidates = eligible.to_vec();
        if candidates.len() < remaining {
            return Ok(None);
        }

        // every unhit obstacle must still be reachable, and disjoint ones
        // each need their own vertex
        let mut last_useful = usize::MAX;
        let mut packed = VertexSet::new(n);
        let mut disjoint = 0;
        for &i in &unhit {
            let reachable = self.obstacles[i].intersection(&eligible);
            let Some(top) = reachable.last() else {
                return Ok(None);
            };
            last_useful = last_useful.min(top);
            if !reachable.intersects(&packed) {
                packed.union_with(&reachable);
                disjoint += 1;
            }
        }
        if disjoint > remaining {
            return Ok(None);
        }

        for (idx, &v) in candidates.iter().enumerate() {
            if v > last_useful || candidates.len() - idx < remaining {
                break;
            }
            let next_unhit: Vec<usize> = unhit
                .iter()
                .copied()
                .filter(|&i| !self.obstacles[i].contains(v))
                .collect();
            let mut next_blocked = blocked.clone();
            if self.independent {
                next_blocked.union_with(self.g.neighbors(v));
            }
            chosen.push(v);
            let found = self.dfs(v + 1, size, chosen, next_unhit, known, &next_blocked)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Some independent set meeting every obstacle, of any size. Only
    /// meaningful when the obstacle list is complete (clique parameter).
    pub(crate) fn any_independent_hitting_set(&self) -> Result<Option<VertexSet>, SolveError> {
        let blocked = VertexSet::new(self.g.n());
        let unhit: Vec<usize> = (0..self.obstacles.len()).collect();
        let mut chosen = Vec::new();
        if self.cover(&unhit, &blocked, &mut chosen)? {
            Ok(Some(VertexSet::from_vertices(self.g.n(), chosen)))
        } else {
            Ok(None)
        }
    }

    fn cover(&self, unhit: &[usize], blocked: &VertexSet, chosen: &mut Vec<usize>) -> Result<bool, SolveError> {
        self.budget.tick()?;
        let mut pick: Option<(usize, VertexSet)> = None;
        for &i in unhit {
            let options = self.obstacles[i].difference(blocked);
            if options.is_empty() {
                return Ok(false);
            }
            if pick.as_ref().is_none_or(|(_, p)| options.len() < p.len()) {
                pick = Some((i, options));
            }
        }
        let Some((_, options)) = pick else {
            return Ok(true);
        };
        for v in options.iter() {
            let rest: Vec<usize> = unhit
                .iter()
                .copied()
                .filter(|&i| !self.obstacles[i].contains(v))
                .collect();
            let mut next = blocked.clone();
            next.insert(v);
            next.union_with(self.g.neighbors(v));
            chosen.push(v);
            if self.cover(&rest, &next, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}
