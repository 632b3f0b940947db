//! Maximum clique branch-and-bound on bitset candidate sets, with a greedy
//! coloring bound on each candidate set.

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Graph, VertexSet};

/// Orders `p` by greedy color classes (classes built in vertex order) and
/// returns the vertices with the number of the class each one landed in.
fn color_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut candidates = uncolored.clone();
        while let Some(v) = candidates.first() {
            candidates.remove(v);
            candidates.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

struct MaxClique<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    best: Vec<usize>,
}

impl MaxClique<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut p: VertexSet) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        let (order, bounds) = color_sort(self.g, &p);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            current.push(v);
            let next = p.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// A maximum clique of `g`, as a vertex set.
pub fn maximum_clique(g: &Graph, budget: &Budget) -> Result<VertexSet, BudgetExceeded> {
    let mut search = MaxClique {
        g,
        budget,
        best: Vec::new(),
    };
    if g.n() > 0 {
        search.expand(&mut Vec::new(), g.vertices())?;
    }
    Ok(VertexSet::from_vertices(g.n(), search.best))
}

pub fn clique_number(g: &Graph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    maximum_clique(g, budget).map(|c| c.len())
}

struct AllCliques<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    size: usize,
    found: Vec<Vec<usize>>,
}

impl AllCliques<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut p: VertexSet) -> Result<(), BudgetExceeded> {
        self.budget.tick()?;
        let (order, bounds) = color_sort(self.g, &p);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] < self.size {
                return Ok(());
            }
            let v = order[i];
            current.push(v);
            if current.len() == self.size {
                let mut c = current.clone();
                c.sort_unstable();
                self.found.push(c);
            } else {
                let next = p.intersection(self.g.neighbors(v));
                if !next.is_empty() {
                    self.expand(current, next)?;
                }
            }
            current.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// Every clique of exactly `size` vertices, sorted as vertex lists.
pub fn cliques_of_size(g: &Graph, size: usize, budget: &Budget) -> Result<Vec<VertexSet>, BudgetExceeded> {
    if size == 0 {
        return Ok(vec![VertexSet::new(g.n())]);
    }
    let mut search = AllCliques {
        g,
        budget,
        size,
        found: Vec::new(),
    };
    if g.n() > 0 {
        search.expand(&mut Vec::new(), g.vertices())?;
    }
    let mut found = search.found;
    found.sort();
    Ok(found.into_iter().map(|c| VertexSet::from_vertices(g.n(), c)).collect())
}

/// All maximum cliques of `g`, in lexicographic order of their sorted
/// vertex lists. The empty graph has the single maximum clique `{}`.
pub fn enumerate_maximum_cliques(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>, BudgetExceeded> {
    let omega = clique_number(g, budget)?;
    cliques_of_size(g, omega, budget)
}

/// One greedy maximal clique through each vertex (each step adds the
/// candidate with most neighbours among the remaining candidates, ties to
/// the smaller index), deduplicated. Used as the clique family for the
/// Hall-type pruning in the coloring search.
pub(crate) fn greedy_clique_cover(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    let mut seen = std::collections::BTreeSet::new();
    for v in 0..g.n() {
        let mut clique = vec![v];
        let mut cand = g.neighbors(v).clone();
        while !cand.is_empty() {
            let u = cand
                .iter()
                .max_by_key(|&u| (g.neighbors(u).intersection_len(&cand), std::cmp::Reverse(u)))
                .unwrap();
            clique.push(u);
            cand.intersect_with(g.neighbors(u));
        }
        if clique.len() >= min_size {
            clique.sort_unstable();
            seen.insert(clique);
        }
    }
    seen.into_iter().collect()
}
