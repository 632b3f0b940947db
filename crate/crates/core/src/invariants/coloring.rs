//! Exact k-colorability by DSATUR-ordered backtracking.
//!
//! A maximum clique is precolored `1..=|Q|`, new colors are only opened one
//! at a time, and every node runs a Hall-type check on a fixed family of
//! greedy cliques: the uncolored members of a clique must see at least as
//! many distinct available colors as there are of them.

use crate::budget::Budget;
use crate::graph::{Coloring, Graph, VertexSet};

use super::clique::{greedy_clique_cover, maximum_clique};
use super::SolveError;

/// Largest color count the backtracking search supports.
pub const MAX_SEARCH_COLORS: usize = 128;

const NONE: usize = usize::MAX;

/// Plain DSATUR greedy coloring; colors are `0..`.
pub(crate) fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![NONE; n];
    let mut seen: Vec<VertexSet> = vec![VertexSet::new(n + 1); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..=n).find(|&c| !seen[v].contains(c)).unwrap();
        color[v] = c;
        for u in g.neighbors(v).iter() {
            if color[u] == NONE && !seen[u].contains(c) {
                seen[u].insert(c);
                sat[u] += 1;
            }
        }
    }
    color
}

fn colors_used(raw: &[usize]) -> usize {
    let mut v: Vec<usize> = raw.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    budget: &'a Budget,
    color: Vec<usize>,
    domain: Vec<u128>,
    trail: Vec<(usize, u128)>,
    cliques: &'a [Vec<usize>],
    max_used: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, budget: &'a Budget, cliques: &'a [Vec<usize>]) -> Self {
        let full = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
        Search {
            g,
            k,
            budget,
            color: vec![NONE; g.n()],
            domain: vec![full; g.n()],
            trail: Vec::new(),
            cliques,
            max_used: 0,
        }
    }

    /// Colors `v` with `c` and forward-checks the neighbours. Returns false
    /// on a domain wipe-out; the caller undoes through the trail either way.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let bit = 1u128 << c;
        let mut ok = true;
        for u in self.g.neighbors(v).iter() {
            if self.color[u] == NONE && self.domain[u] & bit != 0 {
                self.trail.push((u, self.domain[u]));
                self.domain[u] &= !bit;
                if self.domain[u] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn undo(&mut self, v: usize, mark: usize) {
        while self.trail.len() > mark {
            let (u, d) = self.trail.pop().unwrap();
            self.domain[u] = d;
        }
        self.color[v] = NONE;
    }

    fn hall_ok(&self) -> bool {
        self.cliques.iter().all(|q| {
            let mut count = 0u32;
            let mut union = 0u128;
            for &v in q {
                if self.color[v] == NONE {
                    count += 1;
                    union |= self.domain[v];
                }
            }
            union.count_ones() >= count
        })
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v] == NONE)
            .min_by_key(|&v| (self.domain[v].count_ones(), std::cmp::Reverse(self.g.degree(v)), v))
    }

    fn run(&mut self) -> Result<bool, SolveError> {
        self.budget.tick()?;
        let Some(v) = self.select() else {
            return Ok(true);
        };
        let open = (self.max_used + 2).min(self.k);
        let allowed = if open == 128 { u128::MAX } else { (1u128 << open) - 1 };
        let mut choices = self.domain[v] & allowed;
        while choices != 0 {
            let c = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            let mark = self.trail.len();
            if self.assign(v, c) && self.hall_ok() {
                let prev = self.max_used;
                self.max_used = prev.max(c);
                if self.run()? {
                    return Ok(true);
                }
                self.max_used = prev;
            }
            self.undo(v, mark);
        }
        Ok(false)
    }
}

/// Exact search for a `k`-coloring with `clique` precolored. Colors `0..k`.
fn search_with_clique(
    g: &Graph,
    k: usize,
    clique: &VertexSet,
    cliques: &[Vec<usize>],
    budget: &Budget,
) -> Result<Option<Vec<usize>>, SolveError> {
    if clique.len() > k {
        return Ok(None);
    }
    if k > MAX_SEARCH_COLORS {
        return Err(SolveError::TooManyColors(k));
    }
    let mut s = Search::new(g, k, budget, cliques);
    for (c, v) in clique.iter().enumerate() {
        if !s.assign(v, c) {
            return Ok(None);
        }
        s.max_used = c;
    }
    if !s.hall_ok() {
        return Ok(None);
    }
    Ok(if s.run()? { Some(s.color) } else { None })
}

/// A proper coloring with colors in `1..=k` when one exists.
///
/// Deterministic given `(g, k)`.
pub fn is_k_colorable(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Coloring>, SolveError> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(g, Vec::new(), k).unwrap()));
    }
    if k == 0 {
        return Ok(None);
    }
    let greedy = dsatur_greedy(g);
    let raw = if colors_used(&greedy) <= k {
        Some(greedy)
    } else {
        let clique = maximum_clique(g, budget)?;
        let cliques = greedy_clique_cover(g, 3);
        search_with_clique(g, k, &clique, &cliques, budget)?
    };
    Ok(raw.map(|raw| {
        let c = Coloring::canonical(g, &raw);
        Coloring::new(g, c.colors().to_vec(), k).unwrap()
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// Optimal coloring, colors renumbered by first appearance.
    pub coloring: Coloring,
    pub clique: VertexSet,
}

/// Exact chromatic number with an optimal coloring and a maximum clique.
///
/// Starts from the DSATUR greedy bound and walks down until the search
/// fails or meets the clique bound.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<ChromaticResult, SolveError> {
    let clique = maximum_clique(g, budget)?;
    if g.n() == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            coloring: Coloring::new(g, Vec::new(), 0).unwrap(),
            clique,
        });
    }
    let mut best = dsatur_greedy(g);
    let mut upper = colors_used(&best);
    if upper > clique.len() {
        let cliques = greedy_clique_cover(g, 3);
        while upper > clique.len() {
            match search_with_clique(g, upper - 1, &clique, &cliques, budget)? {
                Some(raw) => {
                    upper = colors_used(&raw);
                    best = raw;
                }
                None => break,
            }
        }
    }
    let coloring = Coloring::canonical(g, &best);
    Ok(ChromaticResult {
        chi: coloring.k(),
        coloring,
        clique,
    })
}
