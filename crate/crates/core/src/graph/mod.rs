//! Undirected simple graphs on `0..n` with bitset adjacency rows, plus the
//! handful of operators the constructions are built from.

mod io;
mod set;

pub use io::{read_dimacs_graph, write_dimacs_graph, write_dot, DimacsError, ParsedGraph};
pub use set::{Iter, VertexSet};

use thiserror::Error;

/// Hard cap on the number of vertices of any graph.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph with {0} vertices exceeds the {MAX_VERTICES}-vertex cap")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("improper coloring: {0}")]
    ImproperColoring(String),
    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics above [`MAX_VERTICES`]; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex cap exceeded")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::try_new(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = !self.adj[u].contains(v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Induced subgraph on `keep`; vertex `i` of the result is the `i`-th
    /// smallest member of `keep`. Returns the new-to-old index map.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = new_index[w];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        (g, old)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Connected components of the subgraph induced by `within`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if within.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        self.components_within(within).len() <= 1
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n {
        let mut row = VertexSet::full(n);
        row.remove(v);
        g.adj[v] = row;
    }
    g
}

/// `n` isolated vertices (`nK_1`).
pub fn empty_graph(n: usize) -> Graph {
    Graph::new(n)
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    if n >= 3 {
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
    } else if n == 2 {
        g.add_edge(0, 1);
    }
    g
}

/// Disjoint union with every cross edge added. Vertices of `g1` come first.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (mut g, offsets) = disjoint_union(&[g1, g2]);
    for u in 0..g1.n() {
        for v in 0..g2.n() {
            g.add_edge(u, offsets[1] + v);
        }
    }
    g
}

/// Disjoint union; returns the index offset of each input graph.
pub fn disjoint_union(gs: &[&Graph]) -> (Graph, Vec<usize>) {
    let total: usize = gs.iter().map(|g| g.n()).sum();
    let mut g = Graph::new(total);
    let mut offsets = Vec::with_capacity(gs.len());
    let mut base = 0;
    for h in gs {
        offsets.push(base);
        for (u, v) in h.edges() {
            g.add_edge(base + u, base + v);
        }
        base += h.n();
    }
    (g, offsets)
}

/// Clique blow-up of `C_5`: part `P_i` is `i*k .. (i+1)*k`, and each part is
/// complete to itself and to the two cyclically adjacent parts.
pub fn blow_up_cycle5(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter(
            "C5 blow-up needs clique size k >= 1".into(),
        ));
    }
    let n = 5 * k;
    let mut g = Graph::try_new(n)?;
    for part in 0..5 {
        let next = (part + 1) % 5;
        for i in 0..k {
            let u = part * k + i;
            for j in (i + 1)..k {
                g.add_edge(u, part * k + j);
            }
            for j in 0..k {
                g.add_edge(u, next * k + j);
            }
        }
    }
    Ok(g)
}

/// Removes `s` from `g`. The returned map sends each old index to its new
/// index, or `None` for deleted vertices.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
    if let Some(bad) = s.iter().find(|&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    let mut keep = VertexSet::full(g.n());
    for v in s.iter() {
        keep.remove(v);
    }
    let (h, old) = g.induced(&keep);
    let mut map = vec![None; g.n()];
    for (i, v) in old.into_iter().enumerate() {
        map[v] = Some(i);
    }
    Ok((h, map))
}

/// A proper vertex coloring with colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(g: &Graph, colors: Vec<usize>, k: usize) -> Result<Self, GraphError> {
        if colors.len() != g.n() {
            return Err(GraphError::ImproperColoring(format!(
                "{} colors for {} vertices",
                colors.len(),
                g.n()
            )));
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(GraphError::ImproperColoring(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(GraphError::ImproperColoring(format!(
                "adjacent vertices {u} and {v} share color {}",
                colors[u]
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Renumbers colors by order of first appearance along vertex order.
    pub(crate) fn canonical(g: &Graph, raw: &[usize]) -> Self {
        let mut relabel = std::collections::HashMap::new();
        let colors: Vec<usize> = raw
            .iter()
            .map(|c| {
                let next = relabel.len() + 1;
                *relabel.entry(*c).or_insert(next)
            })
            .collect();
        let k = relabel.len();
        Coloring::new(g, colors, k).expect("solver produced an improper coloring")
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of colors available.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&b| b).count()
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of each color, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::new(n); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }
}

/// Pairwise-disjoint cliques covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    parts: Vec<VertexSet>,
}

impl CliquePartition {
    pub fn new(g: &Graph, parts: Vec<VertexSet>) -> Result<Self, GraphError> {
        let mut covered = VertexSet::new(g.n());
        for (i, p) in parts.iter().enumerate() {
            if p.universe() != g.n() {
                return Err(GraphError::InvalidPartition(format!(
                    "part {i} has universe {} but the graph has {} vertices",
                    p.universe(),
                    g.n()
                )));
            }
            if p.is_empty() {
                return Err(GraphError::InvalidPartition(format!("part {i} is empty")));
            }
            if p.intersects(&covered) {
                return Err(GraphError::InvalidPartition(format!(
                    "part {i} overlaps an earlier part"
                )));
            }
            if !g.is_clique(p) {
                return Err(GraphError::InvalidPartition(format!("part {i} is not a clique")));
            }
            covered.union_with(p);
        }
        if covered.len() != g.n() {
            return Err(GraphError::InvalidPartition(format!(
                "parts cover {} of {} vertices",
                covered.len(),
                g.n()
            )));
        }
        Ok(CliquePartition { parts })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn complete_graph_counts() {
        assert_eq!(complete_graph(0).n(), 0);
        assert_eq!(complete_graph(0).edge_count(), 0);
        assert_eq!(complete_graph(1).edge_count(), 0);
        let k5 = complete_graph(5);
        assert_eq!((k5.n(), k5.edge_count(), k5.max_degree()), (5, 10, 4));
        assert_simple(&k5);
    }

    #[test]
    fn join_counts() {
        let g = join(&complete_graph(2), &empty_graph(2));
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        assert_eq!(join(&complete_graph(0), &complete_graph(3)), complete_graph(3));
        let gadget = join(&complete_graph(2), &empty_graph(2));
        assert_eq!(gadget.max_degree(), 3);
        assert_simple(&gadget);
    }

    #[test]
    fn union_counts() {
        let k3 = complete_graph(3);
        let (g, off) = disjoint_union(&[&k3, &k3]);
        assert_eq!((g.n(), g.edge_count(), off), (6, 6, vec![0, 3]));
        let (g, _) = disjoint_union(&[]);
        assert_eq!(g.n(), 0);
        let (g, _) = disjoint_union(&[&complete_graph(4), &complete_graph(2)]);
        assert_eq!((g.n(), g.edge_count()), (6, 7));
    }

    #[test]
    fn blow_up_basics() {
        assert_eq!(blow_up_cycle5(1).unwrap(), cycle_graph(5));
        let g2 = blow_up_cycle5(2).unwrap();
        assert_eq!((g2.n(), g2.max_degree()), (10, 5));
        assert_eq!(blow_up_cycle5(3).unwrap().max_degree(), 8);
        assert!(blow_up_cycle5(0).is_err());
        assert_simple(&g2);
    }

    #[test]
    fn delete_vertices_basics() {
        let (g, map) = delete_vertices(&complete_graph(5), &VertexSet::from_vertices(5, [2])).unwrap();
        assert_eq!(g, complete_graph(4));
        assert_eq!(map, vec![Some(0), Some(1), None, Some(2), Some(3)]);
        let c5 = cycle_graph(5);
        let (same, map) = delete_vertices(&c5, &VertexSet::new(5)).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, (0..5).map(Some).collect::<Vec<_>>());
        assert!(delete_vertices(&c5, &VertexSet::from_vertices(7, [6])).is_err());
    }

    #[test]
    fn clique_and_independence_predicates() {
        let c5 = cycle_graph(5);
        assert!(c5.is_independent(&VertexSet::new(5)));
        assert!(c5.is_clique(&VertexSet::from_vertices(5, [0, 1])));
        assert!(!c5.is_clique(&VertexSet::from_vertices(5, [0, 1, 2])));
        assert!(c5.is_independent(&VertexSet::from_vertices(5, [0, 2])));
        assert_eq!(empty_graph(3).max_degree(), 0);
        assert_eq!(Graph::new(0).max_degree(), 0);
    }

    #[test]
    fn vertex_cap() {
        assert!(Graph::try_new(MAX_VERTICES).is_ok());
        assert_eq!(
            Graph::try_new(MAX_VERTICES + 1),
            Err(GraphError::TooLarge(MAX_VERTICES + 1))
        );
    }

    #[test]
    fn coloring_validation() {
        let k3 = complete_graph(3);
        assert!(Coloring::new(&k3, vec![1, 2, 3], 3).is_ok());
        assert!(Coloring::new(&k3, vec![1, 1, 2], 3).is_err());
        assert!(Coloring::new(&k3, vec![1, 2, 4], 3).is_err());
        assert!(Coloring::new(&k3, vec![0, 2, 3], 3).is_err());
        let c = Coloring::canonical(&k3, &[7, 3, 5]);
        assert_eq!(c.colors(), &[1, 2, 3]);
    }

    #[test]
    fn clique_partition_validation() {
        let g = complete_graph(4);
        let p = |vs: &[usize]| VertexSet::from_vertices(4, vs.iter().copied());
        assert!(CliquePartition::new(&g, vec![p(&[0, 1]), p(&[2, 3])]).is_ok());
        assert!(CliquePartition::new(&g, vec![p(&[0, 1]), p(&[1, 2, 3])]).is_err());
        assert!(CliquePartition::new(&g, vec![p(&[0, 1])]).is_err());
        assert!(CliquePartition::new(&cycle_graph(4), vec![p(&[0, 2]), p(&[1, 3])]).is_err());
    }
}
