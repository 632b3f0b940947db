//! Independence graphs of CNF instances and the certificates built on them.

use serde::Serialize;

use super::{is_satisfiable, validate_plit_qsat, CnfInstance, SatError};
use crate::budget::Budget;
use crate::critical::independent_transversal;
use crate::graph::{CliquePartition, Coloring, Graph, VertexSet};
use crate::invariants::chromatic_number;

/// One vertex per literal occurrence, clause by clause in canonical literal
/// order; edges join occurrences in the same clause and complementary
/// literals anywhere. The clause blocks form the returned partition.
pub fn independence_graph(inst: &CnfInstance) -> Result<(Graph, CliquePartition), SatError> {
    let (g, blocks) = literal_graph(inst, 0)?;
    let parts = blocks.into_iter().map(|b| VertexSet::from_vertices(g.n(), b)).collect();
    let partition = CliquePartition::new(&g, parts)?;
    Ok((g, partition))
}

/// [`independence_graph`] plus two nonadjacent vertices per clause joined to
/// that clause's literal vertices. With `L` literal vertices, clause `c`'s
/// extra vertices are `L + 2c` and `L + 2c + 1`; each is its own part.
pub fn augmented_independence_graph(inst: &CnfInstance) -> Result<(Graph, CliquePartition), SatError> {
    let extra = 2 * inst.clauses().len();
    let (mut g, blocks) = literal_graph(inst, extra)?;
    let l = inst.literal_count();
    for (c, block) in blocks.iter().enumerate() {
        for u in [l + 2 * c, l + 2 * c + 1] {
            for &v in block {
                g.add_edge(u, v);
            }
        }
    }
    let n = g.n();
    let mut parts: Vec<VertexSet> = blocks.into_iter().map(|b| VertexSet::from_vertices(n, b)).collect();
    parts.extend((l..n).map(|u| VertexSet::from_vertices(n, [u])));
    let partition = CliquePartition::new(&g, parts)?;
    Ok((g, partition))
}

/// Literal vertices plus `extra` isolated vertices appended at the end.
fn literal_graph(inst: &CnfInstance, extra: usize) -> Result<(Graph, Vec<Vec<usize>>), SatError> {
    let mut g = Graph::try_new(inst.literal_count() + extra)?;
    let mut blocks = Vec::with_capacity(inst.clauses().len());
    let mut owners: Vec<(super::Literal, usize)> = Vec::new();
    let mut next = 0;
    for c in inst.clauses() {
        let block: Vec<usize> = (next..next + c.len()).collect();
        next += c.len();
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                g.add_edge(u, v);
            }
        }
        for (&l, &u) in c.literals().iter().zip(&block) {
            owners.push((l, u));
        }
        blocks.push(block);
    }
    for (i, &(l, u)) in owners.iter().enumerate() {
        for &(l2, v) in &owners[i + 1..] {
            if l2 == l.complement() {
                g.add_edge(u, v);
            }
        }
    }
    Ok((g, blocks))
}

/// One vertex per part, each a highest-colored vertex of its part (ties to
/// the smaller index). Every vertex of the top color lies in a different
/// part, so all of them are removed and at most `k - 1` colors survive.
pub fn removal_set(g: &Graph, parts: &CliquePartition, coloring: &Coloring) -> Result<VertexSet, SatError> {
    let coloring = Coloring::new(g, coloring.colors().to_vec(), coloring.k())?;
    let parts = CliquePartition::new(g, parts.parts().to_vec())?;
    let mut s = VertexSet::new(g.n());
    for p in parts.parts() {
        let best = p
            .iter()
            .max_by(|&u, &v| coloring.color(u).cmp(&coloring.color(v)).then(v.cmp(&u)))
            .expect("parts are nonempty");
        s.insert(best);
    }
    Ok(s)
}

/// Certificates that the augmented graph of an unsatisfiable `m`-LIT
/// `(2m-1)`-SAT instance with `c` clauses has `vs_χ = vs_ω = c < ivs_ω`.
///
/// - `disjoint_cliques`: `c` disjoint `2m`-cliques, so any set lowering `ω`
///   has at least `c` vertices.
/// - `coloring`: a `2m`-coloring, so `χ = ω = 2m`; hence a set lowering `χ`
///   also lowers `ω`, and `vs_χ >= vs_ω >= c`.
/// - `removal_set` with `reduced_coloring` (0 on removed vertices): a
///   `(2m-1)`-coloring of the rest, so `vs_ω <= vs_χ <= c`.
/// - `unsatisfiable` and `no_independent_clause_transversal`: an independent
///   set of size `c` lowering `ω` would have to pick one literal vertex per
///   clause (an augment vertex leaves its twin's clique unhit), which would
///   satisfy the instance. So `ivs_ω > c` (or does not exist).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityCertificate {
    pub m: usize,
    pub clause_count: usize,
    pub vertex_count: usize,
    pub disjoint_cliques: Vec<Vec<usize>>,
    pub coloring: Vec<usize>,
    pub removal_set: Vec<usize>,
    pub reduced_coloring: Vec<usize>,
    pub unsatisfiable: bool,
    pub no_independent_clause_transversal: bool,
    pub vs_chi: usize,
    pub vs_omega: usize,
    pub ivs_omega_lower: usize,
}

fn fail<T>(msg: impl Into<String>) -> Result<T, SatError> {
    Err(SatError::Certificate(msg.into()))
}

fn is_generated_family(inst: &CnfInstance, m: usize) -> Result<bool, SatError> {
    let family = super::gen_unsat_family(m)?;
    Ok(family.variable_count() == inst.variable_count() && family.clauses() == inst.clauses())
}

fn greedy_extend(
    g: &Graph,
    colors: &mut [usize],
    order: impl Iterator<Item = usize>,
    limit: usize,
) -> Result<(), SatError> {
    for u in order {
        let used: Vec<usize> = g.neighbors(u).iter().map(|v| colors[v]).collect();
        match (1..=limit).find(|c| !used.contains(c)) {
            Some(c) => colors[u] = c,
            None => return fail(format!("vertex {u} has no free color among 1..={limit}")),
        }
    }
    Ok(())
}

pub fn stability_certificates(inst: &CnfInstance, m: usize, budget: &Budget) -> Result<StabilityCertificate, SatError> {
    if m < 2 {
        return Err(SatError::InvalidM { m, min: 2 });
    }
    validate_plit_qsat(inst, m, 2 * m - 1).map_err(|violation| SatError::NotPlitQsat {
        p: m,
        q: 2 * m - 1,
        violation,
    })?;
    let (base, blocks) = independence_graph(inst)?;
    let (g, _) = augmented_independence_graph(inst)?;
    let l = inst.literal_count();
    let c = inst.clauses().len();
    let k = 2 * m;

    let disjoint_cliques: Vec<Vec<usize>> = blocks
        .parts()
        .iter()
        .enumerate()
        .map(|(i, b)| b.iter().chain([l + 2 * i]).collect())
        .collect();

    let literal_colors = if is_generated_family(inst, m)? {
        super::family_coloring(m)?
    } else {
        chromatic_number(&base, budget)?.coloring.colors().to_vec()
    };
    let top = literal_colors.iter().copied().max().unwrap_or(0);
    if top > k {
        return fail(format!("independence graph coloring uses {top} > {k} colors"));
    }
    let literal_coloring = Coloring::new(&base, literal_colors, top)?;
    let mut coloring = vec![0; g.n()];
    coloring[..l].copy_from_slice(literal_coloring.colors());
    greedy_extend(&g, &mut coloring, l..g.n(), k)?;

    let s = removal_set(&base, &blocks, &literal_coloring)?;
    let mut reduced = vec![0; g.n()];
    for v in (0..l).filter(|&v| !s.contains(v)) {
        reduced[v] = literal_coloring.color(v);
    }
    greedy_extend(&g, &mut reduced, l..g.n(), k - 1)?;

    let unsatisfiable = is_satisfiable(inst)?.is_none();
    let no_transversal = independent_transversal(&base, blocks.parts())
        .map_err(|e| SatError::Certificate(e.to_string()))?
        .is_none();

    let cert = StabilityCertificate {
        m,
        clause_count: c,
        vertex_count: g.n(),
        disjoint_cliques,
        coloring,
        removal_set: s.to_vec(),
        reduced_coloring: reduced,
        unsatisfiable,
        no_independent_clause_transversal: no_transversal,
        vs_chi: c,
        vs_omega: c,
        ivs_omega_lower: c + 1,
    };
    cert.validate(inst)?;
    Ok(cert)
}

impl StabilityCertificate {
    /// Re-checks every part against a freshly built augmented graph.
    pub fn validate(&self, inst: &CnfInstance) -> Result<(), SatError> {
        let (g, _) = augmented_independence_graph(inst)?;
        let (base, blocks) = independence_graph(inst)?;
        let n = g.n();
        let (c, k) = (inst.clauses().len(), 2 * self.m);
        if self.clause_count != c || self.vertex_count != n {
            return fail("instance dimensions do not match");
        }
        if self.vs_chi != c || self.vs_omega != c || self.ivs_omega_lower != c + 1 {
            return fail("claimed values do not match the clause count");
        }

        if self.disjoint_cliques.len() != c {
            return fail(format!("{} cliques for {c} clauses", self.disjoint_cliques.len()));
        }
        let mut used = VertexSet::new(n);
        for (i, q) in self.disjoint_cliques.iter().enumerate() {
            if q.iter().any(|&v| v >= n) {
                return fail(format!("clique {i} leaves the graph"));
            }
            let set = VertexSet::from_vertices(n, q.iter().copied());
            if set.len() != k || !g.is_clique(&set) {
                return fail(format!("clique {i} is not a {k}-clique"));
            }
            if set.intersects(&used) {
                return fail(format!("clique {i} overlaps an earlier clique"));
            }
            used.union_with(&set);
        }

        let coloring = Coloring::new(&g, self.coloring.clone(), k).map_err(|e| SatError::Certificate(e.to_string()))?;
        debug_assert!(coloring.max_color() <= k);

        if self.removal_set.len() != c || self.removal_set.iter().any(|&v| v >= base.n()) {
            return fail("removal set must be one literal vertex per clause");
        }
        let s = VertexSet::from_vertices(n, self.removal_set.iter().copied());
        for (i, b) in blocks.parts().iter().enumerate() {
            let hits = self.removal_set.iter().filter(|&&v| b.contains(v)).count();
            if hits != 1 {
                return fail(format!("removal set meets clause {i} {hits} times"));
            }
        }
        if self.reduced_coloring.len() != n {
            return fail("reduced coloring has the wrong length");
        }
        for v in 0..n {
            let col = self.reduced_coloring[v];
            if s.contains(v) != (col == 0) || col >= k {
                return fail(format!("vertex {v} has reduced color {col}"));
            }
        }
        if let Some((u, v)) = g
            .edges()
            .into_iter()
            .find(|&(u, v)| !s.contains(u) && !s.contains(v) && self.reduced_coloring[u] == self.reduced_coloring[v])
        {
            return fail(format!("reduced coloring clashes on edge {u}-{v}"));
        }

        if !self.unsatisfiable || is_satisfiable(inst)?.is_some() {
            return fail("instance is satisfiable");
        }
        let transversal =
            independent_transversal(&base, blocks.parts()).map_err(|e| SatError::Certificate(e.to_string()))?;
        if !self.no_independent_clause_transversal || transversal.is_some() {
            return fail("an independent clause transversal exists");
        }
        Ok(())
    }
}
