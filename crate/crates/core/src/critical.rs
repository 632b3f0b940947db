//! Critical subgraphs, their unions, and independent transversals.
//!
//! A graph `H` is `c`-critical when `χ(H) = c` and `χ(H - v) = c - 1` for
//! every vertex `v`. Every vertex set that lowers `χ(G)` must meet every
//! `χ(G)`-critical subgraph, which is what the pipeline at the bottom of
//! this module exploits.

use serde::Serialize;
use thiserror::Error;

use crate::budget::Budget;
use crate::graph::{delete_vertices, Graph, VertexSet};
use crate::invariants::{chromatic_number, is_k_colorable, SolveError};
use crate::stability::k_delta;

/// Full induced-subgraph scans are allowed up to this many vertices.
pub const FULL_SCAN_VERTICES: usize = 16;
/// Otherwise the order of enumerated subgraphs is capped here.
pub const MAX_SCAN_ORDER: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("enumeration limits exceeded: {n} vertices with max order {max_order} (allowed: n <= {FULL_SCAN_VERTICES} or max order <= {MAX_SCAN_ORDER})")]
    LimitsExceeded { n: usize, max_order: usize },
    #[error("chromatic number {0} is too small (need at least 2)")]
    ChiTooSmall(usize),
    #[error("transversal parts overlap at vertex {0}")]
    OverlappingParts(usize),
}

impl From<crate::budget::BudgetExceeded> for CriticalError {
    fn from(e: crate::budget::BudgetExceeded) -> Self {
        CriticalError::Solve(e.into())
    }
}

fn colorable_within(g: &Graph, keep: &VertexSet, k: usize, budget: &Budget) -> Result<bool, SolveError> {
    let (h, _) = g.induced(keep);
    Ok(is_k_colorable(&h, k, budget)?.is_some())
}

/// Deletion filter inside `keep`: drops vertices in increasing index order
/// whenever the rest stays non-`k`-colorable. `g[keep]` must not be
/// `k`-colorable; the result induces a `(k+1)`-critical subgraph.
pub(crate) fn peel_to_critical(
    g: &Graph,
    keep: &VertexSet,
    k: usize,
    budget: &Budget,
) -> Result<VertexSet, SolveError> {
    let mut current = keep.clone();
    for v in keep.iter() {
        current.remove(v);
        if colorable_within(g, &current, k, budget)? {
            current.insert(v);
        }
    }
    Ok(current)
}

/// Whether `s` induces a `chi`-critical subgraph of `g`.
pub fn is_critical(g: &Graph, s: &VertexSet, chi: usize, budget: &Budget) -> Result<bool, SolveError> {
    if chi == 0 {
        return Ok(s.is_empty());
    }
    if colorable_within(g, s, chi - 1, budget)? {
        return Ok(false);
    }
    // chi(H - v) <= chi - 1 for some v already forces chi(H) <= chi
    for v in s.iter() {
        let mut rest = s.clone();
        rest.remove(v);
        if !colorable_within(g, &rest, chi - 1, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy peel of the whole graph: a `χ(g)`-critical induced subgraph.
pub fn find_critical_subgraph(g: &Graph, budget: &Budget) -> Result<VertexSet, CriticalError> {
    let chi = chromatic_number(g, budget)?.chi;
    if chi < 2 {
        return Err(CriticalError::ChiTooSmall(chi));
    }
    Ok(peel_to_critical(g, &g.vertices(), chi - 1, budget)?)
}

/// Vertices of the `d`-core: what remains after repeatedly deleting
/// vertices of degree below `d`.
fn core(g: &Graph, d: usize) -> VertexSet {
    let mut alive = g.vertices();
    loop {
        let weak: Vec<usize> = alive
            .iter()
            .filter(|&v| g.neighbors(v).intersection_len(&alive) < d)
            .collect();
        if weak.is_empty() {
            return alive;
        }
        weak.into_iter().for_each(|v| alive.remove(v));
    }
}

/// Every vertex set of order at most `max_order` inducing a
/// `χ(g)`-critical subgraph, in lexicographic order of sorted vertex lists.
pub fn enumerate_critical_subgraphs(
    g: &Graph,
    max_order: usize,
    budget: &Budget,
) -> Result<Vec<VertexSet>, CriticalError> {
    if g.n() > FULL_SCAN_VERTICES && max_order > MAX_SCAN_ORDER {
        return Err(CriticalError::LimitsExceeded { n: g.n(), max_order });
    }
    let chi = chromatic_number(g, budget)?.chi;
    if chi == 0 {
        return Ok(Vec::new());
    }
    // a chi-critical graph has minimum degree >= chi - 1
    let candidates = core(g, chi - 1).to_vec();
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    enumerate_rec(
        g,
        chi,
        max_order.min(candidates.len()),
        &candidates,
        0,
        &mut chosen,
        &mut found,
        budget,
    )?;
    found.sort_by_key(|s: &VertexSet| s.to_vec());
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    g: &Graph,
    chi: usize,
    max_order: usize,
    candidates: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<VertexSet>,
    budget: &Budget,
) -> Result<(), CriticalError> {
    budget.tick()?;
    if chosen.len() >= chi {
        let s = VertexSet::from_vertices(g.n(), chosen.iter().copied());
        let min_degree_ok = s.iter().all(|v| g.neighbors(v).intersection_len(&s) + 1 >= chi);
        if min_degree_ok && g.is_connected_within(&s) && is_critical(g, &s, chi, budget)? {
            found.push(s);
        }
    }
    if chosen.len() == max_order {
        return Ok(());
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i]);
        enumerate_rec(g, chi, max_order, candidates, i + 1, chosen, found, budget)?;
        chosen.pop();
    }
    Ok(())
}

/// Groups vertex sets into the connected pieces of their union: two sets
/// land in the same piece when they share a vertex (transitively).
fn union_components(n: usize, sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    let mut covered = VertexSet::new(n);
    for s in sets {
        covered.union_with(s);
        let mut it = s.iter();
        if let Some(first) = it.next() {
            for v in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, VertexSet> = std::collections::BTreeMap::new();
    for v in covered.iter() {
        let root = find(&mut parent, v);
        groups.entry(root).or_insert_with(|| VertexSet::new(n)).insert(v);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|c| c.first());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub chi: usize,
    pub delta: usize,
    /// `None` when `Δ < 2`.
    pub k_delta: Option<u64>,
    pub max_order: usize,
    /// True when `max_order` covered every vertex, so the list is complete.
    pub complete: bool,
    pub critical_subgraphs: Vec<Vec<usize>>,
    pub union_components: Vec<Vec<usize>>,
    /// `Δ + 1 + k_Δ`, the component-size bound being compared against.
    pub component_bound: Option<usize>,
    /// Per component: `|C| < Δ + 1 + k_Δ`. Informational only.
    pub bound_satisfied: Vec<bool>,
}

/// Order used when the caller gives none: every order on small graphs,
/// otherwise `min(Δ + 1, 12)`.
pub fn default_max_order(g: &Graph) -> usize {
    if g.n() <= FULL_SCAN_VERTICES {
        g.n()
    } else {
        (g.max_degree() + 1).min(MAX_SCAN_ORDER)
    }
}

pub fn critical_union_report(
    g: &Graph,
    max_order: Option<usize>,
    budget: &Budget,
) -> Result<CriticalityReport, CriticalError> {
    let max_order = max_order.unwrap_or_else(|| default_max_order(g));
    let subgraphs = enumerate_critical_subgraphs(g, max_order, budget)?;
    let chi = chromatic_number(g, budget)?.chi;
    let delta = g.max_degree();
    let kd = k_delta(delta as u64).ok();
    let components = union_components(g.n(), &subgraphs);
    let bound = kd.map(|k| delta + 1 + k as usize);
    let bound_satisfied = components.iter().map(|c| bound.is_some_and(|b| c.len() < b)).collect();
    Ok(CriticalityReport {
        chi,
        delta,
        k_delta: kd,
        max_order,
        complete: max_order >= g.n(),
        critical_subgraphs: subgraphs.iter().map(VertexSet::to_vec).collect(),
        union_components: components.iter().map(VertexSet::to_vec).collect(),
        component_bound: bound,
        bound_satisfied,
    })
}

/// An independent set with exactly one vertex in each part, if any.
///
/// Exact backtracking; the next part is always the one with fewest
/// remaining candidates (ties to the lower part index), candidates tried in
/// increasing order.
pub fn independent_transversal(g: &Graph, parts: &[VertexSet]) -> Result<Option<VertexSet>, CriticalError> {
    let mut seen = VertexSet::new(g.n());
    for p in parts {
        if let Some(v) = p.intersection(&seen).first() {
            return Err(CriticalError::OverlappingParts(v));
        }
        seen.union_with(p);
    }
    let mut done = vec![false; parts.len()];
    let mut chosen = Vec::with_capacity(parts.len());
    let blocked = VertexSet::new(g.n());
    if transversal_rec(g, parts, &mut done, &blocked, &mut chosen) {
        Ok(Some(VertexSet::from_vertices(g.n(), chosen)))
    } else {
        Ok(None)
    }
}

fn transversal_rec(
    g: &Graph,
    parts: &[VertexSet],
    done: &mut [bool],
    blocked: &VertexSet,
    chosen: &mut Vec<usize>,
) -> bool {
    let mut next: Option<(usize, VertexSet)> = None;
    for (i, p) in parts.iter().enumerate() {
        if done[i] {
            continue;
        }
        let options = p.difference(blocked);
        if next.as_ref().is_none_or(|(_, o)| options.len() < o.len()) {
            next = Some((i, options));
        }
    }
    let Some((i, options)) = next else {
        return true;
    };
    done[i] = true;
    for v in options.iter() {
        let mut b = blocked.clone();
        b.insert(v);
        b.union_with(g.neighbors(v));
        chosen.push(v);
        if transversal_rec(g, parts, done, &b, chosen) {
            return true;
        }
        chosen.pop();
    }
    done[i] = false;
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: &'static str,
    pub ok: bool,
    pub detail: String,
}

/// Evidence that `vs_χ = ivs_χ = r`: `r` pairwise-disjoint `χ`-critical
/// subgraphs (so every reducing set has at least `r` vertices) and an
/// independent set of size `r` whose removal lowers `χ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineCertificate {
    pub chi: usize,
    pub r: usize,
    pub components: Vec<Vec<usize>>,
    pub disjoint_critical: Vec<Vec<usize>>,
    pub transversal: Vec<usize>,
    pub reduced_chi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineOutcome {
    pub certificate: Option<PipelineCertificate>,
    pub trace: Vec<TraceStep>,
}

impl PipelineCertificate {
    /// Re-checks every claim of the certificate from scratch.
    pub fn validate(&self, g: &Graph, budget: &Budget) -> Result<bool, SolveError> {
        let n = g.n();
        if self.disjoint_critical.len() != self.r || self.transversal.len() != self.r {
            return Ok(false);
        }
        let mut used = VertexSet::new(n);
        for h in &self.disjoint_critical {
            let s = VertexSet::from_vertices(n, h.iter().copied());
            if s.intersects(&used) || !is_critical(g, &s, self.chi, budget)? {
                return Ok(false);
            }
            used.union_with(&s);
        }
        let i = VertexSet::from_vertices(n, self.transversal.iter().copied());
        if i.len() != self.r || !g.is_independent(&i) {
            return Ok(false);
        }
        let (rest, _) = delete_vertices(g, &i).expect("transversal inside graph");
        Ok(chromatic_number(&rest, budget)?.chi + 1 == self.chi)
    }
}

/// Mechanical run of the "critical components + singleton colors +
/// transversal" recipe. Returns a certificate when every step goes through,
/// and a step trace either way.
pub fn vs_ivs_pipeline(g: &Graph, budget: &Budget) -> Result<PipelineOutcome, CriticalError> {
    let mut trace = Vec::new();
    let fail = |trace: Vec<TraceStep>| {
        Ok(PipelineOutcome {
            certificate: None,
            trace,
        })
    };

    let chi = chromatic_number(g, budget)?;
    let ok = chi.chi >= 1;
    trace.push(TraceStep {
        step: "chromatic",
        ok,
        detail: format!("chi = {}", chi.chi),
    });
    if !ok {
        return fail(trace);
    }

    let report = critical_union_report(g, None, budget)?;
    let ok = !report.union_components.is_empty();
    trace.push(TraceStep {
        step: "critical-union",
        ok,
        detail: format!(
            "{} critical subgraphs of order <= {}, {} union components of sizes {:?}",
            report.critical_subgraphs.len(),
            report.max_order,
            report.union_components.len(),
            report.union_components.iter().map(Vec::len).collect::<Vec<_>>()
        ),
    });
    if !ok {
        return fail(trace);
    }
    let n = g.n();
    let components: Vec<VertexSet> = report
        .union_components
        .iter()
        .map(|c| VertexSet::from_vertices(n, c.iter().copied()))
        .collect();

    // one critical subgraph inside each component; components are disjoint
    let representatives: Vec<Vec<usize>> = components
        .iter()
        .map(|c| {
            report
                .critical_subgraphs
                .iter()
                .find(|h| h.iter().all(|&v| c.contains(v)))
                .cloned()
                .expect("every component contains a critical subgraph")
        })
        .collect();

    let coloring = &chi.coloring;
    let singles: Vec<VertexSet> = components
        .iter()
        .map(|c| {
            let mut counts = vec![0usize; coloring.k() + 1];
            c.iter().for_each(|v| counts[coloring.color(v)] += 1);
            VertexSet::from_vertices(n, c.iter().filter(|&v| counts[coloring.color(v)] == 1))
        })
        .collect();
    let ok = singles.iter().all(|s| !s.is_empty());
    trace.push(TraceStep {
        step: "singleton-colours",
        ok,
        detail: format!(
            "vertices with a colour unique on their component: {:?}",
            singles.iter().map(VertexSet::len).collect::<Vec<_>>()
        ),
    });
    if !ok {
        return fail(trace);
    }

    if let Some(k) = report.k_delta {
        let outside = components
            .iter()
            .flat_map(|c| c.iter().map(move |v| (v, c)))
            .map(|(v, c)| g.neighbors(v).difference(c).len())
            .max()
            .unwrap_or(0);
        let min_single = singles.iter().map(VertexSet::len).min().unwrap_or(0);
        trace.push(TraceStep {
            step: "transversal-hypotheses",
            ok: true,
            detail: format!(
                "k_delta = {k}; smallest singleton set {min_single} vs 2k = {}; max outside degree {outside} vs k = {k} (informational)",
                2 * k
            ),
        });
    }

    let transversal = independent_transversal(g, &singles)?;
    let Some(transversal) = transversal else {
        trace.push(TraceStep {
            step: "transversal",
            ok: false,
            detail: "no independent transversal of the singleton-colour sets".into(),
        });
        return fail(trace);
    };
    trace.push(TraceStep {
        step: "transversal",
        ok: true,
        detail: format!("{:?}", transversal.to_vec()),
    });

    let (rest, _) = delete_vertices(g, &transversal).expect("transversal inside graph");
    let reduced = chromatic_number(&rest, budget)?.chi;
    let ok = reduced + 1 == chi.chi;
    trace.push(TraceStep {
        step: "verify-drop",
        ok,
        detail: format!("chi after removal = {reduced}"),
    });
    if !ok {
        return fail(trace);
    }

    Ok(PipelineOutcome {
        certificate: Some(PipelineCertificate {
            chi: chi.chi,
            r: components.len(),
            components: report.union_components.clone(),
            disjoint_critical: representatives,
            transversal: transversal.to_vec(),
            reduced_chi: reduced,
        }),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, disjoint_union};

    fn b() -> Budget {
        Budget::unlimited()
    }

    fn k4_with_pendant() -> Graph {
        let mut g = Graph::new(5);
        for (u, v) in complete_graph(4).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(3, 4);
        g
    }

    #[test]
    fn peel_finds_k4() {
        assert_eq!(
            find_critical_subgraph(&k4_with_pendant(), &b()).unwrap().to_vec(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(find_critical_subgraph(&cycle_graph(5), &b()).unwrap().len(), 5);
        assert!(matches!(
            find_critical_subgraph(&Graph::new(3), &b()),
            Err(CriticalError::ChiTooSmall(1))
        ));
    }

    #[test]
    fn enumerates_two_triangles() {
        let k3 = complete_graph(3);
        let (g, _) = disjoint_union(&[&k3, &k3]);
        let found: Vec<Vec<usize>> = enumerate_critical_subgraphs(&g, 6, &b())
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(found, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn odd_cycle_is_its_only_critical_subgraph() {
        let found = enumerate_critical_subgraphs(&cycle_graph(5), 5, &b()).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 5);
    }

    #[test]
    fn enumeration_limits() {
        let g = Graph::new(20);
        assert!(matches!(
            enumerate_critical_subgraphs(&g, 13, &b()),
            Err(CriticalError::LimitsExceeded { .. })
        ));
        assert!(enumerate_critical_subgraphs(&g, 12, &b()).is_ok());
    }

    #[test]
    fn union_report_on_bridged_cliques() {
        let k4 = complete_graph(4);
        let (mut g, _) = disjoint_union(&[&k4, &k4]);
        g.add_edge(3, 4);
        let r = critical_union_report(&g, None, &b()).unwrap();
        assert_eq!(r.chi, 4);
        assert_eq!(r.union_components, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert!(r.complete);
    }

    #[test]
    fn transversal_examples() {
        let k2 = complete_graph(2);
        let (g, _) = disjoint_union(&[&k2, &k2]);
        let parts = [VertexSet::from_vertices(4, [0, 1]), VertexSet::from_vertices(4, [2, 3])];
        assert_eq!(
            independent_transversal(&g, &parts).unwrap().unwrap().to_vec(),
            vec![0, 2]
        );

        // a1 = 0, a2 = 1, b1 = 2, b2 = 3 with edges a1b1 and a2b2
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            independent_transversal(&g, &parts).unwrap().unwrap().to_vec(),
            vec![0, 3]
        );

        let g = Graph::from_edges(4, [(0, 2), (1, 3), (0, 3), (1, 2)]).unwrap();
        assert_eq!(independent_transversal(&g, &parts).unwrap(), None);
        assert_eq!(independent_transversal(&g, &[]).unwrap().unwrap().len(), 0);

        let overlapping = [VertexSet::from_vertices(4, [0, 1]), VertexSet::from_vertices(4, [1, 2])];
        assert!(independent_transversal(&g, &overlapping).is_err());
    }

    #[test]
    fn pipeline_on_disjoint_cliques() {
        let k4 = complete_graph(4);
        let (g, _) = disjoint_union(&[&k4, &k4, &k4]);
        let out = vs_ivs_pipeline(&g, &b()).unwrap();
        let cert = out.certificate.expect("disjoint cliques certify");
        assert_eq!(cert.r, 3);
        assert_eq!(cert.transversal, vec![0, 4, 8]);
        assert!(cert.validate(&g, &b()).unwrap());
    }
}
