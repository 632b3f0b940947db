//! Seeded random inputs for the property suites.

use chromstab::sat::{CnfInstance, Literal};
use chromstab::{Graph, VertexSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// `G(n, p)`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("corpus graphs are small")
}

/// Random `m`-LIT `2m`-SAT instance on `vars` variables: every literal gets
/// `m` slots, the slots are shuffled and dealt `2m` per clause, and between
/// one and `vars` clauses are kept.
pub fn random_plit(rng: &mut StdRng, m: usize, vars: usize) -> CnfInstance {
    let mut slots: Vec<Literal> = (0..vars)
        .flat_map(|v| std::iter::repeat_n(Literal::pos(v), m).chain(std::iter::repeat_n(Literal::neg(v), m)))
        .collect();
    slots.shuffle(rng);
    let clauses = rng.gen_range(1..=vars);
    let cs = slots.chunks(2 * m).take(clauses).map(<[Literal]>::to_vec).collect();
    CnfInstance::from_literals(vars, cs).expect("dealt clauses are nonempty and in range")
}

/// Parts that are cliques of size `2k` or `2k + 1`, plus random cross
/// edges keeping every vertex's degree outside its own part at most `k`.
pub fn haxell_instance(rng: &mut StdRng, r: usize, k: usize) -> (Graph, Vec<VertexSet>) {
    let sizes: Vec<usize> = (0..r).map(|_| 2 * k + rng.gen_range(0..=1)).collect();
    let n: usize = sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
        for u in start..start + s {
            edges.extend((u + 1..start + s).map(|v| (u, v)));
        }
        start += s;
    }
    let mut cross = vec![0; n];
    for _ in 0..n * k {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if part_of[u] != part_of[v] && cross[u] < k && cross[v] < k && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
            cross[u] += 1;
            cross[v] += 1;
        }
    }
    let g = Graph::from_edges(n, edges).expect("corpus graphs are small");
    let parts = (0..r)
        .map(|i| VertexSet::from_vertices(n, (0..n).filter(|&v| part_of[v] == i)))
        .collect();
    (g, parts)
}

/// A planted clique of random size plus sparse noise; callers filter for
/// the property they need.
pub fn planted_clique_graph(rng: &mut StdRng, n: usize) -> Graph {
    let c = rng.gen_range(2..=n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let clique = &order[..c];
    let p = rng.gen_range(0.0..0.35);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (clique.contains(&u) && clique.contains(&v)) || rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("corpus graphs are small")
}
