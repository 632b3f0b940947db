//! Exact solvers against the brute-force oracle on random small graphs.

use chromstab::invariants::{chromatic_number, clique_number};
use chromstab::stability::{independent_vertex_stability, vertex_stability, Parameter};
use chromstab::{Budget, Graph};
use chromstab_oracle::{adjacency, naive_chromatic, naive_clique_number, naive_stability, Param};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn invariants_match_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    let b = Budget::unlimited();
    for _ in 0..300 {
        let n = rng.gen_range(0..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let adj = adjacency(n, &g.edges());
        assert_eq!(chromatic_number(&g, &b).unwrap().chi, naive_chromatic(&adj));
        assert_eq!(clique_number(&g, &b).unwrap(), naive_clique_number(&adj));
    }
}

#[test]
fn stability_matches_oracle_with_witnesses() {
    let mut rng = StdRng::seed_from_u64(11);
    let b = Budget::unlimited();
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let adj = adjacency(n, &g.edges());
        for (param, oracle) in [(Parameter::Chi, Param::Chi), (Parameter::Omega, Param::Omega)] {
            let vs = vertex_stability(&g, param, &b).unwrap().to_vec();
            let expect = naive_stability(&adj, oracle, false).unwrap();
            assert_eq!((vs.len(), vs), expect, "{param:?} {:?}", g.edges());

            let ivs = independent_vertex_stability(&g, param, &b).unwrap().map(|s| s.to_vec());
            let expect = naive_stability(&adj, oracle, true).map(|(_, w)| w);
            assert_eq!(ivs, expect, "independent {param:?} {:?}", g.edges());
        }
    }
}
