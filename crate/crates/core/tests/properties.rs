use chromstab::critical::{enumerate_critical_subgraphs, find_critical_subgraph, independent_transversal, is_critical};
use chromstab::graph::{delete_vertices, join, read_dimacs_graph, write_dimacs_graph, VertexSet};
use chromstab::invariants::{chromatic_number, clique_number, is_k_colorable};
use chromstab::sat::{
    hall_satisfier, independence_graph, is_satisfiable, removal_set, validate_plit_qsat, CnfInstance, Literal,
};
use chromstab::stability::{k_delta, reduce_by_color_class};
use chromstab::{Budget, CliquePartition, Coloring, Graph};
use chromstab_oracle::{adjacency, brute_independent_transversal, brute_satisfiable};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// `m`-LIT `2m`-SAT: every literal gets `m` slots, slots are shuffled and
/// dealt `2m` per clause.
fn plit_strategy(m: usize) -> impl Strategy<Value = CnfInstance> {
    (1usize..=5).prop_flat_map(move |vars| {
        let slots: Vec<Literal> = (0..vars)
            .flat_map(|v| std::iter::repeat_n(Literal::pos(v), m).chain(std::iter::repeat_n(Literal::neg(v), m)))
            .collect();
        (1..=vars, Just(slots).prop_shuffle()).prop_map(move |(clauses, slots)| {
            let cs = slots.chunks(2 * m).take(clauses).map(<[Literal]>::to_vec).collect();
            CnfInstance::from_literals(vars, cs).unwrap()
        })
    })
}

fn small_cnf() -> impl Strategy<Value = CnfInstance> {
    (1usize..=5).prop_flat_map(|vars| {
        let lit = (0..vars, any::<bool>()).prop_map(|(v, p)| Literal {
            variable: v,
            positive: p,
        });
        proptest::collection::vec(proptest::collection::vec(lit, 1..4), 1..6)
            .prop_map(move |cs| CnfInstance::from_literals(vars, cs).unwrap())
    })
}

fn u() -> Budget {
    Budget::unlimited()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dimacs_round_trip(g in graph_strategy(12)) {
        let text = write_dimacs_graph(&g);
        let back = read_dimacs_graph(&text).unwrap().graph;
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs_graph(&back), text);
    }

    #[test]
    fn join_degree_law(g in graph_strategy(6), h in graph_strategy(6)) {
        let j = join(&g, &h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        for v in 0..g.n() {
            prop_assert_eq!(j.degree(v), g.degree(v) + h.n());
        }
        for v in 0..h.n() {
            prop_assert_eq!(j.degree(g.n() + v), h.degree(v) + g.n());
        }
        let b = u();
        prop_assert_eq!(
            chromatic_number(&j, &b).unwrap().chi,
            chromatic_number(&g, &b).unwrap().chi + chromatic_number(&h, &b).unwrap().chi
        );
    }

    #[test]
    fn clique_bounds_chromatic(g in graph_strategy(10)) {
        let b = u();
        let r = chromatic_number(&g, &b).unwrap();
        prop_assert!(clique_number(&g, &b).unwrap() <= r.chi);
        prop_assert!(r.chi <= g.max_degree() + 1 || g.n() == 0);
        prop_assert!(g.is_clique(&r.clique));
        if r.chi > 0 {
            prop_assert!(is_k_colorable(&g, r.chi - 1, &b).unwrap().is_none());
        }
    }

    #[test]
    fn color_class_always_reduces(g in graph_strategy(9)) {
        prop_assume!(g.n() > 0);
        let b = u();
        let s = reduce_by_color_class(&g, &b).unwrap();
        prop_assert!(g.is_independent(&s));
        let (h, _) = delete_vertices(&g, &s).unwrap();
        prop_assert_eq!(chromatic_number(&h, &b).unwrap().chi + 1, chromatic_number(&g, &b).unwrap().chi);
    }

    #[test]
    fn critical_subgraphs_are_critical(g in graph_strategy(8)) {
        let b = u();
        let chi = chromatic_number(&g, &b).unwrap().chi;
        prop_assume!(chi >= 2);
        let peeled = find_critical_subgraph(&g, &b).unwrap();
        prop_assert!(is_critical(&g, &peeled, chi, &b).unwrap());
        let all = enumerate_critical_subgraphs(&g, g.n(), &b).unwrap();
        prop_assert!(all.iter().any(|h| peeled.is_subset(h)));
        for h in &all {
            let (sub, _) = g.induced(h);
            prop_assert_eq!(chromatic_number(&sub, &b).unwrap().chi, chi);
            for v in 0..sub.n() {
                let (minus, _) = delete_vertices(&sub, &VertexSet::from_vertices(sub.n(), [v])).unwrap();
                prop_assert_eq!(chromatic_number(&minus, &b).unwrap().chi, chi - 1);
            }
        }
    }

    #[test]
    fn transversal_matches_brute_force(g in graph_strategy(9), cuts in proptest::collection::vec(any::<bool>(), 9)) {
        let n = g.n();
        let mut parts: Vec<Vec<usize>> = vec![Vec::new()];
        for (v, &cut) in cuts.iter().enumerate().take(n) {
            if v > 0 && cut {
                parts.push(Vec::new());
            }
            parts.last_mut().unwrap().push(v);
        }
        parts.retain(|p| !p.is_empty());
        let sets: Vec<VertexSet> = parts.iter().map(|p| VertexSet::from_vertices(n, p.iter().copied())).collect();
        let found = independent_transversal(&g, &sets).unwrap();
        prop_assert_eq!(found.is_some(), brute_independent_transversal(&adjacency(n, &g.edges()), &parts));
        if let Some(t) = found {
            prop_assert!(g.is_independent(&t));
            prop_assert!(sets.iter().all(|p| p.intersection_len(&t) == 1));
        }
    }

    #[test]
    fn hall_satisfies_two_lit_four_sat(inst in plit_strategy(2)) {
        prop_assert!(validate_plit_qsat(&inst, 2, 4).is_ok());
        let a = hall_satisfier(&inst, 2).unwrap();
        prop_assert!(inst.is_satisfied_by(&a));
    }

    #[test]
    fn satisfiability_link(inst in small_cnf()) {
        let clauses: Vec<Vec<(usize, bool)>> = inst
            .clauses()
            .iter()
            .map(|c| c.literals().iter().map(|l| (l.variable, l.positive)).collect())
            .collect();
        let sat = is_satisfiable(&inst).unwrap();
        prop_assert_eq!(sat.is_some(), brute_satisfiable(inst.variable_count(), &clauses));
        if let Some(a) = &sat {
            prop_assert!(inst.is_satisfied_by(a));
        }
        let (g, parts) = independence_graph(&inst).unwrap();
        let t = independent_transversal(&g, parts.parts()).unwrap();
        prop_assert_eq!(sat.is_some(), t.is_some());
    }

    #[test]
    fn removal_keeps_k_minus_one_colors(g in graph_strategy(9)) {
        prop_assume!(g.n() > 0);
        // greedy clique partition along vertex order
        let mut parts: Vec<VertexSet> = Vec::new();
        for v in 0..g.n() {
            match parts.iter_mut().find(|p| p.iter().all(|u| g.has_edge(u, v))) {
                Some(p) => p.insert(v),
                None => parts.push(VertexSet::from_vertices(g.n(), [v])),
            }
        }
        let parts = CliquePartition::new(&g, parts).unwrap();
        let r = chromatic_number(&g, &u()).unwrap();
        let k = r.coloring.max_color();
        let coloring = Coloring::new(&g, r.coloring.colors().to_vec(), k).unwrap();
        let s = removal_set(&g, &parts, &coloring).unwrap();
        prop_assert!(parts.parts().iter().all(|p| p.intersection_len(&s) == 1));
        let surviving = (0..g.n()).filter(|&v| !s.contains(v)).map(|v| coloring.color(v)).max().unwrap_or(0);
        prop_assert!(surviving < k);
    }

    #[test]
    fn k_delta_definition(delta in 2u64..1_000_000_000) {
        let k = k_delta(delta).unwrap();
        prop_assert!((k + 1) * (k + 2) <= delta);
        prop_assert!((k + 2) * (k + 3) > delta);
    }
}
