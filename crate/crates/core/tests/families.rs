use chromstab::constructions::{
    construct_c5blowup, construct_constr1, construct_prop31, expected_invariants_check, ClaimStatus,
};
use chromstab::critical::{
    critical_union_report, enumerate_critical_subgraphs, find_critical_subgraph, vs_ivs_pipeline,
};
use chromstab::graph::{complete_graph, disjoint_union, write_dimacs_graph};
use chromstab::invariants::chromatic_number;
use chromstab::sat::{
    augmented_independence_graph, family_coloring, gen_unsat_family, gen_unsat_levels, independence_graph,
    is_satisfiable, stability_certificates, validate_plit_qsat,
};
use chromstab::stability::{stability_report, vertex_stability, Parameter};
use chromstab::{Budget, Coloring, Graph};

fn u() -> Budget {
    Budget::unlimited()
}

fn assert_all_pass(g: &Graph, meta: &chromstab::constructions::ConstructionMeta) {
    for c in expected_invariants_check(g, meta, &u()) {
        assert_eq!(c.status, ClaimStatus::Pass, "{:?} {c:?}", meta.params);
    }
}

#[test]
fn prop31_claims() {
    for chi in 4..=7 {
        let (g, meta) = construct_prop31(chi, None).unwrap();
        assert_all_pass(&g, &meta);
    }
}

#[test]
fn constr1_claims() {
    for delta in 3..=6 {
        let (g, meta) = construct_constr1(delta).unwrap();
        assert_all_pass(&g, &meta);
    }
}

#[test]
fn c5_blowup_parity() {
    for k in 1..=3 {
        let (g, meta) = construct_c5blowup(k).unwrap();
        assert_all_pass(&g, &meta);
        let vs = vertex_stability(&g, Parameter::Chi, &u()).unwrap().len();
        assert_eq!(vs, if k % 2 == 1 { 1 } else { 2 }, "k={k}");
    }
}

#[test]
fn generators_are_deterministic() {
    let a = write_dimacs_graph(&construct_prop31(6, None).unwrap().0);
    let b = write_dimacs_graph(&construct_prop31(6, None).unwrap().0);
    assert_eq!(a, b);
    let a = write_dimacs_graph(&construct_constr1(5).unwrap().0);
    assert_eq!(a, write_dimacs_graph(&construct_constr1(5).unwrap().0));
}

#[test]
fn prop31_critical_structure() {
    let (g, _) = construct_prop31(4, None).unwrap();
    // vertex 0 goes first: each gadget copy still forces four colors
    let peeled = find_critical_subgraph(&g, &u()).unwrap();
    assert_eq!(peeled.to_vec(), vec![1, 2, 3, 8, 9, 10, 11]);
    let found = enumerate_critical_subgraphs(&g, 5, &u()).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].to_vec(), vec![0, 1, 2, 3]);

    // orders up to delta + 1 see only the central clique
    let r = critical_union_report(&g, Some(6), &u()).unwrap();
    // (0+1)(0+2) <= 5 < (1+1)(1+2)
    assert_eq!(r.k_delta, Some(0));
    assert_eq!(r.component_bound, Some(6));
    assert_eq!(r.union_components, vec![vec![0, 1, 2, 3]]);
    assert_eq!(r.bound_satisfied, vec![true]);

    let full = critical_union_report(&g, None, &u()).unwrap();
    assert!(full.complete);
    assert!(full.critical_subgraphs.contains(&peeled.to_vec()));
    assert_eq!(full.union_components.len(), 1);
}

#[test]
fn prop31_pipeline_fixture() {
    // vs = 2 < ivs = 3 here, so the pipeline can never certify vs = ivs
    let (g, _) = construct_prop31(4, None).unwrap();
    let out = vs_ivs_pipeline(&g, &u()).unwrap();
    assert!(out.certificate.is_none());
    assert!(out.trace.iter().any(|s| !s.ok));
}

#[test]
fn pipeline_on_matched_k5s() {
    let k5 = complete_graph(5);
    let (base, _) = disjoint_union(&[&k5, &k5]);
    let mut edges = base.edges();
    edges.extend([(0, 5), (1, 6)]);
    let g = Graph::from_edges(10, edges).unwrap();
    let out = vs_ivs_pipeline(&g, &u()).unwrap();
    let cert = out.certificate.expect("two K5's certify");
    assert_eq!(cert.r, 2);
    assert!(cert.validate(&g, &u()).unwrap());
    let r = stability_report(&g, Parameter::Chi, &u()).unwrap();
    assert_eq!((r.value, r.independent_value), (Some(2), Some(2)));
}

#[test]
fn unsat_family_levels() {
    for m in 2..=4 {
        let levels = gen_unsat_levels(m).unwrap();
        let r = levels.len() - 1;
        for (i, level) in levels.iter().enumerate() {
            let q = 2 * m - (1 << (r - i));
            assert!(validate_plit_qsat(level, m, q).is_ok(), "m={m} level={i}");
            assert_eq!(is_satisfiable(level).unwrap(), None);
        }
        let last = levels.last().unwrap();
        assert_eq!(last.clauses().len(), 1 << (r + 1));
        assert_eq!(last.variable_count(), (1 << (r + 1)) - 1);
    }
}

#[test]
fn independence_graph_chromatic_numbers() {
    let b = u();
    for m in 2..=3 {
        let (g, _) = independence_graph(&gen_unsat_family(m).unwrap()).unwrap();
        assert_eq!(chromatic_number(&g, &b).unwrap().chi, 2 * m);
    }
    let (g, _) = independence_graph(&gen_unsat_family(4).unwrap()).unwrap();
    assert!(Coloring::new(&g, family_coloring(4).unwrap(), 8).is_ok());
    assert_eq!(chromstab::invariants::clique_number(&g, &b).unwrap(), 8);
}

#[test]
fn augmented_degree_law() {
    for m in 2..=4 {
        let inst = gen_unsat_family(m).unwrap();
        let (g, _) = augmented_independence_graph(&inst).unwrap();
        let l = inst.literal_count();
        assert_eq!((0..l).map(|v| g.degree(v)).max(), Some(3 * m));
        assert!((l..g.n()).all(|v| g.degree(v) == 2 * m - 1));
    }
}

#[test]
fn certificates_agree_with_full_search_for_m2() {
    let inst = gen_unsat_family(2).unwrap();
    let cert = stability_certificates(&inst, 2, &u()).unwrap();
    let (g, _) = augmented_independence_graph(&inst).unwrap();
    let chi = stability_report(&g, Parameter::Chi, &u()).unwrap();
    let omega = stability_report(&g, Parameter::Omega, &u()).unwrap();
    assert_eq!(chi.value, Some(cert.vs_chi));
    assert_eq!(omega.value, Some(cert.vs_omega));
    assert!(omega.independent_value.is_none_or(|v| v >= cert.ivs_omega_lower));

    let cert3 = stability_certificates(&gen_unsat_family(3).unwrap(), 3, &u()).unwrap();
    assert_eq!((cert3.vs_chi, cert3.vs_omega), (8, 8));
}
