//! Acceptance run: one PASS/FAIL line per criterion, exact integer
//! comparisons throughout. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use chromstab::invariants::{chromatic_number, clique_number};
use chromstab::stability::{independent_vertex_stability, vertex_stability};
use chromstab::{Budget, Parameter};
use chromstab_cli::corpus::random_graph;
use chromstab_cli::report::{Status, VerificationResult};
use chromstab_cli::suites::{run_suite, Params, Settings, Suite};
use chromstab_oracle::{adjacency, naive_chromatic, naive_clique_number, naive_stability, Param};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SETTINGS: Settings = Settings {
    budget: chromstab::DEFAULT_NODE_BUDGET,
    seed: 0x5eed,
};

type Check = Result<String, String>;
/// Name, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Check, u64);

fn suite(s: Suite, p: Params) -> Result<Vec<VerificationResult>, String> {
    run_suite(s, &p, &SETTINGS).map_err(|e| e.to_string())
}

/// Every result passes and every id in `required` is present.
fn all_pass(results: &[VerificationResult], required: &[&str]) -> Check {
    if let Some(r) = results.iter().find(|r| r.status != Status::Pass) {
        return Err(format!(
            "{} is {:?}: computed {} expected {}",
            r.claim_id, r.status, r.computed, r.expected
        ));
    }
    if let Some(id) = required.iter().find(|id| !results.iter().any(|r| r.claim_id == **id)) {
        return Err(format!("missing claim {id}"));
    }
    Ok(format!("{} claims", results.len()))
}

fn range(r: std::ops::RangeInclusive<usize>) -> Option<std::ops::RangeInclusive<usize>> {
    Some(r)
}

fn prop31() -> Check {
    let rs = suite(
        Suite::Prop31,
        Params {
            chi: range(4..=8),
            ..Params::default()
        },
    )?;
    let mut required = vec!["prop31.chi4.ivs".to_string()];
    for chi in 4..=8 {
        for c in ["chi", "omega", "delta", "vs", "ivs_lower"] {
            required.push(format!("prop31.chi{chi}.{c}"));
        }
    }
    all_pass(&rs, &required.iter().map(String::as_str).collect::<Vec<_>>())
}

fn prop31_variant() -> Check {
    let rs = suite(Suite::Prop31Variant, Params::default())?;
    let ids: Vec<String> = [9, 16]
        .iter()
        .flat_map(|chi| ["chi", "omega", "delta", "vs", "ivs"].map(|c| format!("prop31_variant.chi{chi}.{c}")))
        .collect();
    all_pass(&rs, &ids.iter().map(String::as_str).collect::<Vec<_>>())
}

fn constr1() -> Check {
    let rs = suite(
        Suite::Constr1,
        Params {
            delta: range(3..=6),
            ..Params::default()
        },
    )?;
    let ids: Vec<String> = (3..=6)
        .flat_map(|d| ["chi", "omega", "vs", "vs_omega", "ivs", "ivs_omega"].map(|c| format!("constr1.delta{d}.{c}")))
        .collect();
    all_pass(&rs, &ids.iter().map(String::as_str).collect::<Vec<_>>())
}

fn c5blowup() -> Check {
    let rs = suite(
        Suite::C5blowup,
        Params {
            k: range(1..=3),
            ..Params::default()
        },
    )?;
    let ids: Vec<String> = (1..=3)
        .flat_map(|k| {
            ["omega", "delta", "chi", "vs_omega", "ivs_omega", "vs_eq_ivs", "parity"]
                .map(|c| format!("c5blowup.k{k}.{c}"))
        })
        .collect();
    all_pass(&rs, &ids.iter().map(String::as_str).collect::<Vec<_>>())
}

fn sat() -> Check {
    let rs = suite(
        Suite::Sat,
        Params {
            m: range(2..=4),
            ..Params::default()
        },
    )?;
    let mut ids: Vec<String> = (2..=4)
        .flat_map(|m| ["plit", "unsat", "counts", "chi_independence_graph"].map(|c| format!("sat.m{m}.{c}")))
        .collect();
    ids.extend(["sat.m2.full.vs_chi", "sat.m2.full.vs_omega", "sat.m2.full.ivs_omega"].map(String::from));
    ids.extend(["sat.m3.cert.vs_chi", "sat.m3.cert.vs_omega"].map(String::from));
    all_pass(&rs, &ids.iter().map(String::as_str).collect::<Vec<_>>())
}

fn tovey() -> Check {
    let rs = suite(
        Suite::Tovey,
        Params {
            m: range(2..=3),
            samples: Some(200),
            ..Params::default()
        },
    )?;
    all_pass(&rs, &["tovey.m2.hall", "tovey.m3.hall"])
}

fn fbounds() -> Check {
    let rs = suite(
        Suite::Fbounds,
        Params {
            delta: range(3..=10),
            ..Params::default()
        },
    )?;
    let mut ids: Vec<String> = (3..=10).map(|d| format!("fbounds.delta{d}.exact")).collect();
    ids.push("fbounds.k_delta.window".into());
    all_pass(&rs, &ids.iter().map(String::as_str).collect::<Vec<_>>())
}

fn akbari() -> Check {
    let rs = suite(
        Suite::Akbari,
        Params {
            samples: Some(1000),
            ..Params::default()
        },
    )?;
    all_pass(&rs, &["akbari.vs_eq_ivs"])?;
    Ok(format!("{} graphs", rs[0].computed["graphs"]))
}

fn king() -> Check {
    let rs = suite(
        Suite::King,
        Params {
            samples: Some(300),
            ..Params::default()
        },
    )?;
    all_pass(&rs, &["king.ivs_eq_vs"])?;
    Ok(format!("{} graphs", rs[0].computed["graphs"]))
}

/// Pruned searches and exact solvers against the naive all-subsets oracle.
fn oracle() -> Check {
    let mut rng = StdRng::seed_from_u64(SETTINGS.seed);
    let b = Budget::unlimited();
    for i in 0..500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let adj = adjacency(n, &g.edges());
        let fail = |what: &str| Err(format!("graph {i} ({:?}): {what}", g.edges()));
        if chromatic_number(&g, &b).map_err(|e| e.to_string())?.chi != naive_chromatic(&adj) {
            return fail("chi");
        }
        if clique_number(&g, &b).map_err(|e| e.to_string())? != naive_clique_number(&adj) {
            return fail("omega");
        }
        for (param, op) in [(Parameter::Chi, Param::Chi), (Parameter::Omega, Param::Omega)] {
            let vs = vertex_stability(&g, param, &b).map_err(|e| e.to_string())?.to_vec();
            if naive_stability(&adj, op, false) != Some((vs.len(), vs)) {
                return fail(&format!("vs_{}", param.name()));
            }
            let ivs = independent_vertex_stability(&g, param, &b).map_err(|e| e.to_string())?;
            if naive_stability(&adj, op, true) != ivs.map(|w| (w.len(), w.to_vec())) {
                return fail(&format!("ivs_{}", param.name()));
            }
        }
    }
    Ok("500 graphs".into())
}

fn critical() -> Check {
    let rs = suite(Suite::Critical, Params::default())?;
    all_pass(
        &rs,
        &[
            "critical.criticality",
            "critical.haxell_transversal",
            "critical.pipeline_agreement",
        ],
    )?;
    let pipe = rs.iter().find(|r| r.claim_id == "critical.pipeline_agreement").unwrap();
    Ok(format!("{} pipeline certificates", pipe.computed["certificates"]))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("prop31 family, chi 4..=8", prop31, 300),
        ("prop31 variant, chi 9 and 16", prop31_variant, 600),
        ("constr1 family, delta 3..=6", constr1, 600),
        ("C5 blow-up, k 1..=3", c5blowup, 120),
        ("recursive unsat family, m 2..=4", sat, 900),
        ("matching assignment on m-LIT 2m-SAT", tovey, 120),
        ("f(delta) table, delta 3..=10", fbounds, 300),
        ("vs = ivs when chi >= delta", akbari, 600),
        ("ivs_omega = vs_omega when omega > 2(delta+1)/3", king, 600),
        ("pruned search equals naive oracle", oracle, 600),
        ("criticality, transversals, pipeline", critical, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit_s)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > Duration::from_secs(*limit_s) => Err(format!("{d}, but over the {limit_s}s limit")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail}; {:.2?})", i + 1, took),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {detail} ({:.2?})", i + 1, took);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
