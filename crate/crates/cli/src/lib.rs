//! Command-line front end for `chromstab`.
//!
//! Exit codes: 0 success, 1 a claim failed, 2 usage or parse error,
//! 3 inconclusive (budget exhausted, nothing failed).

pub mod cli;
pub mod config;
pub mod corpus;
pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};

use chromstab::constructions::{construct_c5blowup, construct_constr1, construct_prop31, ConstructionMeta};
use chromstab::critical::{critical_union_report, find_critical_subgraph, vs_ivs_pipeline, CriticalError};
use chromstab::graph::{read_dimacs_graph, write_dimacs_graph, write_dot};
use chromstab::invariants::{clique_number, summarize};
use chromstab::sat::{
    augmented_independence_graph, gen_unsat_family, independence_graph, is_satisfiable, read_dimacs_cnf,
    stability_certificates, write_dimacs_cnf, SatError,
};
use chromstab::stability::stability_report;
use chromstab::{Budget, Graph, Parameter, StabilityError};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use cli::{Cli, Command, CriticalArgs, GenFamily, GenOutput, GraphKind, InvariantsArgs, SatCommand, VerifyArgs};
use config::{Config, ConfigError};
use report::{exit, SCHEMA_VERSION};
use suites::{Params, Settings, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn usage(e: impl ToString) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Runs a parsed command line and returns the process exit code. Errors go
/// to stderr.
pub fn run(cli: Cli) -> u8 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("chromstab: {e}");
            exit::USAGE
        }
    }
}

fn settings(cli: &Cli) -> Result<Config, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(b) = cli.budget {
        cfg.budget = b;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    cfg.pretty |= cli.pretty;
    Ok(cfg)
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let cfg = settings(&cli)?;
    match cli.command {
        Command::Gen { family } => gen(family, &cfg),
        Command::Sat(cmd) => sat(cmd, &cfg),
        Command::Invariants(args) => invariants(&args, &cfg),
        Command::Critical(args) => critical(&args, &cfg),
        Command::Verify(args) => verify(&args, &cfg),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    read_dimacs_graph(&read(path)?)
        .map(|p| p.graph)
        .map_err(|e| CliError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })
}

fn to_json(v: &impl Serialize, cfg: &Config) -> String {
    if cfg.pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("reports always serialize")
}

fn sidecar(explicit: &Option<PathBuf>, next_to: &Option<PathBuf>) -> Option<PathBuf> {
    explicit
        .clone()
        .or_else(|| next_to.as_ref().map(|p| p.with_extension("meta.json")))
}

#[derive(Serialize)]
struct MetaFile<'a> {
    schema_version: u32,
    n: usize,
    m: usize,
    #[serde(flatten)]
    meta: &'a ConstructionMeta,
}

fn gen(family: GenFamily, cfg: &Config) -> Result<u8, CliError> {
    let (built, out) = match family {
        GenFamily::Prop31 { chi, copies, out } => (construct_prop31(chi, copies), out),
        GenFamily::Constr1 { delta, out } => (construct_constr1(delta), out),
        GenFamily::C5blowup { k, out } => (construct_c5blowup(k), out),
    };
    let (g, meta) = built.map_err(CliError::usage)?;
    let GenOutput {
        out,
        dot,
        meta: meta_path,
    } = out;
    let dimacs = write_dimacs_graph(&g);
    match &out {
        Some(p) => write(p, &dimacs)?,
        None => print!("{dimacs}"),
    }
    if let Some(p) = &dot {
        write(p, &write_dot(&g, meta.family.name()))?;
    }
    if let Some(p) = sidecar(&meta_path, &out) {
        let file = MetaFile {
            schema_version: SCHEMA_VERSION,
            n: g.n(),
            m: g.edge_count(),
            meta: &meta,
        };
        write(&p, &(to_json(&file, cfg) + "\n"))?;
    }
    Ok(exit::OK)
}

fn sat(cmd: SatCommand, cfg: &Config) -> Result<u8, CliError> {
    match cmd {
        SatCommand::Gen {
            m,
            cnf,
            graph,
            out,
            meta,
        } => {
            let inst = gen_unsat_family(m).map_err(CliError::usage)?;
            let text = write_dimacs_cnf(&inst);
            match &cnf {
                Some(p) => write(p, &text)?,
                None if graph.is_none() => print!("{text}"),
                None => {}
            }
            if let Some(kind) = graph {
                let (g, _) = match kind {
                    GraphKind::Plain => independence_graph(&inst),
                    GraphKind::Augmented => augmented_independence_graph(&inst),
                }
                .map_err(CliError::usage)?;
                let dimacs = write_dimacs_graph(&g);
                match &out {
                    Some(p) => write(p, &dimacs)?,
                    None => print!("{dimacs}"),
                }
            }
            if let Some(p) = sidecar(&meta, &cnf) {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "generation": inst.meta(),
                    "variables": inst.variable_count(),
                    "clauses": inst.clauses().len(),
                });
                write(&p, &(to_json(&doc, cfg) + "\n"))?;
            }
            Ok(exit::OK)
        }
        SatCommand::Check { file, json } => {
            let inst = read_dimacs_cnf(&read(&file)?).map_err(|e| CliError::Parse {
                path: file.display().to_string(),
                message: e.to_string(),
            })?;
            let sizes: Vec<usize> = inst.clauses().iter().map(|c| c.len()).collect();
            let max_occ = inst.literal_occurrences().values().copied().max().unwrap_or(0);
            let (satisfiable, assignment, code) = match is_satisfiable(&inst) {
                Ok(a) => (Some(a.is_some()), a, exit::OK),
                Err(SatError::TooManyVariables { .. }) => (None, None, exit::INCONCLUSIVE),
                Err(e) => return Err(CliError::usage(e)),
            };
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "variables": inst.variable_count(),
                "clauses": sizes.len(),
                "min_clause_size": sizes.iter().min(),
                "max_clause_size": sizes.iter().max(),
                "max_literal_occurrences": max_occ,
                "satisfiable": satisfiable,
                "assignment": assignment,
            });
            if json {
                println!("{}", to_json(&doc, cfg));
            } else {
                println!("variables                {}", inst.variable_count());
                println!("clauses                  {}", sizes.len());
                println!(
                    "clause sizes             {}..={}",
                    sizes.iter().min().unwrap_or(&0),
                    sizes.iter().max().unwrap_or(&0)
                );
                println!("max literal occurrences  {max_occ}");
                let s = satisfiable.map_or("unknown (too many variables)", |s| if s { "yes" } else { "no" });
                println!("satisfiable              {s}");
            }
            Ok(code)
        }
        SatCommand::Certify { m, json } => {
            let inst = gen_unsat_family(m).map_err(CliError::usage)?;
            let budget = Budget::new(cfg.budget);
            let cert = match stability_certificates(&inst, m, &budget) {
                Ok(c) => c,
                Err(SatError::Solve(e)) => {
                    eprintln!("chromstab: {e}");
                    return Ok(exit::INCONCLUSIVE);
                }
                Err(e) => return Err(CliError::usage(e)),
            };
            let valid = cert.validate(&inst);
            if json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "valid": valid.is_ok(),
                    "error": valid.as_ref().err().map(ToString::to_string),
                    "certificate": cert,
                });
                println!("{}", to_json(&doc, cfg));
            } else {
                println!("m = {m}: {} clauses, {} vertices", cert.clause_count, cert.vertex_count);
                println!(
                    "vs_chi = {}, vs_omega = {}, ivs_omega >= {}",
                    cert.vs_chi, cert.vs_omega, cert.ivs_omega_lower
                );
                match &valid {
                    Ok(()) => println!("certificate valid"),
                    Err(e) => println!("certificate INVALID: {e}"),
                }
            }
            Ok(if valid.is_ok() { exit::OK } else { exit::CLAIM_FAILED })
        }
    }
}

#[derive(Serialize)]
struct StabilityJson {
    parameter: Parameter,
    parameter_value: Option<usize>,
    vs: Option<usize>,
    vs_witness: Option<Vec<usize>>,
    /// A number, "nonexistent", or null when unknown.
    ivs: serde_json::Value,
    ivs_witness: Option<Vec<usize>>,
    exhausted: bool,
}

#[derive(Serialize)]
struct InvariantsJson {
    schema_version: u32,
    status: &'static str,
    n: usize,
    m: usize,
    delta: usize,
    chi: Option<usize>,
    omega: Option<usize>,
    coloring: Option<Vec<usize>>,
    clique: Option<Vec<usize>>,
    stability: Vec<StabilityJson>,
}

fn stability_json(g: &Graph, param: Parameter, cfg: &Config) -> Result<StabilityJson, CliError> {
    let budget = Budget::new(cfg.budget);
    match stability_report(g, param, &budget) {
        Ok(r) => {
            let ivs = match (r.independent_value, r.exhausted) {
                (Some(v), _) => json!(v),
                (None, true) => json!("nonexistent"),
                (None, false) => serde_json::Value::Null,
            };
            Ok(StabilityJson {
                parameter: param,
                parameter_value: Some(r.parameter_value),
                vs: r.value,
                vs_witness: r.witness,
                ivs,
                ivs_witness: r.independent_witness,
                exhausted: r.exhausted,
            })
        }
        Err(StabilityError::Solve(_)) => Ok(StabilityJson {
            parameter: param,
            parameter_value: None,
            vs: None,
            vs_witness: None,
            ivs: serde_json::Value::Null,
            ivs_witness: None,
            exhausted: false,
        }),
        Err(e) => Err(CliError::usage(e)),
    }
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "unknown".into(), |v| v.to_string())
}

fn invariants(args: &InvariantsArgs, cfg: &Config) -> Result<u8, CliError> {
    let g = load_graph(&args.file)?;
    let mut report = InvariantsJson {
        schema_version: SCHEMA_VERSION,
        status: "complete",
        n: g.n(),
        m: g.edge_count(),
        delta: g.max_degree(),
        chi: None,
        omega: None,
        coloring: None,
        clique: None,
        stability: Vec::new(),
    };
    match summarize(&g, &Budget::new(cfg.budget)) {
        Ok(s) => {
            report.chi = Some(s.chi);
            report.omega = Some(s.omega);
            report.coloring = Some(s.witness_coloring.colors().to_vec());
            report.clique = Some(s.witness_clique.to_vec());
        }
        Err(_) => report.omega = clique_number(&g, &Budget::new(cfg.budget)).ok(),
    }
    let mut params = args.stability.clone();
    params.dedup();
    for p in params {
        report.stability.push(stability_json(&g, p, cfg)?);
    }
    let complete = report.chi.is_some() && report.stability.iter().all(|s| s.exhausted);
    if !complete {
        report.status = "inconclusive";
    }

    if args.json {
        println!("{}", to_json(&report, cfg));
    } else {
        println!("n      {}", report.n);
        println!("m      {}", report.m);
        println!("delta  {}", report.delta);
        println!("chi    {}", show(report.chi));
        println!("omega  {}", show(report.omega));
        for s in &report.stability {
            let name = s.parameter.name();
            let ivs = match &s.ivs {
                serde_json::Value::Null => "unknown".to_string(),
                serde_json::Value::String(t) => t.clone(),
                v => v.to_string(),
            };
            println!(
                "vs_{name:<6} {}  {:?}",
                show(s.vs),
                s.vs_witness.as_deref().unwrap_or(&[])
            );
            println!("ivs_{name:<5} {ivs}  {:?}", s.ivs_witness.as_deref().unwrap_or(&[]));
        }
        if !complete {
            println!("status inconclusive: budget of {} nodes exhausted", cfg.budget);
        }
    }
    Ok(if complete { exit::OK } else { exit::INCONCLUSIVE })
}

#[derive(Serialize)]
struct CriticalJson {
    schema_version: u32,
    status: &'static str,
    n: usize,
    delta: usize,
    critical_subgraph: Option<Vec<usize>>,
    enumeration: Option<chromstab::critical::CriticalityReport>,
    pipeline: Option<chromstab::critical::PipelineOutcome>,
}

fn critical(args: &CriticalArgs, cfg: &Config) -> Result<u8, CliError> {
    let g = load_graph(&args.file)?;
    let mut report = CriticalJson {
        schema_version: SCHEMA_VERSION,
        status: "complete",
        n: g.n(),
        delta: g.max_degree(),
        critical_subgraph: None,
        enumeration: None,
        pipeline: None,
    };
    let mut exhausted = false;
    // budget exhaustion leaves a field empty; other errors are usage errors
    let mut settle = |e: CriticalError| match e {
        CriticalError::Solve(_) => {
            exhausted = true;
            Ok(())
        }
        CriticalError::ChiTooSmall(_) => Ok(()),
        e => Err(CliError::usage(e)),
    };
    match find_critical_subgraph(&g, &Budget::new(cfg.budget)) {
        Ok(s) => report.critical_subgraph = Some(s.to_vec()),
        Err(e) => settle(e)?,
    }
    if args.enumerate {
        match critical_union_report(&g, args.max_order, &Budget::new(cfg.budget)) {
            Ok(r) => report.enumeration = Some(r),
            Err(e) => settle(e)?,
        }
    }
    if args.pipeline {
        match vs_ivs_pipeline(&g, &Budget::new(cfg.budget)) {
            Ok(p) => report.pipeline = Some(p),
            Err(e) => settle(e)?,
        }
    }
    if exhausted {
        report.status = "inconclusive";
    }

    if args.json {
        println!("{}", to_json(&report, cfg));
    } else {
        println!("n {} delta {}", report.n, report.delta);
        match &report.critical_subgraph {
            Some(s) => println!("critical subgraph (peel): {s:?}"),
            None => println!("critical subgraph (peel): none"),
        }
        if let Some(r) = &report.enumeration {
            println!(
                "chi {}: {} critical subgraphs of order <= {}{}",
                r.chi,
                r.critical_subgraphs.len(),
                r.max_order,
                if r.complete { " (complete)" } else { "" }
            );
            for h in &r.critical_subgraphs {
                println!("  {h:?}");
            }
            let bound = r.component_bound.map_or_else(|| "n/a".into(), |b| b.to_string());
            for (c, ok) in r.union_components.iter().zip(&r.bound_satisfied) {
                println!(
                    "component of size {} (bound {bound}: {}): {c:?}",
                    c.len(),
                    if *ok { "below" } else { "not below" }
                );
            }
        }
        if let Some(p) = &report.pipeline {
            for s in &p.trace {
                println!("[{}] {}: {}", if s.ok { "ok" } else { "--" }, s.step, s.detail);
            }
            match &p.certificate {
                Some(c) => println!("certificate: vs = ivs = {} via {:?}", c.r, c.transversal),
                None => println!("no certificate"),
            }
        }
        if exhausted {
            println!("status inconclusive: budget of {} nodes exhausted", cfg.budget);
        }
    }
    Ok(if exhausted { exit::INCONCLUSIVE } else { exit::OK })
}

fn verify(args: &VerifyArgs, cfg: &Config) -> Result<u8, CliError> {
    let suite: Suite = args.suite.parse().map_err(CliError::usage)?;
    let params = Params {
        chi: args.chi_range.clone(),
        delta: args.delta_range.clone(),
        k: args.k_range.clone(),
        m: args.m_range.clone(),
        samples: args.samples,
    };
    let s = Settings {
        budget: cfg.budget,
        seed: cfg.seed,
    };
    let results = suites::run_suite(suite, &params, &s).map_err(CliError::usage)?;
    if args.json {
        println!("{}", to_json(&report::VerifyReport::new(suite.name(), &results), cfg));
    } else {
        print!("{}", report::render_table(&results));
        let r = report::VerifyReport::new(suite.name(), &results);
        println!(
            "{}: {} passed, {} failed, {} inconclusive",
            suite.name(),
            r.passed,
            r.failed,
            r.inconclusive
        );
    }
    Ok(report::exit_code(&results))
}
