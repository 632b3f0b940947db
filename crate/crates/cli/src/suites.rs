//! Verification suites. Each one recomputes its claims from scratch; the
//! only stored expectations are the ones attached to the constructions.
//!
//! Heaviest instances with the default ranges: `prop31-variant` at χ = 16
//! (70 vertices), `sat` at m = 4 (certificate on 72 vertices), `critical`
//! on dense 12-vertex graphs. `verify all` runs in well under a minute on
//! a release build.

use std::ops::RangeInclusive;
use std::str::FromStr;

use chromstab::constructions::{
    construct_c5blowup, construct_constr1, construct_prop31, prop31_max_copies, Claim, ConstructionError,
    ConstructionMeta, Evaluator, Value,
};
use chromstab::critical::{
    enumerate_critical_subgraphs, find_critical_subgraph, independent_transversal, vs_ivs_pipeline,
};
use chromstab::graph::{complete_graph, delete_vertices, disjoint_union};
use chromstab::invariants::{chromatic_number, clique_number};
use chromstab::sat::{
    augmented_independence_graph, family_coloring, gen_unsat_levels, hall_satisfier, independence_graph,
    is_satisfiable, stability_certificates, validate_plit_qsat, SatError,
};
use chromstab::stability::{
    f_bounds, independent_vertex_stability, k_delta, reducing_set_within, stability_report, vertex_stability,
};
use chromstab::{Budget, Coloring, Graph, Parameter, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;
use thiserror::Error;

use crate::corpus::{haxell_instance, planted_clique_graph, random_graph, random_plit};
use crate::report::{sort_results, timed, Outcome, Status, VerificationResult};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of: {list})", list = Suite::NAMES.join(", "))]
    UnknownSuite(String),
    #[error("{suite}: {message}")]
    BadParameter { suite: &'static str, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Prop31,
    Prop31Variant,
    Constr1,
    C5blowup,
    Sat,
    Tovey,
    Fbounds,
    Akbari,
    King,
    Critical,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 11] = [
        "prop31",
        "prop31-variant",
        "constr1",
        "c5blowup",
        "sat",
        "tovey",
        "fbounds",
        "akbari",
        "king",
        "critical",
        "all",
    ];

    const EACH: [Suite; 10] = [
        Suite::Prop31,
        Suite::Prop31Variant,
        Suite::Constr1,
        Suite::C5blowup,
        Suite::Sat,
        Suite::Tovey,
        Suite::Fbounds,
        Suite::Akbari,
        Suite::King,
        Suite::Critical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop31 => "prop31",
            Suite::Prop31Variant => "prop31-variant",
            Suite::Constr1 => "constr1",
            Suite::C5blowup => "c5blowup",
            Suite::Sat => "sat",
            Suite::Tovey => "tovey",
            Suite::Fbounds => "fbounds",
            Suite::Akbari => "akbari",
            Suite::King => "king",
            Suite::Critical => "critical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// Inclusive range written `a..b`, `a..=b` or just `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range `{s}`"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let a = num(s)?;
            a..=a
        }
    };
    if r.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(r)
}

/// Knobs shared by every suite. Unset ranges fall back to each suite's
/// defaults.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub chi: Option<RangeInclusive<usize>>,
    pub delta: Option<RangeInclusive<usize>>,
    pub k: Option<RangeInclusive<usize>>,
    pub m: Option<RangeInclusive<usize>>,
    /// Corpus size for the random suites.
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    /// Node budget for each independent computation.
    pub budget: u64,
    pub seed: u64,
}

impl Settings {
    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }

    fn rng(&self, salt: u64) -> StdRng {
        StdRng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

pub fn run_suite(suite: Suite, p: &Params, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = match suite {
        Suite::Prop31 => prop31(p.chi.clone().unwrap_or(4..=8), s)?,
        Suite::Prop31Variant => prop31_variant(&p.chi.clone().map_or(vec![9, 16], Iterator::collect), s)?,
        Suite::Constr1 => constr1(p.delta.clone().unwrap_or(3..=6), s)?,
        Suite::C5blowup => c5blowup(p.k.clone().unwrap_or(1..=3), s)?,
        Suite::Sat => sat(p.m.clone().unwrap_or(2..=4), s)?,
        Suite::Tovey => tovey(p.m.clone().unwrap_or(2..=3), p.samples.unwrap_or(200), s)?,
        Suite::Fbounds => fbounds(p.delta.clone().unwrap_or(3..=10), s)?,
        Suite::Akbari => vec![akbari(p.samples.unwrap_or(1000), s)],
        Suite::King => vec![king(p.samples.unwrap_or(300), s)],
        Suite::Critical => critical(p.samples.unwrap_or(200), p.samples.map_or(500, |n| n.max(1)), s),
        Suite::All => {
            let mut all = Vec::new();
            for each in Suite::EACH {
                all.extend(run_suite(each, &Params::default(), s)?);
            }
            all
        }
    };
    sort_results(&mut out);
    Ok(out)
}

fn bad(suite: &'static str, e: impl ToString) -> SuiteError {
    SuiteError::BadParameter {
        suite,
        message: e.to_string(),
    }
}

/// Short claim names: `vs_chi` -> `vs`, `ivs_chi` -> `ivs`,
/// `ivs_chi_lower` -> `ivs_lower`.
fn short(name: &str) -> &str {
    match name {
        "vs_chi" => "vs",
        "ivs_chi" => "ivs",
        "ivs_chi_lower" => "ivs_lower",
        other => other,
    }
}

fn family_claims(prefix: &str, meta: &ConstructionMeta, eval: &mut Evaluator<'_>) -> Vec<VerificationResult> {
    let mut out = Vec::new();
    for (name, claim) in &meta.expected {
        out.push(timed(format!("{prefix}.{}", short(name)), || {
            Outcome::claim(eval.get(name), claim)
        }));
    }
    out
}

fn prop31(chis: RangeInclusive<usize>, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for chi in chis {
        let (g, meta) = construct_prop31(chi, None).map_err(|e| bad("prop31", e))?;
        let budget = s.budget();
        let mut eval = Evaluator::new(&g, &budget);
        out.extend(family_claims(&format!("prop31.chi{chi}"), &meta, &mut eval));
    }
    Ok(out)
}

fn size_value(r: Result<Option<VertexSet>, chromstab::StabilityError>) -> Option<Value> {
    r.ok().map(|w| w.map(|w| w.len()).into())
}

/// `t = ⌈χ/a⌉ - 1` copies. `vs = 2` is settled by a search capped at two
/// vertices; `ivs` by the full independent search, or, when that runs out
/// of budget, by "no independent set of size <= 2 works" plus an explicit
/// witness of size at most `⌈χ/a⌉`.
fn prop31_variant(chis: &[usize], s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for &chi in chis {
        if chi < 4 {
            return Err(bad("prop31-variant", ConstructionError::ChiTooSmall(chi)));
        }
        let a = chi.isqrt() + usize::from(chi.isqrt().pow(2) != chi);
        let q = chi.div_ceil(a);
        if q - 1 < 2 || q - 1 > prop31_max_copies(chi) {
            return Err(bad(
                "prop31-variant",
                format!("chi = {chi} has no variant with at least 2 copies"),
            ));
        }
        let (g, meta) = construct_prop31(chi, Some(q - 1)).map_err(|e| bad("prop31-variant", e))?;
        let (base, _) = construct_prop31(chi, None).map_err(|e| bad("prop31-variant", e))?;
        let prefix = format!("prop31_variant.chi{chi}");
        let budget = s.budget();
        let mut eval = Evaluator::new(&g, &budget);
        for name in ["chi", "omega"] {
            out.push(timed(format!("{prefix}.{name}"), || {
                Outcome::claim(eval.get(name), &meta.expected[name])
            }));
        }
        out.push(timed(format!("{prefix}.delta"), || {
            let d = g.max_degree();
            Outcome::check(
                d == base.max_degree() && meta.expected["delta"].holds(Value::Count(d)),
                json!({ "delta": d, "two_copy_delta": base.max_degree() }),
                format!("{} (same as two copies)", meta.expected["delta"]),
            )
        }));
        out.push(timed(format!("{prefix}.vs"), || {
            let b = s.budget();
            let r = reducing_set_within(&g, Parameter::Chi, false, 2, &b);
            let v = match r {
                Ok(Some(w)) => Some(Value::Count(w.len())),
                // nothing of size <= 2: report as "3+"; fails Exact(2)
                Ok(None) => Some(Value::Count(3)),
                Err(_) => None,
            };
            Outcome::claim(v, &Claim::Exact(2))
        }));
        out.push(timed(format!("{prefix}.ivs"), || {
            let expected = format!("= {q}");
            let b = s.budget();
            match independent_vertex_stability(&g, Parameter::Chi, &b) {
                Ok(w) => Outcome::claim(Some(w.map(|w| w.len()).into()), &Claim::Exact(q)),
                Err(_) => {
                    let (b1, b2) = (s.budget(), s.budget());
                    let small = reducing_set_within(&g, Parameter::Chi, true, 2, &b1);
                    let witness = reducing_set_within(&g, Parameter::Chi, true, q, &b2);
                    match (small, witness) {
                        (Ok(None), Ok(Some(w))) => Outcome::check(
                            true,
                            json!({ "bounded": true, "greater_than": 2, "witness": w.to_vec() }),
                            format!("2 < ivs <= {q}"),
                        ),
                        (Ok(Some(w)), _) => Outcome::check(false, json!({ "witness": w.to_vec() }), expected),
                        _ => Outcome::inconclusive("budget exhausted", expected),
                    }
                }
            }
        }));
    }
    Ok(out)
}

fn constr1(deltas: RangeInclusive<usize>, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for delta in deltas {
        let (g, meta) = construct_constr1(delta).map_err(|e| bad("constr1", e))?;
        let budget = s.budget();
        let mut eval = Evaluator::new(&g, &budget);
        out.extend(family_claims(&format!("constr1.delta{delta}"), &meta, &mut eval));
    }
    Ok(out)
}

/// Besides the construction's claims: `vs_χ = ivs_χ`, and the parity
/// pattern observed on first computation (1 for odd `k`, 2 for even).
fn c5blowup(ks: RangeInclusive<usize>, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for k in ks {
        let (g, meta) = construct_c5blowup(k).map_err(|e| bad("c5blowup", e))?;
        let prefix = format!("c5blowup.k{k}");
        let budget = s.budget();
        let mut eval = Evaluator::new(&g, &budget);
        out.extend(family_claims(&prefix, &meta, &mut eval));
        out.push(timed(format!("{prefix}.vs_eq_ivs"), || {
            match (eval.get("vs_chi"), eval.get("ivs_chi")) {
                (Some(vs), Some(ivs)) => Outcome::check(vs == ivs, json!({ "vs": vs, "ivs": ivs }), "vs = ivs"),
                _ => Outcome::inconclusive("budget exhausted", "vs = ivs"),
            }
        }));
        let parity = if k % 2 == 1 { 1 } else { 2 };
        out.push(timed(format!("{prefix}.parity"), || {
            Outcome::claim(eval.get("vs_chi"), &Claim::Exact(parity))
        }));
    }
    Ok(out)
}

fn sat(ms: RangeInclusive<usize>, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for m in ms {
        let levels = gen_unsat_levels(m).map_err(|e| bad("sat", e))?;
        let inst = levels.last().expect("at least one level").clone();
        let r = levels.len() - 1;
        let prefix = format!("sat.m{m}");
        let c = inst.clauses().len();

        out.push(timed(format!("{prefix}.plit"), || {
            let v = validate_plit_qsat(&inst, m, 2 * m - 1);
            Outcome::check(
                v.is_ok(),
                v.map_or_else(|e| e.to_string(), |()| "ok".into()),
                format!("{m}-LIT {}-SAT", 2 * m - 1),
            )
        }));
        out.push(timed(format!("{prefix}.levels"), || {
            let bad: Vec<usize> = (0..=r)
                .filter(|&i| validate_plit_qsat(&levels[i], m, 2 * m - (1 << (r - i))).is_err())
                .collect();
            Outcome::check(
                bad.is_empty(),
                json!({ "levels": r + 1, "invalid": bad }),
                "every level m-LIT (2m-2^(r-i))-SAT",
            )
        }));
        out.push(timed(format!("{prefix}.counts"), || {
            let (cl, vars) = (c, inst.variable_count());
            let want = 1usize << (r + 1);
            Outcome::check(
                cl == want && vars == want - 1,
                json!({ "clauses": cl, "variables": vars }),
                json!({ "clauses": want, "variables": want - 1 }),
            )
        }));
        out.push(timed(format!("{prefix}.unsat"), || match is_satisfiable(&inst) {
            Ok(None) => Outcome::check(true, "unsatisfiable", "unsatisfiable"),
            Ok(Some(a)) => Outcome::check(false, json!({ "assignment": a }), "unsatisfiable"),
            Err(e) => Outcome::inconclusive(e.to_string(), "unsatisfiable"),
        }));
        out.push(timed(format!("{prefix}.chi_independence_graph"), || {
            let expected = Claim::Exact(2 * m);
            let Ok((g, _)) = independence_graph(&inst) else {
                return Outcome::inconclusive("graph too large", expected.to_string());
            };
            let b = s.budget();
            if m <= 3 {
                return Outcome::claim(chromatic_number(&g, &b).ok().map(|r| Value::Count(r.chi)), &expected);
            }
            // proper 2m-coloring from the recursion, plus a 2m-clique
            let colored = family_coloring(m).is_ok_and(|c| Coloring::new(&g, c, 2 * m).is_ok());
            match clique_number(&g, &b) {
                Ok(w) if colored => Outcome::claim(Some(Value::Count(w)), &expected),
                Ok(w) => Outcome::check(
                    false,
                    json!({ "omega": w, "coloring": "invalid" }),
                    expected.to_string(),
                ),
                Err(_) => Outcome::inconclusive("budget exhausted", expected.to_string()),
            }
        }));

        if m == 2 {
            let (g, _) = augmented_independence_graph(&inst).map_err(|e| bad("sat", e))?;
            let budget = s.budget();
            let mut eval = Evaluator::new(&g, &budget);
            for (name, claim) in [
                ("vs_chi", Claim::Exact(c)),
                ("vs_omega", Claim::Exact(c)),
                ("ivs_omega", Claim::AtLeast(c + 1)),
            ] {
                out.push(timed(format!("{prefix}.full.{name}"), || {
                    Outcome::claim(eval.get(name), &claim)
                }));
            }
        }
        // the exhaustive transversal check inside grows quickly past m = 4
        if m <= 4 {
            let b = s.budget();
            let t0 = std::time::Instant::now();
            let cert = stability_certificates(&inst, m, &b).and_then(|cert| cert.validate(&inst).map(|()| cert));
            let ms_taken = t0.elapsed().as_millis() as u64;
            let mut push = |name: &str, o: Outcome| {
                let mut r = timed(format!("{prefix}.cert.{name}"), || o);
                r.runtime_ms += ms_taken;
                out.push(r);
            };
            match cert {
                Ok(cert) => {
                    push(
                        "vs_chi",
                        Outcome::claim(Some(Value::Count(cert.vs_chi)), &Claim::Exact(c)),
                    );
                    push(
                        "vs_omega",
                        Outcome::claim(Some(Value::Count(cert.vs_omega)), &Claim::Exact(c)),
                    );
                    push(
                        "ivs_omega",
                        Outcome::claim(Some(Value::Count(cert.ivs_omega_lower)), &Claim::AtLeast(c + 1)),
                    );
                }
                Err(SatError::Solve(_)) => {
                    push("valid", Outcome::inconclusive("budget exhausted", "valid certificate"))
                }
                Err(e) => push("valid", Outcome::check(false, e.to_string(), "valid certificate")),
            }
        }
    }
    Ok(out)
}

/// Random `m`-LIT `2m`-SAT instances: the matching-based assignment must
/// satisfy every one, and brute force must agree the instance is satisfiable.
fn tovey(ms: RangeInclusive<usize>, samples: usize, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    let mut out = Vec::new();
    for m in ms {
        if m < 1 {
            return Err(bad("tovey", "m must be at least 1"));
        }
        out.push(timed(format!("tovey.m{m}.hall"), || {
            let mut rng = s.rng(0x7000 + m as u64);
            let mut satisfied = 0;
            let mut first_failure = None;
            for i in 0..samples {
                let vars = rng.gen_range(1..=12);
                let inst = random_plit(&mut rng, m, vars);
                let ok = hall_satisfier(&inst, m).is_ok_and(|a| inst.is_satisfied_by(&a))
                    && is_satisfiable(&inst).is_ok_and(|a| a.is_some());
                if ok {
                    satisfied += 1;
                } else if first_failure.is_none() {
                    first_failure = Some(i);
                }
            }
            Outcome::check(
                satisfied == samples,
                json!({ "instances": samples, "satisfied": satisfied, "first_failure": first_failure }),
                format!("all {samples} satisfied"),
            )
        }));
    }
    Ok(out)
}

/// Witness for `f(Δ) >= Δ`: a graph with maximum degree `Δ`, `χ = Δ - 1`
/// and `vs_χ < ivs_χ`.
fn fbounds_witness(delta: usize) -> Result<(String, Graph), ConstructionError> {
    if delta <= 4 {
        Ok((format!("constr1(delta={delta})"), construct_constr1(delta)?.0))
    } else {
        Ok((
            format!("prop31(chi={})", delta - 1),
            construct_prop31(delta - 1, None)?.0,
        ))
    }
}

fn fbounds(deltas: RangeInclusive<usize>, s: &Settings) -> Result<Vec<VerificationResult>, SuiteError> {
    if *deltas.start() < 3 || *deltas.end() > 10 {
        return Err(bad("fbounds", "the witness table covers delta in 3..=10"));
    }
    let mut out = Vec::new();
    for delta in deltas {
        out.push(timed(format!("fbounds.delta{delta}.exact"), || {
            let expected = format!("lower = upper = {delta}, witness with chi = {} and vs < ivs", delta - 1);
            let fb = f_bounds(delta as u64).expect("delta >= 3");
            let (name, g) = fbounds_witness(delta).expect("witness parameters are valid");
            let b = s.budget();
            let chi = chromatic_number(&g, &b).map(|r| r.chi);
            let vs = vertex_stability(&g, Parameter::Chi, &b).map(|w| w.len());
            let ivs = independent_vertex_stability(&g, Parameter::Chi, &b).map(|w| w.map(|w| w.len()));
            let (Ok(chi), Ok(vs), Ok(ivs)) = (chi, vs, ivs) else {
                return Outcome::inconclusive("budget exhausted", expected);
            };
            let ok = fb.lower == delta as u64
                && fb.upper == delta as u64
                && !fb.upper_is_asymptotic
                && g.max_degree() == delta
                && chi + 1 == delta
                && ivs.is_none_or(|i| vs < i);
            Outcome::check(
                ok,
                json!({
                    "lower": fb.lower, "upper": fb.upper, "witness": name,
                    "max_degree": g.max_degree(), "chi": chi, "vs": vs, "ivs": ivs,
                }),
                expected,
            )
        }));
    }
    out.push(timed("fbounds.k_delta.window", || {
        const TOP: u64 = 10_000;
        let mut mismatches = Vec::new();
        for d in 2..=TOP {
            let k = k_delta(d).expect("d >= 2");
            let mut ok = (k + 1) * (k + 2) <= d && d < (k + 2) * (k + 3);
            if d > 10 {
                let fb = f_bounds(d).expect("d >= 3");
                let window = k >= 1 && d <= k * k + 4 * k + 1;
                let lower = if window { d + 2 - k } else { d + 1 - k };
                ok &= fb.lower == lower
                    && fb.upper == d
                    && fb.asymptotic_upper == Some(d + 2 - k)
                    && fb.upper_is_asymptotic;
            }
            if !ok {
                mismatches.push(d);
            }
        }
        Outcome::check(
            mismatches.is_empty(),
            json!({ "checked": TOP - 1, "mismatches": mismatches }),
            "k_delta and window rule agree with the defining inequality on 2..=10000",
        )
    }));
    Ok(out)
}

/// Graphs with `n <= 9` and `χ >= Δ`: `vs_χ = ivs_χ` on every one.
pub fn akbari(samples: usize, s: &Settings) -> VerificationResult {
    let expected = format!("vs_chi = ivs_chi on {samples} graphs with chi >= delta");
    timed("akbari.vs_eq_ivs", || {
        let mut rng = s.rng(0xa4ba);
        let (mut accepted, mut agree, mut unknown) = (0, 0, 0);
        let mut counterexample = None;
        while accepted < samples {
            let n = rng.gen_range(2..=9);
            let p = rng.gen_range(0.05..0.95);
            let g = random_graph(&mut rng, n, p);
            let b = s.budget();
            let Ok(chi) = chromatic_number(&g, &b) else {
                unknown += 1;
                continue;
            };
            if chi.chi < g.max_degree() {
                continue;
            }
            accepted += 1;
            let vs = size_value(vertex_stability(&g, Parameter::Chi, &b).map(Some));
            let ivs = size_value(independent_vertex_stability(&g, Parameter::Chi, &b));
            match (vs, ivs) {
                (Some(a), Some(b)) if a == b => agree += 1,
                (Some(_), Some(_)) => {
                    counterexample.get_or_insert_with(|| g.edges());
                }
                _ => unknown += 1,
            }
        }
        let computed =
            json!({ "graphs": accepted, "agree": agree, "unknown": unknown, "counterexample": counterexample });
        if counterexample.is_some() {
            Outcome::check(false, computed, expected)
        } else if unknown > 0 {
            Outcome::new(Status::Inconclusive, computed, expected)
        } else {
            Outcome::check(agree == samples, computed, expected)
        }
    })
}

/// Graphs with `n <= 10` and `3ω > 2(Δ + 1)`: `ivs_ω` exists and equals
/// `vs_ω`.
pub fn king(samples: usize, s: &Settings) -> VerificationResult {
    let expected = format!("ivs_omega exists and equals vs_omega on {samples} graphs with omega > 2(delta+1)/3");
    timed("king.ivs_eq_vs", || {
        let mut rng = s.rng(0x4b1e);
        let (mut accepted, mut agree, mut unknown) = (0, 0, 0);
        let mut counterexample = None;
        while accepted < samples {
            let n = rng.gen_range(3..=10);
            let g = planted_clique_graph(&mut rng, n);
            let b = s.budget();
            let Ok(omega) = clique_number(&g, &b) else {
                unknown += 1;
                continue;
            };
            if 3 * omega <= 2 * (g.max_degree() + 1) {
                continue;
            }
            accepted += 1;
            let vs = size_value(vertex_stability(&g, Parameter::Omega, &b).map(Some));
            let ivs = size_value(independent_vertex_stability(&g, Parameter::Omega, &b));
            match (vs, ivs) {
                (Some(a), Some(b)) if a == b => agree += 1,
                (Some(_), Some(_)) => {
                    counterexample.get_or_insert_with(|| g.edges());
                }
                _ => unknown += 1,
            }
        }
        let computed =
            json!({ "graphs": accepted, "agree": agree, "unknown": unknown, "counterexample": counterexample });
        if counterexample.is_some() {
            Outcome::check(false, computed, expected)
        } else if unknown > 0 {
            Outcome::new(Status::Inconclusive, computed, expected)
        } else {
            Outcome::check(agree == samples, computed, expected)
        }
    })
}

/// Checks the definition directly: `χ(H) = chi` and every one-vertex
/// deletion drops it to `chi - 1`.
fn satisfies_criticality(
    g: &Graph,
    h: &VertexSet,
    chi: usize,
    b: &Budget,
) -> Result<bool, chromstab::invariants::SolveError> {
    let (sub, _) = g.induced(h);
    if chromatic_number(&sub, b)?.chi != chi {
        return Ok(false);
    }
    for v in 0..sub.n() {
        let (minus, _) = delete_vertices(&sub, &VertexSet::from_vertices(sub.n(), [v])).expect("vertex in range");
        if chromatic_number(&minus, b)?.chi + 1 != chi {
            return Ok(false);
        }
    }
    Ok(true)
}

fn critical_corpus(samples: usize, s: &Settings) -> Vec<Graph> {
    let mut rng = s.rng(0xc417);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Graphs on which the pipeline is known to produce a certificate, so the
/// agreement check is never vacuous.
fn pipeline_fixtures() -> Vec<Graph> {
    let mut out = Vec::new();
    for (r, c) in [(1, 3), (2, 4), (3, 3), (2, 5)] {
        let k = complete_graph(c);
        let copies: Vec<&Graph> = std::iter::repeat_n(&k, r).collect();
        out.push(disjoint_union(&copies).0);
    }
    let k5 = complete_graph(5);
    let (base, _) = disjoint_union(&[&k5, &k5]);
    let mut edges = base.edges();
    edges.extend([(0, 5), (1, 6)]);
    out.push(Graph::from_edges(10, edges).expect("10 vertices"));
    out
}

pub fn critical(samples: usize, transversals: usize, s: &Settings) -> Vec<VerificationResult> {
    let corpus = critical_corpus(samples, s);
    let mut out = Vec::new();
    let expected = "every extracted and enumerated subgraph is critical";
    out.push(timed("critical.criticality", || {
        let (mut checked, mut violations, mut unknown) = (0, Vec::new(), 0);
        for (i, g) in corpus.iter().enumerate() {
            let b = s.budget();
            let Ok(chi) = chromatic_number(g, &b).map(|r| r.chi) else {
                unknown += 1;
                continue;
            };
            if chi < 2 {
                continue;
            }
            let (Ok(peeled), Ok(all)) = (find_critical_subgraph(g, &b), enumerate_critical_subgraphs(g, g.n(), &b)) else {
                unknown += 1;
                continue;
            };
            let mut ok = all.iter().any(|h| peeled.is_subset(h));
            for h in std::iter::once(&peeled).chain(&all) {
                checked += 1;
                match satisfies_criticality(g, h, chi, &b) {
                    Ok(c) => ok &= c,
                    Err(_) => unknown += 1,
                }
            }
            if !ok {
                violations.push(i);
            }
        }
        let computed = json!({ "graphs": corpus.len(), "subgraphs_checked": checked, "violations": violations, "unknown": unknown });
        if !violations.is_empty() {
            Outcome::check(false, computed, expected)
        } else if unknown > 0 {
            Outcome::new(Status::Inconclusive, computed, expected)
        } else {
            Outcome::check(true, computed, expected)
        }
    }));

    out.push(timed("critical.haxell_transversal", || {
        let mut rng = s.rng(0x4a8e);
        let mut found = 0;
        for _ in 0..transversals {
            let (r, k) = (rng.gen_range(1..=5), rng.gen_range(1..=2));
            let (g, parts) = haxell_instance(&mut rng, r, k);
            if let Ok(Some(t)) = independent_transversal(&g, &parts) {
                if g.is_independent(&t) && parts.iter().all(|p| p.intersection_len(&t) == 1) {
                    found += 1;
                }
            }
        }
        Outcome::check(
            found == transversals,
            json!({ "instances": transversals, "found": found }),
            format!("transversal found on all {transversals} instances (r <= 5, k <= 2)"),
        )
    }));

    out.push(timed("critical.pipeline_agreement", || {
        let expected = "every certificate validates and vs_chi = ivs_chi = r; at least one certificate";
        let (mut certificates, mut agree, mut unknown) = (0, 0, 0);
        let mut disagreements = Vec::new();
        for (i, g) in corpus.iter().chain(&pipeline_fixtures()).enumerate() {
            let b = s.budget();
            if g.n() == 0 || g.edge_count() == 0 {
                continue;
            }
            let outcome = match vs_ivs_pipeline(g, &b) {
                Ok(o) => o,
                Err(_) => {
                    unknown += 1;
                    continue;
                }
            };
            let Some(cert) = outcome.certificate else { continue };
            certificates += 1;
            let b = s.budget();
            let valid = cert.validate(g, &b);
            match (valid, stability_report(g, Parameter::Chi, &b)) {
                (Ok(true), Ok(rep)) if rep.exhausted => {
                    if rep.value == Some(cert.r) && rep.independent_value == Some(cert.r) {
                        agree += 1;
                    } else {
                        disagreements.push(i);
                    }
                }
                (Ok(false), _) => disagreements.push(i),
                _ => unknown += 1,
            }
        }
        let computed = json!({ "graphs": corpus.len() + pipeline_fixtures().len(), "certificates": certificates, "agree": agree, "disagreements": disagreements, "unknown": unknown });
        if !disagreements.is_empty() {
            Outcome::check(false, computed, expected)
        } else if unknown > 0 {
            Outcome::new(Status::Inconclusive, computed, expected)
        } else {
            Outcome::check(certificates > 0 && agree == certificates, computed, expected)
        }
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn settings() -> Settings {
        Settings {
            budget: chromstab::DEFAULT_NODE_BUDGET,
            seed: 1,
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok(4..=8));
        assert_eq!(parse_range("4..=8"), Ok(4..=8));
        assert_eq!(parse_range("5"), Ok(5..=5));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("x..4").is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(SuiteError::UnknownSuite(_))));
    }

    #[test]
    fn small_prop31_run() {
        let p = Params {
            chi: Some(4..=4),
            ..Params::default()
        };
        let rs = run_suite(Suite::Prop31, &p, &settings()).unwrap();
        let ids: Vec<_> = rs.iter().map(|r| r.claim_id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "prop31.chi4.chi",
                "prop31.chi4.delta",
                "prop31.chi4.ivs",
                "prop31.chi4.ivs_lower",
                "prop31.chi4.omega",
                "prop31.chi4.vs"
            ]
        );
        assert!(rs.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn tiny_budget_is_inconclusive_not_failed() {
        let s = Settings { budget: 5, seed: 1 };
        let p = Params {
            delta: Some(5..=5),
            ..Params::default()
        };
        let rs = run_suite(Suite::Constr1, &p, &s).unwrap();
        assert!(rs.iter().any(|r| r.status == Status::Inconclusive));
        assert!(rs.iter().all(|r| r.status != Status::Fail), "{rs:?}");
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let p = Params {
            chi: Some(3..=4),
            ..Params::default()
        };
        assert!(matches!(
            run_suite(Suite::Prop31, &p, &settings()),
            Err(SuiteError::BadParameter { .. })
        ));
        let p = Params {
            delta: Some(3..=11),
            ..Params::default()
        };
        assert!(run_suite(Suite::Fbounds, &p, &settings()).is_err());
    }
}
