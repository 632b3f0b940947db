//! Deterministic generators for the extremal families, each paired with the
//! invariant values claimed for it.
//!
//! Vertex layouts are fixed so witnesses and output files stay reproducible;
//! each generator documents its own.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::budget::Budget;
use crate::graph::{blow_up_cycle5, Graph, GraphError};
use crate::invariants::{chromatic_number, clique_number};
use crate::stability::{independent_vertex_stability, vertex_stability, Parameter, StabilityError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("chi must be at least 4, got {0}")]
    ChiTooSmall(usize),
    #[error("copies must lie in {min}..={max}, got {copies}")]
    CopiesOutOfRange { copies: usize, min: usize, max: usize },
    #[error("delta must be at least 3, got {0}")]
    DeltaTooSmall(usize),
    #[error("k must be at least 1, got {0}")]
    KTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Prop31,
    Prop31Variant,
    Constr1,
    C5blowup,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Prop31 => "prop31",
            Family::Prop31Variant => "prop31_variant",
            Family::Constr1 => "constr1",
            Family::C5blowup => "c5blowup",
        }
    }
}

/// A claimed value for one invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Exact(usize),
    AtLeast(usize),
    OneOf(Vec<usize>),
    /// No admissible set exists (only possible for `ivs_omega`).
    Nonexistent,
}

/// A computed invariant value. Stability numbers may not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Count(usize),
    Nonexistent,
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Count(c) => s.serialize_u64(*c as u64),
            Value::Nonexistent => s.serialize_str("nonexistent"),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Count(c) => write!(f, "{c}"),
            Value::Nonexistent => f.write_str("nonexistent"),
        }
    }
}

impl From<Option<usize>> for Value {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Value::Nonexistent, Value::Count)
    }
}

impl Claim {
    /// A nonexistent stability number counts as larger than any bound.
    pub fn holds(&self, v: Value) -> bool {
        match (self, v) {
            (Claim::Exact(e), Value::Count(c)) => c == *e,
            (Claim::AtLeast(e), Value::Count(c)) => c >= *e,
            (Claim::AtLeast(_), Value::Nonexistent) => true,
            (Claim::OneOf(set), Value::Count(c)) => set.contains(&c),
            (Claim::Nonexistent, Value::Nonexistent) => true,
            _ => false,
        }
    }
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Claim::Exact(e) => write!(f, "= {e}"),
            Claim::AtLeast(e) => write!(f, ">= {e}"),
            Claim::OneOf(set) => write!(f, "in {set:?}"),
            Claim::Nonexistent => f.write_str("nonexistent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionMeta {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
    /// Invariant name -> claimed value. Names: chi, omega, delta, vs_chi,
    /// ivs_chi, vs_omega, ivs_omega, and ivs_chi_lower (a lower bound on
    /// ivs_chi).
    pub expected: BTreeMap<String, Claim>,
}

impl ConstructionMeta {
    fn new(family: Family, params: &[(&str, usize)], expected: Vec<(&str, Claim)>) -> Self {
        ConstructionMeta {
            family,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            expected: expected.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn ceil_sqrt(x: usize) -> usize {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Largest allowed number of gadget copies for a given `chi`.
pub fn prop31_max_copies(chi: usize) -> usize {
    let a = ceil_sqrt(chi);
    (ceil_div(chi, a) - 1).max(2)
}

/// Central `K_chi` plus `copies` gadgets `K_{chi-2} ∧ aK_1`, `a = ⌈√chi⌉`.
///
/// Layout: vertices `0..chi` are the central clique, split into `a`
/// contiguous parts `V_1..V_a` of near-equal size (larger parts first).
/// Copy `c` starts at `chi + c(chi - 2 + a)`: first its `chi - 2` clique
/// vertices, then its `a` independent vertices; independent vertex `j` is
/// joined to the copy's clique and to all of `V_j`.
///
/// `copies` defaults to 2; passing `⌈chi/a⌉ - 1` explicitly selects the
/// variant family with the larger independent stability number.
pub fn construct_prop31(chi: usize, copies: Option<usize>) -> Result<(Graph, ConstructionMeta), ConstructionError> {
    if chi < 4 {
        return Err(ConstructionError::ChiTooSmall(chi));
    }
    let a = ceil_sqrt(chi);
    let q = ceil_div(chi, a);
    let max = prop31_max_copies(chi);
    let t = copies.unwrap_or(2);
    if !(2..=max).contains(&t) {
        return Err(ConstructionError::CopiesOutOfRange { copies: t, min: 2, max });
    }
    let block = chi - 2 + a;
    let n = chi + t * block;
    let mut g = Graph::try_new(n)?;
    for u in 0..chi {
        for v in u + 1..chi {
            g.add_edge(u, v);
        }
    }
    let parts = near_equal_parts(chi, a);
    for c in 0..t {
        let base = chi + c * block;
        for u in base..base + chi - 2 {
            for v in u + 1..base + chi - 2 {
                g.add_edge(u, v);
            }
        }
        for (j, part) in parts.iter().enumerate() {
            let x = base + chi - 2 + j;
            for u in base..base + chi - 2 {
                g.add_edge(x, u);
            }
            for u in part.clone() {
                g.add_edge(x, u);
            }
        }
    }

    let variant = copies.is_some() && t == q - 1;
    let mut expected = vec![
        ("omega", Claim::Exact(chi)),
        ("chi", Claim::Exact(chi)),
        ("delta", Claim::Exact(chi + (q.saturating_sub(2)).max(1))),
        ("vs_chi", Claim::Exact(2)),
        ("ivs_chi_lower", Claim::AtLeast(3)),
    ];
    if t == q - 1 {
        expected.push(("ivs_chi", Claim::Exact(q)));
    } else if chi == 4 && t == 2 {
        expected.push(("ivs_chi", Claim::Exact(3)));
    }
    let family = if variant { Family::Prop31Variant } else { Family::Prop31 };
    let meta = ConstructionMeta::new(family, &[("chi", chi), ("a", a), ("copies", t)], expected);
    Ok((g, meta))
}

/// `a` contiguous ranges covering `0..n`, sizes differing by at most one,
/// larger ranges first.
fn near_equal_parts(n: usize, a: usize) -> Vec<std::ops::Range<usize>> {
    let (base, extra) = (n / a, n % a);
    let mut start = 0;
    (0..a)
        .map(|j| {
            let len = base + usize::from(j < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// `k` copies of `H` (two `K_k` sharing `a` vertices) plus a central `K_k`,
/// with `k = ⌈2(Δ+1)/3⌉ - 1` and `a = 2k - Δ`.
///
/// Layout: vertices `0..k` are the central clique. Copy `i` starts at
/// `k + i(2k - a)`: `a` shared vertices, then `k - a` left-only, then
/// `k - a` right-only vertices. Central vertex `i` is joined to the shared
/// vertices of copy `i`.
pub fn construct_constr1(delta: usize) -> Result<(Graph, ConstructionMeta), ConstructionError> {
    if delta < 3 {
        return Err(ConstructionError::DeltaTooSmall(delta));
    }
    let k = ceil_div(2 * (delta + 1), 3) - 1;
    let a = 2 * k - delta;
    let h = 2 * k - a;
    let mut g = Graph::try_new(k + k * h)?;
    let clique = |g: &mut Graph, vs: &[usize]| {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                g.add_edge(u, v);
            }
        }
    };
    clique(&mut g, &(0..k).collect::<Vec<_>>());
    for i in 0..k {
        let base = k + i * h;
        let shared: Vec<usize> = (base..base + a).collect();
        let left: Vec<usize> = shared.iter().copied().chain(base + a..base + k).collect();
        let right: Vec<usize> = shared.iter().copied().chain(base + k..base + h).collect();
        clique(&mut g, &left);
        clique(&mut g, &right);
        for &s in &shared {
            g.add_edge(i, s);
        }
    }
    let meta = ConstructionMeta::new(
        Family::Constr1,
        &[("delta", delta), ("k", k), ("a", a)],
        vec![
            ("omega", Claim::Exact(k)),
            ("chi", Claim::Exact(k)),
            ("delta", Claim::Exact(delta)),
            ("vs_chi", Claim::Exact(k + 1)),
            ("vs_omega", Claim::Exact(k + 1)),
            ("ivs_chi", Claim::Exact(k + 2)),
            ("ivs_omega", Claim::Exact(k + 2)),
        ],
    );
    Ok((g, meta))
}

/// `C_5` with every vertex replaced by `K_k`; layout as in
/// [`blow_up_cycle5`].
pub fn construct_c5blowup(k: usize) -> Result<(Graph, ConstructionMeta), ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::KTooSmall(k));
    }
    let g = blow_up_cycle5(k)?;
    let meta = ConstructionMeta::new(
        Family::C5blowup,
        &[("k", k)],
        vec![
            ("omega", Claim::Exact(2 * k)),
            ("delta", Claim::Exact(3 * k - 1)),
            ("chi", Claim::Exact(ceil_div(5 * k, 2))),
            ("vs_omega", Claim::Exact(3)),
            ("ivs_omega", Claim::Nonexistent),
            ("vs_chi", Claim::OneOf(vec![1, 2])),
            ("ivs_chi", Claim::OneOf(vec![1, 2])),
        ],
    );
    Ok((g, meta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub expected: Claim,
    /// `None` when the solver ran out of budget.
    pub computed: Option<Value>,
    pub status: ClaimStatus,
}

/// Lazily computed invariants of one graph, shared between claims.
pub struct Evaluator<'a> {
    g: &'a Graph,
    budget: &'a Budget,
    cache: BTreeMap<&'static str, Option<Value>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(g: &'a Graph, budget: &'a Budget) -> Self {
        Evaluator {
            g,
            budget,
            cache: BTreeMap::new(),
        }
    }

    /// Value of a named invariant; `None` on budget exhaustion.
    ///
    /// # Panics
    /// On an unknown invariant name.
    pub fn get(&mut self, name: &str) -> Option<Value> {
        let key: &'static str = match name {
            "chi" => "chi",
            "omega" => "omega",
            "delta" => "delta",
            "vs_chi" => "vs_chi",
            "ivs_chi" | "ivs_chi_lower" => "ivs_chi",
            "vs_omega" => "vs_omega",
            "ivs_omega" => "ivs_omega",
            other => panic!("unknown invariant `{other}`"),
        };
        if let Some(v) = self.cache.get(key) {
            return *v;
        }
        let v = self.compute(key).ok();
        self.cache.insert(key, v);
        v
    }

    fn compute(&self, key: &str) -> Result<Value, StabilityError> {
        let (g, b) = (self.g, self.budget);
        let count = |n: usize| Ok::<_, StabilityError>(Value::Count(n));
        match key {
            "chi" => count(chromatic_number(g, b).map_err(StabilityError::from)?.chi),
            "omega" => count(clique_number(g, b)?),
            "delta" => count(g.max_degree()),
            "vs_chi" => count(vertex_stability(g, Parameter::Chi, b)?.len()),
            "vs_omega" => count(vertex_stability(g, Parameter::Omega, b)?.len()),
            "ivs_chi" => Ok(independent_vertex_stability(g, Parameter::Chi, b)?
                .map(|s| s.len())
                .into()),
            "ivs_omega" => Ok(independent_vertex_stability(g, Parameter::Omega, b)?
                .map(|s| s.len())
                .into()),
            _ => unreachable!(),
        }
    }
}

/// Checks every claim in `meta` with the exact solvers. Budget exhaustion
/// makes a claim inconclusive, never failed.
pub fn expected_invariants_check(g: &Graph, meta: &ConstructionMeta, budget: &Budget) -> Vec<ClaimCheck> {
    let mut eval = Evaluator::new(g, budget);
    meta.expected
        .iter()
        .map(|(name, claim)| {
            let computed = eval.get(name);
            let status = match computed {
                None => ClaimStatus::Inconclusive,
                Some(v) if claim.holds(v) => ClaimStatus::Pass,
                Some(_) => ClaimStatus::Fail,
            };
            ClaimCheck {
                name: name.clone(),
                expected: claim.clone(),
                computed,
                status,
            }
        })
        .collect()
}
