//! CNF instances with repeated literals, the recursive unsatisfiable
//! family, and the matching argument that satisfies every `m`-LIT
//! `2m`-SAT instance.

mod cnf;
mod graphs;

pub use cnf::{read_dimacs_cnf, write_dimacs_cnf, CnfError};
pub use graphs::{
    augmented_independence_graph, independence_graph, removal_set, stability_certificates, StabilityCertificate,
};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::GraphError;
use crate::invariants::SolveError;

/// Brute-force satisfiability is limited to this many variables.
pub const MAX_BRUTE_FORCE_VARIABLES: usize = 24;

/// Identifier of the clause-splitting rule used by [`gen_unsat_family`].
pub const SPLIT_RULE: &str = "round-robin-sorted";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error("m must be at least {min}, got {m}")]
    InvalidM { m: usize, min: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("literal {literal} in clause {clause} is out of range for {variables} variables")]
    VariableOutOfRange {
        clause: usize,
        literal: Literal,
        variables: usize,
    },
    #[error("{variables} variables exceed the brute-force limit of {MAX_BRUTE_FORCE_VARIABLES}")]
    TooManyVariables { variables: usize },
    #[error("instance is not {p}-LIT {q}-SAT: {violation}")]
    NotPlitQsat {
        p: usize,
        q: usize,
        violation: PlitViolation,
    },
    #[error("no clause-saturating matching: {0}")]
    MatchingFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("certificate failed validation: {0}")]
    Certificate(String),
}

impl From<crate::budget::BudgetExceeded> for SatError {
    fn from(e: crate::budget::BudgetExceeded) -> Self {
        SatError::Solve(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Literal {
    pub variable: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(variable: usize) -> Self {
        Literal {
            variable,
            positive: true,
        }
    }

    pub fn neg(variable: usize) -> Self {
        Literal {
            variable,
            positive: false,
        }
    }

    pub fn complement(self) -> Self {
        Literal {
            variable: self.variable,
            positive: !self.positive,
        }
    }

    /// DIMACS encoding `±(variable + 1)`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn is_satisfied_by(self, assignment: &[bool]) -> bool {
        assignment[self.variable] == self.positive
    }
}

/// Variable first, then the positive literal before its complement.
impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.variable, !self.positive).cmp(&(other.variable, !other.positive))
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A sorted multiset of literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Clause(Vec<Literal>);

impl Clause {
    /// Sorts the literals; `None` for an empty clause.
    pub fn new(mut literals: Vec<Literal>) -> Option<Self> {
        if literals.is_empty() {
            return None;
        }
        literals.sort();
        Some(Clause(literals))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.0.iter().any(|l| l.is_satisfied_by(assignment))
    }
}

/// How a generated instance was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationMeta {
    pub m: usize,
    pub r: usize,
    pub level: usize,
    pub split_rule: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfInstance {
    variable_count: usize,
    clauses: Vec<Clause>,
    meta: Option<GenerationMeta>,
}

impl CnfInstance {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self, SatError> {
        for (i, c) in clauses.iter().enumerate() {
            if let Some(&l) = c.literals().iter().find(|l| l.variable >= variable_count) {
                return Err(SatError::VariableOutOfRange {
                    clause: i,
                    literal: l,
                    variables: variable_count,
                });
            }
        }
        Ok(CnfInstance {
            variable_count,
            clauses,
            meta: None,
        })
    }

    /// Builds from raw literal lists, sorting each clause.
    pub fn from_literals(variable_count: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, SatError> {
        let clauses = clauses
            .into_iter()
            .enumerate()
            .map(|(i, c)| Clause::new(c).ok_or(SatError::EmptyClause(i)))
            .collect::<Result<Vec<_>, _>>()?;
        CnfInstance::new(variable_count, clauses)
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn meta(&self) -> Option<&GenerationMeta> {
        self.meta.as_ref()
    }

    pub fn literal_count(&self) -> usize {
        self.clauses.iter().map(Clause::len).sum()
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count && self.clauses.iter().all(|c| c.is_satisfied_by(assignment))
    }

    /// Occurrences of each literal across the instance.
    pub fn literal_occurrences(&self) -> BTreeMap<Literal, usize> {
        let mut counts = BTreeMap::new();
        for l in self.clauses.iter().flat_map(|c| c.literals()) {
            *counts.entry(*l).or_insert(0) += 1;
        }
        counts
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlitViolation {
    ClauseSize { clause: usize, size: usize },
    LiteralCount { literal: i64, count: usize },
}

impl fmt::Display for PlitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlitViolation::ClauseSize { clause, size } => write!(f, "clause {clause} has {size} literals"),
            PlitViolation::LiteralCount { literal, count } => write!(f, "literal {literal} occurs {count} times"),
        }
    }
}

/// `Ok` iff every clause has exactly `q` literals and every literal occurs
/// at most `p` times; otherwise the first violation (clauses in order, then
/// literals in canonical order).
pub fn validate_plit_qsat(inst: &CnfInstance, p: usize, q: usize) -> Result<(), PlitViolation> {
    if let Some((clause, c)) = inst.clauses.iter().enumerate().find(|(_, c)| c.len() != q) {
        return Err(PlitViolation::ClauseSize { clause, size: c.len() });
    }
    match inst.literal_occurrences().into_iter().find(|&(_, n)| n > p) {
        Some((l, count)) => Err(PlitViolation::LiteralCount {
            literal: l.to_dimacs(),
            count,
        }),
        None => Ok(()),
    }
}

fn ceil_log2(m: usize) -> usize {
    m.next_power_of_two().trailing_zeros() as usize
}

/// The instances `I_0, ..., I_r` of the recursion, `r = ⌈log₂ m⌉`.
///
/// `I_0` is `(a ∨ … ∨ a) ∧ (ā ∨ … ∨ ā)` with `2m - 2^r` copies each. Level
/// `i` replaces each clause `x` of level `i-1` (in order) by `x⁺` then
/// `x⁻`: a fresh variable `b_x` (numbered in clause order), the sorted
/// literals of `x` dealt alternately into two groups, `x⁺` = first group +
/// `m` copies of `b_x`, `x⁻` = second group + `m` copies of `b̄_x`.
pub fn gen_unsat_levels(m: usize) -> Result<Vec<CnfInstance>, SatError> {
    if m < 2 {
        return Err(SatError::InvalidM { m, min: 2 });
    }
    let r = ceil_log2(m);
    let width = 2 * m - (1 << r);
    let meta = |level| GenerationMeta {
        m,
        r,
        level,
        split_rule: SPLIT_RULE,
    };
    let mut level = CnfInstance {
        variable_count: 1,
        clauses: vec![
            Clause(vec![Literal::pos(0); width]),
            Clause(vec![Literal::neg(0); width]),
        ],
        meta: Some(meta(0)),
    };
    let mut levels = vec![level.clone()];
    for i in 1..=r {
        let mut next = Vec::with_capacity(2 * level.clauses.len());
        let mut variables = level.variable_count;
        for x in &level.clauses {
            let b = variables;
            variables += 1;
            let (mut plus, mut minus) = (Vec::new(), Vec::new());
            for (j, &l) in x.literals().iter().enumerate() {
                if j % 2 == 0 {
                    plus.push(l);
                } else {
                    minus.push(l);
                }
            }
            plus.extend(std::iter::repeat_n(Literal::pos(b), m));
            minus.extend(std::iter::repeat_n(Literal::neg(b), m));
            next.push(Clause::new(plus).expect("nonempty"));
            next.push(Clause::new(minus).expect("nonempty"));
        }
        level = CnfInstance {
            variable_count: variables,
            clauses: next,
            meta: Some(meta(i)),
        };
        levels.push(level.clone());
    }
    Ok(levels)
}

/// The final level `I_r`: an unsatisfiable `m`-LIT `(2m-1)`-SAT instance
/// with `2^{r+1}` clauses over `2^{r+1} - 1` variables.
pub fn gen_unsat_family(m: usize) -> Result<CnfInstance, SatError> {
    Ok(gen_unsat_levels(m)?.pop().expect("at least one level"))
}

/// A `2m`-coloring (colors `1..=2m`) of the independence graph of
/// [`gen_unsat_family`]`(m)`, built alongside the recursion.
///
/// `I_0` is a clique colored `1, 2, …`. For a parent clause split into
/// groups with color sets `C⁺` and `C⁻`, the copies of `b̄` take `C⁺`, the
/// copies of `b` take `C⁻`, and the leftover colors go to the remaining
/// copies (`b` first). Old occurrences keep their colors.
pub fn family_coloring(m: usize) -> Result<Vec<usize>, SatError> {
    let levels = gen_unsat_levels(m)?;
    let k = 2 * m;
    // colors per clause, aligned with the sorted literal order
    let mut colors: Vec<Vec<usize>> = {
        let w = levels[0].clauses[0].len();
        vec![(1..=w).collect(), (w + 1..=2 * w).collect()]
    };
    for _ in 1..levels.len() {
        let mut next = Vec::with_capacity(2 * colors.len());
        for parent in &colors {
            let plus: Vec<usize> = parent.iter().step_by(2).copied().collect();
            let minus: Vec<usize> = parent.iter().skip(1).step_by(2).copied().collect();
            let mut rest = (1..=k).filter(|c| !parent.contains(c));
            // x⁺ = group 1 then the b copies; x⁻ = group 2 then the b̄ copies
            let mut b: Vec<usize> = minus.clone();
            b.extend(rest.by_ref().take(m - minus.len()));
            let mut b_bar: Vec<usize> = plus.clone();
            b_bar.extend(rest.take(m - plus.len()));
            next.push(plus.into_iter().chain(b).collect());
            next.push(minus.into_iter().chain(b_bar).collect());
        }
        colors = next;
    }
    Ok(colors.concat())
}

/// Lexicographically least satisfying assignment (`false < true`, variable
/// 0 most significant), by exhaustive backtracking.
pub fn is_satisfiable(inst: &CnfInstance) -> Result<Option<Vec<bool>>, SatError> {
    let n = inst.variable_count;
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(SatError::TooManyVariables { variables: n });
    }
    // clauses become decidable once their largest variable is assigned
    let mut closing: Vec<Vec<&Clause>> = vec![Vec::new(); n];
    for c in &inst.clauses {
        let last = c.literals().last().expect("clauses are nonempty").variable;
        closing[last].push(c);
    }
    let mut assignment = vec![false; n];
    fn go(v: usize, assignment: &mut Vec<bool>, closing: &[Vec<&Clause>]) -> bool {
        if v == assignment.len() {
            return true;
        }
        for value in [false, true] {
            assignment[v] = value;
            let ok = closing[v].iter().all(|c| c.is_satisfied_by(assignment));
            if ok && go(v + 1, assignment, closing) {
                return true;
            }
        }
        assignment[v] = false;
        false
    }
    Ok(go(0, &mut assignment, &closing).then_some(assignment))
}

/// Satisfies an `m`-LIT `2m`-SAT instance by matching every clause to a
/// distinct variable it mentions and setting that variable to satisfy it.
/// Such a matching exists by Hall's condition: `k` clauses hold `2mk`
/// literal occurrences, and one variable accounts for at most `2m`.
/// Unmatched variables default to `true`.
pub fn hall_satisfier(inst: &CnfInstance, m: usize) -> Result<Vec<bool>, SatError> {
    if m < 1 {
        return Err(SatError::InvalidM { m, min: 1 });
    }
    validate_plit_qsat(inst, m, 2 * m).map_err(|violation| SatError::NotPlitQsat {
        p: m,
        q: 2 * m,
        violation,
    })?;
    let adj: Vec<Vec<usize>> = inst
        .clauses
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = c.literals().iter().map(|l| l.variable).collect();
            vs.dedup();
            vs
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; inst.variable_count];

    fn augment(c: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &v in &adj[c] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match owner[v] {
                None => true,
                Some(d) => augment(d, adj, owner, seen),
            };
            if free {
                owner[v] = Some(c);
                return true;
            }
        }
        false
    }

    for c in 0..adj.len() {
        // take a free variable outright when there is one
        if let Some(&v) = adj[c].iter().find(|&&v| owner[v].is_none()) {
            owner[v] = Some(c);
            continue;
        }
        let mut seen = vec![false; inst.variable_count];
        if !augment(c, &adj, &mut owner, &mut seen) {
            let matched = owner.iter().filter(|o| o.is_some()).count();
            return Err(SatError::MatchingFailed(format!(
                "clause {c} ({:?}) unmatched after {matched} variables were assigned; this contradicts Hall's condition",
                inst.clauses[c].literals().iter().map(|l| l.to_dimacs()).collect::<Vec<_>>()
            )));
        }
    }
    let mut assignment = vec![true; inst.variable_count];
    for (v, o) in owner.iter().enumerate() {
        if let Some(c) = *o {
            let lit = inst.clauses[c]
                .literals()
                .iter()
                .find(|l| l.variable == v)
                .expect("matched variable occurs in its clause");
            assignment[v] = lit.positive;
        }
    }
    debug_assert!(inst.is_satisfied_by(&assignment));
    Ok(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lits(inst: &CnfInstance) -> Vec<Vec<i64>> {
        inst.clauses()
            .iter()
            .map(|c| c.literals().iter().map(|l| l.to_dimacs()).collect())
            .collect()
    }

    #[test]
    fn literal_order_and_complement() {
        assert!(Literal::pos(0) < Literal::neg(0));
        assert!(Literal::neg(0) < Literal::pos(1));
        assert_eq!(Literal::pos(3).complement().complement(), Literal::pos(3));
    }

    #[test]
    fn family_m2_matches_small_instance() {
        let inst = gen_unsat_family(2).unwrap();
        assert_eq!(inst.variable_count(), 3);
        // (a b b)(a ~b ~b)(~a c c)(~a ~c ~c)
        assert_eq!(
            lits(&inst),
            vec![vec![1, 2, 2], vec![1, -2, -2], vec![-1, 3, 3], vec![-1, -3, -3]]
        );
        assert_eq!(validate_plit_qsat(&inst, 2, 3), Ok(()));
        assert_eq!(
            validate_plit_qsat(&inst, 1, 3),
            Err(PlitViolation::LiteralCount { literal: 1, count: 2 })
        );
        assert_eq!(is_satisfiable(&inst).unwrap(), None);
    }

    #[test]
    fn family_m4_matches_displayed_levels() {
        let levels = gen_unsat_levels(4).unwrap();
        assert_eq!(levels.len(), 3);
        assert_eq!(lits(&levels[0]), vec![vec![1; 4], vec![-1; 4]]);
        assert_eq!(lits(&levels[1])[1], vec![1, 1, -2, -2, -2, -2]);
        let i2 = lits(&levels[2]);
        // a=1 b=2 c=3 d=4 e=5 f=6 g=7
        assert_eq!(i2[0], vec![1, 2, 2, 4, 4, 4, 4]);
        assert_eq!(i2[3], vec![1, -2, -2, -5, -5, -5, -5]);
        assert_eq!(i2[7], vec![-1, -3, -3, -7, -7, -7, -7]);
        for (i, level) in levels.iter().enumerate() {
            let q = 8 - (1 << (2 - i));
            assert_eq!(validate_plit_qsat(level, 4, q), Ok(()), "level {i}");
            assert_eq!(is_satisfiable(level).unwrap(), None);
            assert_eq!(level.meta().unwrap().level, i);
        }
    }

    #[test]
    fn family_m3_counts() {
        let inst = gen_unsat_family(3).unwrap();
        assert_eq!((inst.clauses().len(), inst.variable_count()), (8, 7));
        assert!(inst.clauses().iter().all(|c| c.len() == 5));
        assert_eq!(validate_plit_qsat(&inst, 3, 5), Ok(()));
        assert!(gen_unsat_family(1).is_err());
    }

    #[test]
    fn satisfiable_examples() {
        let inst = CnfInstance::from_literals(1, vec![vec![Literal::pos(0), Literal::pos(0)]]).unwrap();
        assert_eq!(is_satisfiable(&inst).unwrap(), Some(vec![true]));
        let inst = CnfInstance::from_literals(2, vec![vec![Literal::pos(1)], vec![Literal::neg(0)]]).unwrap();
        assert_eq!(is_satisfiable(&inst).unwrap(), Some(vec![false, true]));
        let big = CnfInstance::new(25, vec![]).unwrap();
        assert!(matches!(is_satisfiable(&big), Err(SatError::TooManyVariables { .. })));
    }

    #[test]
    fn hall_examples() {
        let inst = CnfInstance::from_literals(
            2,
            vec![
                vec![Literal::pos(0), Literal::pos(1)],
                vec![Literal::neg(0), Literal::neg(1)],
            ],
        )
        .unwrap();
        assert_eq!(hall_satisfier(&inst, 1).unwrap(), vec![true, false]);

        let inst = CnfInstance::from_literals(
            1,
            vec![
                vec![Literal::pos(0), Literal::pos(0)],
                vec![Literal::neg(0), Literal::neg(0)],
            ],
        )
        .unwrap();
        assert!(matches!(hall_satisfier(&inst, 1), Err(SatError::NotPlitQsat { .. })));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            CnfInstance::from_literals(1, vec![vec![Literal::pos(1)]]),
            Err(SatError::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            CnfInstance::from_literals(1, vec![vec![]]),
            Err(SatError::EmptyClause(0))
        ));
    }
}
