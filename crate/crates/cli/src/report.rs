//! Verification results, the JSON envelope and the exit-code contract.

use std::time::Instant;

use chromstab::constructions::{Claim, ClaimStatus, Value};
use serde::Serialize;

/// Bumped whenever a JSON field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

pub mod exit {
    pub const OK: u8 = 0;
    pub const CLAIM_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INCONCLUSIVE: u8 = 3;
}

pub use chromstab::constructions::ClaimStatus as Status;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub claim_id: String,
    pub status: Status,
    pub computed: serde_json::Value,
    pub expected: serde_json::Value,
    pub runtime_ms: u64,
}

/// What a single check produced, before timing is attached.
pub struct Outcome {
    pub status: Status,
    pub computed: serde_json::Value,
    pub expected: serde_json::Value,
}

impl Outcome {
    pub fn new(status: Status, computed: impl Serialize, expected: impl Serialize) -> Self {
        Outcome {
            status,
            computed: to_json(computed),
            expected: to_json(expected),
        }
    }

    /// Compares against a claim; `None` means the budget ran out.
    pub fn claim(computed: Option<Value>, claim: &Claim) -> Self {
        let status = match computed {
            None => Status::Inconclusive,
            Some(v) if claim.holds(v) => Status::Pass,
            Some(_) => Status::Fail,
        };
        Outcome::new(status, computed, claim.to_string())
    }

    pub fn check(ok: bool, computed: impl Serialize, expected: impl Serialize) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Outcome::new(status, computed, expected)
    }

    pub fn inconclusive(reason: impl Into<String>, expected: impl Serialize) -> Self {
        Outcome::new(Status::Inconclusive, reason.into(), expected)
    }
}

fn to_json(v: impl Serialize) -> serde_json::Value {
    serde_json::to_value(v).expect("plain data always serializes")
}

/// Runs `f` and stamps the outcome with its id and wall time.
pub fn timed(claim_id: impl Into<String>, f: impl FnOnce() -> Outcome) -> VerificationResult {
    let start = Instant::now();
    let o = f();
    VerificationResult {
        claim_id: claim_id.into(),
        status: o.status,
        computed: o.computed,
        expected: o.expected,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Any failure wins, then any inconclusive result.
pub fn exit_code(results: &[VerificationResult]) -> u8 {
    if results.iter().any(|r| r.status == ClaimStatus::Fail) {
        exit::CLAIM_FAILED
    } else if results.iter().any(|r| r.status == ClaimStatus::Inconclusive) {
        exit::INCONCLUSIVE
    } else {
        exit::OK
    }
}

pub fn sort_results(results: &mut [VerificationResult]) {
    results.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
}

#[derive(Debug, Serialize)]
pub struct VerifyReport<'a> {
    pub schema_version: u32,
    pub suite: &'a str,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub results: &'a [VerificationResult],
}

impl<'a> VerifyReport<'a> {
    pub fn new(suite: &'a str, results: &'a [VerificationResult]) -> Self {
        let count = |s| results.iter().filter(|r| r.status == s).count();
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            suite,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            inconclusive: count(Status::Inconclusive),
            results,
        }
    }
}

pub fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Inconclusive => "INCONCLUSIVE",
    }
}

/// One line per claim, for terminals.
pub fn render_table(results: &[VerificationResult]) -> String {
    let width = results.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:<12} {:<width$}  computed={}  expected={}  ({} ms)\n",
            status_label(r.status),
            r.claim_id,
            r.computed,
            r.expected,
            r.runtime_ms,
        ));
    }
    out
}
