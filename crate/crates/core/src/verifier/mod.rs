//! Mechanical verification harness.
//!
//! Every check produces a [`CheckResult`] whose evidence carries the numbers
//! it was decided on, so a reader can recompute the verdict by hand.

mod analytic;
mod lemma41;
mod refdata;
mod table1;
mod theorem;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::arith::Factorization;

pub use analytic::{check_analytic_bound, ANALYTIC_MIN_DEGREE, REQUIRED_RELATIVE_MARGIN};
pub use lemma41::{lemma41_degrees, verify_lemma41, verify_lemma41_sharded, DEFAULT_N_MAX};
pub use refdata::{verify_reference_data, AtlasEntry, ATLAS_CROSS_REFERENCE};
pub use table1::{check_corollary34, check_independence_forcing, verify_table1, verify_table1_with};
pub use theorem::{
    residual_orders, replay_all, replay_all_with, replay_theorem, replay_theorem_with, theorem_cases,
    CandidateCase, Fact, TheoremCase,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub statement: String,
    pub passed: bool,
    pub evidence: Map<String, Value>,
}

impl CheckResult {
    pub fn new(check_id: impl Into<String>, statement: impl Into<String>, passed: bool) -> Self {
        Self {
            check_id: check_id.into(),
            statement: statement.into(),
            passed,
            evidence: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.evidence.insert(key.to_string(), value.into());
        self
    }

    /// Adds `key` as a number (or decimal string when it exceeds `u64`) and
    /// `key_factored` as its factorization.
    pub fn with_factored(mut self, key: &str, value: &Factorization) -> Self {
        self.evidence.insert(key.to_string(), number(value));
        self.evidence
            .insert(format!("{key}_factored"), Value::from(value.to_string()));
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.check_id, self.statement)
    }
}

/// JSON number for values that fit `u64`, decimal string otherwise.
pub(crate) fn number(value: &Factorization) -> Value {
    match value.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(value.value_string()),
    }
}

pub fn all_passed(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_checks(checks: &[CheckResult]) -> Self {
        if all_passed(checks) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One replayed case of the recognition proof for a single degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub n: u32,
    pub verdict: Verdict,
    pub checks: Vec<CheckResult>,
}

impl CaseReport {
    pub fn new(n: u32, checks: Vec<CheckResult>) -> Self {
        Self { n, verdict: Verdict::from_checks(&checks), checks }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Section {
    pub fn new(name: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        Self { name: name.into(), passed: all_passed(&checks), checks }
    }
}

impl From<CaseReport> for Section {
    fn from(case: CaseReport) -> Self {
        Section::new(format!("theorem.n={}", case.n), case.checks)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub sections: Vec<Section>,
}

impl VerificationReport {
    pub fn new(sections: Vec<Section>) -> Self {
        Self { passed: sections.iter().all(|s| s.passed), sections }
    }

    pub fn checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.sections.iter().flat_map(|s| s.checks.iter())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks().filter(|c| !c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            let passed = section.checks.iter().filter(|c| c.passed).count();
            out.push_str(&format!(
                "== {} ({passed}/{} checks pass)\n",
                section.name,
                section.checks.len()
            ));
            for check in &section.checks {
                out.push_str(&format!("{check}\n"));
            }
        }
        let total = self.checks().count();
        let failed = self.failures().count();
        out.push_str(&format!(
            "{}: {} of {total} checks pass\n",
            if self.passed { "PASS" } else { "FAIL" },
            total - failed
        ));
        out
    }
}
