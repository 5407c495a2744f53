//! Structured pass/fail records tying a computation to a named claim.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
    Skipped,
}

/// One verified (or failed, or skipped) property inside a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A machine-readable record for one claim: per-property results, the
/// computed values involved, and the wall-clock time spent.
#[derive(Debug, Clone, Serialize)]
pub struct PaperReport {
    pub claim_id: String,
    pub location: String,
    pub status: ReportStatus,
    pub checks: Vec<PropertyCheck>,
    pub values: BTreeMap<String, String>,
    pub runtime_ms: u64,
}

impl PaperReport {
    pub fn new(claim_id: impl Into<String>, location: impl Into<String>) -> PaperReport {
        PaperReport {
            claim_id: claim_id.into(),
            location: location.into(),
            status: ReportStatus::Pass,
            checks: Vec::new(),
            values: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        if !passed {
            self.status = ReportStatus::Fail;
        }
        self.checks.push(PropertyCheck { name: name.into(), passed, detail: detail.into() });
    }

    pub fn value(&mut self, key: impl Into<String>, val: impl ToString) {
        self.values.insert(key.into(), val.to_string());
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.status = ReportStatus::Skipped;
        self.checks.push(PropertyCheck {
            name: "skipped".into(),
            passed: true,
            detail: reason.into(),
        });
    }

    pub fn finish(mut self, started: Instant) -> PaperReport {
        self.runtime_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    /// One-line human rendering.
    pub fn summary_line(&self) -> String {
        let tag = match self.status {
            ReportStatus::Pass => "PASS",
            ReportStatus::Fail => "FAIL",
            ReportStatus::Skipped => "SKIP",
        };
        let detail = match self.status {
            ReportStatus::Fail => self
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect::<Vec<_>>()
                .join("; "),
            _ => self
                .checks
                .first()
                .map(|c| c.detail.clone())
                .unwrap_or_default(),
        };
        format!(
            "{tag}  {:<28} {:<34} {} ({} ms)",
            self.claim_id, self.location, detail, self.runtime_ms
        )
    }
}

/// A full run of the claim suite.
#[derive(Debug, Clone, Serialize)]
pub struct ReportSet {
    pub schema: u32,
    pub profile: String,
    pub reports: Vec<PaperReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl ReportSet {
    pub fn new(profile: impl Into<String>, reports: Vec<PaperReport>) -> ReportSet {
        let passed = reports.iter().filter(|r| r.status == ReportStatus::Pass).count();
        let failed = reports.iter().filter(|r| r.status == ReportStatus::Fail).count();
        let skipped = reports.iter().filter(|r| r.status == ReportStatus::Skipped).count();
        ReportSet { schema: 1, profile: profile.into(), reports, passed, failed, skipped }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}
