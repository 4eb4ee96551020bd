//! The JSON run report.

use std::fs;
use std::path::Path;

use anyhow::Context;
use scs_core::bounds::{CampaignSummary, LemmaTally, Violation};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub seed: Option<u64>,
    pub timestamp: String,
    pub instance: Option<InstanceSummary>,
    pub results: Vec<ResultRow>,
    pub verification: Option<Verification>,
}

impl RunReport {
    pub fn new(command: String, seed: Option<u64>) -> Self {
        RunReport {
            command,
            seed,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            instance: None,
            results: Vec::new(),
            verification: None,
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let body = serde_json::to_string_pretty(self)?;
        fs::write(path, body + "\n").with_context(|| format!("writing {}", path.display()))
    }
}

#[derive(Debug, Serialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub total_length: usize,
}

#[derive(Debug, Serialize)]
pub struct ResultRow {
    pub algo: String,
    pub length: usize,
    pub overlap: i64,
    pub order: Vec<usize>,
    /// Wall time in milliseconds.
    pub ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct SuiteCounts {
    pub suite: String,
    pub trials: u64,
    pub run: u64,
    pub held: u64,
    pub failed: u64,
    pub not_applicable: u64,
    pub per_lemma: BTreeMap<String, LemmaTally>,
}

#[derive(Debug, Default, Serialize)]
pub struct Verification {
    pub run: u64,
    pub held: u64,
    pub failed: u64,
    pub suites: Vec<SuiteCounts>,
    pub violations: Vec<SuiteViolation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<SuiteViolation>,
}

#[derive(Debug, Serialize)]
pub struct SuiteViolation {
    pub suite: String,
    #[serde(flatten)]
    pub violation: Violation,
}

impl Verification {
    pub fn add(&mut self, s: CampaignSummary) {
        self.run += s.run;
        self.held += s.held;
        self.failed += s.failed;
        let tag = |v: Violation| SuiteViolation { suite: s.suite.clone(), violation: v };
        self.violations.extend(s.violations.into_iter().map(tag));
        self.reports.extend(s.reports.into_iter().map(tag));
        self.suites.push(SuiteCounts {
            suite: s.suite.clone(),
            trials: s.trials,
            run: s.run,
            held: s.held,
            failed: s.failed,
            not_applicable: s.not_applicable,
            per_lemma: s.per_lemma,
        });
    }
}
