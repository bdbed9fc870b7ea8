//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

use crate::io::{FunctionFile, LinkageFile, SystemFile};
use crate::lab::enumerate::EnumerationSpec;

/// Instance parameters a report was produced under.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportSpec {
    pub n: usize,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codomain_max: Option<i64>,
}

impl ReportSpec {
    pub fn from_enumeration(spec: &EnumerationSpec) -> Self {
        ReportSpec {
            n: spec.n,
            class: spec.class.name().to_string(),
            k: spec.k,
            samples: None,
            codomain_max: None,
        }
    }
}

/// One failed instance, embedded in the on-disk file formats so it can be
/// replayed through the CLI.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportFailure {
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<FunctionFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linkage: Option<LinkageFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ReportFailure {
    pub fn new(case: impl Into<String>) -> Self {
        ReportFailure {
            case: case.into(),
            system: None,
            function: None,
            linkage: None,
            witness: None,
        }
    }
}

/// Pass/fail evidence for one theorem suite over one instance space.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub theorem: String,
    pub spec: ReportSpec,
    pub seed: u64,
    pub instances: u64,
    pub passes: u64,
    pub failures: Vec<ReportFailure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.instances
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Deterministic form for byte-comparison across runs: wall-clock time is
    /// the one non-reproducible field, so it is zeroed here.
    pub fn canonical_json(&self) -> String {
        let mut clone = self.clone();
        clone.elapsed_ms = 0;
        serde_json::to_string_pretty(&clone).expect("serializable")
    }
}

/// Builder keeping the `passes + failures = instances` invariant and the
/// canonical failure order (aggregation must be order-independent, so
/// failures are sorted before the report is sealed).
pub(crate) struct ReportBuilder {
    theorem: String,
    spec: ReportSpec,
    seed: u64,
    instances: u64,
    failures: Vec<ReportFailure>,
    started: std::time::Instant,
}

impl ReportBuilder {
    pub fn new(theorem: &str, spec: ReportSpec, seed: u64) -> Self {
        Self {
            theorem: theorem.to_string(),
            spec,
            seed,
            instances: 0,
            failures: Vec::new(),
            started: std::time::Instant::now(),
        }
    }

    pub fn pass(&mut self) {
        self.instances += 1;
    }

    pub fn fail(&mut self, failure: ReportFailure) {
        self.instances += 1;
        self.failures.push(failure);
    }

    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> ReportFailure) {
        if ok {
            self.pass()
        } else {
            self.fail(failure())
        }
    }

    pub fn finish(mut self) -> VerificationReport {
        self.failures.sort_by(|a, b| a.case.cmp(&b.case));
        VerificationReport {
            theorem: self.theorem,
            spec: self.spec,
            seed: self.seed,
            instances: self.instances,
            passes: self.instances - self.failures.len() as u64,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> ReportSpec {
        ReportSpec {
            n: 2,
            class: "antimatroid".into(),
            k: None,
            samples: None,
            codomain_max: None,
        }
    }

    #[test]
    fn builder_keeps_counts_consistent() {
        let mut b = ReportBuilder::new("demo", spec(), 1);
        b.pass();
        b.pass();
        b.fail(ReportFailure::new("b-case"));
        b.fail(ReportFailure::new("a-case"));
        let report = b.finish();
        assert_eq!(report.instances, 4);
        assert_eq!(report.passes, 2);
        assert_eq!(report.failures.len(), 2);
        assert_eq!(report.failures[0].case, "a-case");
        assert!(!report.passed());
    }

    #[test]
    fn canonical_json_zeroes_elapsed_only() {
        let mut b = ReportBuilder::new("demo", spec(), 1);
        b.pass();
        let mut report = b.finish();
        report.elapsed_ms = 123;
        let canonical = report.canonical_json();
        assert!(canonical.contains("\"elapsed_ms\": 0"));
        assert!(canonical.contains("\"instances\": 1"));
        let parsed: VerificationReport = serde_json::from_str(&canonical).unwrap();
        assert!(parsed.passed());
    }
}
