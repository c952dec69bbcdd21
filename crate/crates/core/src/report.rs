//! Structured pass/fail evidence for verification runs.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A search ran to completion without finding a candidate.
    NoCandidate,
    /// A search stopped at its budget before covering the whole space.
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceKind {
    Count,
    Witness,
    Counterexample,
    Note,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub label: String,
    pub value: Value,
}

/// A named check with its evidence. The status only becomes [`Status::Fail`]
/// through [`VerificationReport::counterexample`], so every failing report
/// carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub name: String,
    status: Status,
    pub evidence: Vec<Evidence>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            name: name.into(),
            status: Status::Pass,
            evidence: Vec::new(),
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn push(&mut self, kind: EvidenceKind, label: &str, value: impl Serialize) {
        self.evidence.push(Evidence {
            kind,
            label: label.to_string(),
            value: serde_json::to_value(value).expect("evidence serializes"),
        });
    }

    pub fn count(&mut self, label: &str, value: impl Serialize) -> &mut Self {
        self.push(EvidenceKind::Count, label, value);
        self
    }

    pub fn witness(&mut self, label: &str, value: impl Serialize) -> &mut Self {
        self.push(EvidenceKind::Witness, label, value);
        self
    }

    pub fn note(&mut self, label: &str, value: impl Serialize) -> &mut Self {
        self.push(EvidenceKind::Note, label, value);
        self
    }

    /// Records a counterexample and marks the report failed.
    pub fn counterexample(&mut self, label: &str, value: impl Serialize) -> &mut Self {
        self.push(EvidenceKind::Counterexample, label, value);
        self.status = Status::Fail;
        self
    }

    /// Sets a search outcome. A failed report stays failed.
    pub fn set_search_status(&mut self, status: Status) {
        if self.status != Status::Fail && status != Status::Fail {
            self.status = status;
        }
    }

    pub fn get(&self, label: &str) -> Option<&Value> {
        self.evidence
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.value)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Evidence> {
        self.evidence
            .iter()
            .filter(|e| e.kind == EvidenceKind::Counterexample)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let status = serde_json::to_value(self.status).expect("status serializes");
        format!("{}: {}", self.name, status.as_str().unwrap_or("?"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_requires_counterexample() {
        let mut r = VerificationReport::new("demo");
        r.count("vertices", 6);
        assert!(r.passed());
        r.counterexample("edge", (0, 1));
        assert_eq!(r.status(), Status::Fail);
        assert_eq!(r.counterexamples().count(), 1);
        r.set_search_status(Status::Pass);
        assert_eq!(r.status(), Status::Fail);
    }

    #[test]
    fn json_shape() {
        let mut r = VerificationReport::new("demo");
        r.count("vertices", 6).note("remark", "text");
        r.set_search_status(Status::BudgetExhausted);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["status"], "budget_exhausted");
        assert_eq!(v["evidence"][0]["kind"], "count");
        assert_eq!(v["evidence"][0]["value"], 6);
        assert_eq!(r.summary(), "demo: budget_exhausted");
        assert_eq!(r.get("remark").unwrap(), "text");
    }
}
