//! Verification reports: one JSON document per claim.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A value stated with the claim being reproduced.
    Stated,
    /// Established here by an independent second computation.
    Derived,
    /// Immediate from a definition.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub text: String,
    pub kind: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub anchors: Vec<Anchor>,
    pub checks: Vec<Check>,
    /// True iff every check passes.
    pub pass: bool,
    pub runtime_ms: u64,
}

/// Accumulates checks for one claim; [`ReportBuilder::finish`] stamps the
/// verdict and the elapsed time.
pub struct ReportBuilder {
    claim_id: String,
    params: BTreeMap<String, String>,
    anchors: Vec<Anchor>,
    checks: Vec<Check>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(claim_id: impl Into<String>) -> Self {
        ReportBuilder {
            claim_id: claim_id.into(),
            params: BTreeMap::new(),
            anchors: Vec::new(),
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn anchor(mut self, text: &str, kind: Provenance) -> Self {
        self.anchors.push(Anchor {
            text: text.to_string(),
            kind,
        });
        self
    }

    pub fn eq<T: PartialEq + Display>(&mut self, description: &str, expected: T, computed: T, provenance: Provenance) {
        self.checks.push(Check {
            description: description.to_string(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            provenance,
        });
    }

    pub fn holds(&mut self, description: &str, computed: bool, provenance: Provenance) {
        self.eq(description, true, computed, provenance);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            pass: self.checks.iter().all(|c| c.pass),
            claim_id: self.claim_id,
            params: self.params,
            anchors: self.anchors,
            checks: self.checks,
            runtime_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_conjunction() {
        let mut b = ReportBuilder::new("x");
        b.eq("one", 1, 1, Provenance::Trivial);
        assert!(b.finish().pass);
        let mut b = ReportBuilder::new("x");
        b.eq("one", 1, 1, Provenance::Trivial);
        b.holds("no", false, Provenance::Stated);
        let r = b.finish();
        assert!(!r.pass);
        assert_eq!(r.checks[1].expected, "true");
    }

    #[test]
    fn empty_report_passes() {
        assert!(ReportBuilder::new("empty").finish().pass);
    }
}
