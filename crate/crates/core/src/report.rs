//! Check reports shared by the command line and the test suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
            Status::Skipped => "skipped",
        }
    }
}

/// One named check.
///
/// `provenance` says what the check rests on: `example` (a worked example with
/// a known answer), `law` (an identity that must hold on every input),
/// `oracle` (agreement of two independent computations) or `computed` (a
/// reported value with no expectation attached).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub provenance: String,
    /// The answer is exact rather than a bound or a sampled verdict.
    pub certified: bool,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, status: Status, provenance: &str) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status,
            value: None,
            witness: None,
            provenance: provenance.into(),
            certified: true,
        }
    }

    pub fn law(name: impl Into<String>, ok: bool) -> CheckEntry {
        CheckEntry::new(name, Status::from_bool(ok), "law")
    }

    pub fn computed(name: impl Into<String>, value: impl Into<String>) -> CheckEntry {
        CheckEntry::new(name, Status::Pass, "computed").with_value(value)
    }

    pub fn with_value(mut self, v: impl Into<String>) -> CheckEntry {
        self.value = Some(v.into());
        self
    }

    pub fn with_witness(mut self, w: Option<String>) -> CheckEntry {
        self.witness = w;
        self
    }

    pub fn uncertified(mut self) -> CheckEntry {
        self.certified = false;
        self
    }

    pub fn provenance(mut self, p: &str) -> CheckEntry {
        self.provenance = p.into();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub checks: Vec<CheckEntry>,
}

impl AnalysisReport {
    pub fn new() -> AnalysisReport {
        AnalysisReport::default()
    }

    pub fn push(&mut self, c: CheckEntry) {
        self.checks.push(c);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: AnalysisReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    /// Sorts by name; stable, so equal names keep insertion order.
    pub fn normalize(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    /// Compact JSON of the normalized report.
    pub fn to_json(&self) -> String {
        let mut r = self.clone();
        r.normalize();
        serde_json::to_string(&r).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut r = self.clone();
        r.normalize();
        let mut out = String::new();
        for c in &r.checks {
            out.push_str(&format!("{:<7} {}", c.status.label().to_uppercase(), c.name));
            if let Some(v) = &c.value {
                out.push_str(&format!(" = {v}"));
            }
            out.push_str(&format!("  [{}{}]", c.provenance, if c.certified { "" } else { ", uncertified" }));
            if let Some(w) = &c.witness {
                out.push_str(&format!("\n        witness: {w}"));
            }
            out.push('\n');
        }
        let fails = r.checks.iter().filter(|c| c.status == Status::Fail).count();
        out.push_str(&format!("{} checks, {} failed\n", r.checks.len(), fails));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single() {
        assert_eq!(AnalysisReport::new().to_json(), r#"{"checks":[]}"#);
        let mut r = AnalysisReport::new();
        r.push(CheckEntry::law("b", true));
        r.push(CheckEntry::computed("a", "0"));
        let j = r.to_json();
        assert_eq!(j, r.to_json());
        assert!(j.find("\"a\"").unwrap() < j.find("\"b\"").unwrap());
        let back: AnalysisReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back.checks.len(), 2);
        assert!(!r.has_failures());
    }
}
