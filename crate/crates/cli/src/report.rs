//! Machine-readable verification reports.

use serde::Serialize;

use crate::config::RunConfig;

/// One named comparison: `value` is the measured error, `pass` is
/// `value ≤ tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub paper_ref: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(check: impl Into<String>, paper_ref: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check {
            check: check.into(),
            paper_ref: paper_ref.into(),
            value,
            tolerance,
            pass: value.is_finite() && value <= tolerance,
            note: None,
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(check: impl Into<String>, paper_ref: impl Into<String>, tolerance: f64, note: impl Into<String>) -> Self {
        Check {
            check: check.into(),
            paper_ref: paper_ref.into(),
            value: f64::INFINITY,
            tolerance,
            pass: false,
            note: Some(note.into()),
        }
    }

    /// A lower-bound check: passes when `value ≥ minimum`.
    pub fn separation(check: impl Into<String>, paper_ref: impl Into<String>, value: f64, minimum: f64) -> Self {
        Check {
            check: check.into(),
            paper_ref: paper_ref.into(),
            value,
            tolerance: minimum,
            pass: value.is_finite() && value >= minimum,
            note: Some("lower bound".into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub suites: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn new(config: RunConfig, suites: Vec<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.check.cmp(&b.check));
        let passed = checks.iter().all(|c| c.pass);
        Report {
            config,
            suites,
            checks,
            passed,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        // infinite values are not representable in JSON; they become null
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
